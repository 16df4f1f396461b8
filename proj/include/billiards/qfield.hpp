#ifndef BILLIARDS_QFIELD_HPP
#define BILLIARDS_QFIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>

#include "billiards/errors.hpp"

namespace billiards {

using Int = mpz_class;

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). mpq_class keeps results of arithmetic canonical; raw
/// construction goes through rational() below.
using Rational = mpq_class;

Rational rational(long num, long den = 1);
Rational rational(const Int& num, const Int& den);
Rational rational_from_strings(const std::string& num, const std::string& den);

/// Floor of a rational as an exact integer.
Int floor_rational(const Rational& x);

class AlphaSpec;
using AlphaSpecPtr = std::shared_ptr<const AlphaSpec>;

/// Defining data of the real quadratic field Q(alpha) with alpha^2 = u + v*alpha,
/// alpha the positive root (v + sqrt(v^2+4u))/2. Immutable once built.
class AlphaSpec {
  public:
    /// Validates: v^2 + 4u > 0 and not a rational square (alpha irrational),
    /// and alpha > 0. Throws InvalidParams otherwise.
    static AlphaSpecPtr make(const Rational& u, const Rational& v);

    /// Default field used throughout: alpha = sqrt(2)  (u = 2, v = 0).
    static AlphaSpecPtr sqrt2();

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    /// Discriminant v^2 + 4u of the defining relation; positive, non-square.
    const Rational& disc() const { return disc_; }

    bool same_field(const AlphaSpec& other) const {
        return this == &other || (u_ == other.u_ && v_ == other.v_);
    }

  private:
    AlphaSpec(Rational u, Rational v, Rational disc)
        : u_(std::move(u)), v_(std::move(v)), disc_(std::move(disc)) {}

    Rational u_, v_, disc_;
};

/// An element r + s*alpha of Q(alpha). Representation is unique: two elements
/// are equal iff their (r, s) pairs are. Immutable; all operations are pure.
class QElement {
  public:
    QElement(Rational r, Rational s, AlphaSpecPtr spec);

    const Rational& r() const { return r_; }
    const Rational& s() const { return s_; }
    const AlphaSpecPtr& spec() const { return spec_; }

    bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
    bool is_rational() const { return sgn(s_) == 0; }

    /// Exact sign of the real number r + s*alpha. Integer arithmetic only.
    int sign() const;

    QElement operator-() const { return QElement(-r_, -s_, spec_); }

    friend QElement operator+(const QElement& a, const QElement& b);
    friend QElement operator-(const QElement& a, const QElement& b);
    friend QElement operator*(const QElement& a, const QElement& b);
    friend QElement operator/(const QElement& a, const QElement& b);

    QElement& operator+=(const QElement& b) { return *this = *this + b; }
    QElement& operator-=(const QElement& b) { return *this = *this - b; }
    QElement& operator*=(const QElement& b) { return *this = *this * b; }
    QElement& operator/=(const QElement& b) { return *this = *this / b; }

    friend bool operator==(const QElement& a, const QElement& b) {
        a.require_same_field(b);
        return a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator!=(const QElement& a, const QElement& b) { return !(a == b); }
    friend bool operator<(const QElement& a, const QElement& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QElement& a, const QElement& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QElement& a, const QElement& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QElement& a, const QElement& b) { return (a - b).sign() >= 0; }

    void require_same_field(const QElement& other) const {
        if (spec_.get() != other.spec_.get() && !spec_->same_field(*other.spec_))
            throw SpecMismatch();
    }

  private:
    Rational r_, s_;
    AlphaSpecPtr spec_;
};

/// Canonical constructor r + s*alpha.
QElement qel(Rational r, Rational s, AlphaSpecPtr spec);
QElement qel(long r, long s, AlphaSpecPtr spec);

/// Multiplicative inverse, via the 2x2 rational system from alpha^2 = u + v*alpha.
/// Throws DivisionByZero on zero input.
QElement inv(const QElement& a);

inline int sign(const QElement& a) { return a.sign(); }

QElement abs(const QElement& a);

/// Greatest integer <= a, decided by exact sign tests (rational interval for
/// alpha, bisection-refined; no floating point anywhere).
Int floor(const QElement& a);

/// Correctly rounded decimal rendering with `digits` places after the point
/// (ties away from zero). Display only; never feeds back into exact math.
std::string to_decimal(const QElement& a, int digits);

/// Approximate double value. Diagnostics and rendering only.
double to_double(const QElement& a);

}  // namespace billiards

#endif
