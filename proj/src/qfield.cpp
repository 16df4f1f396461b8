#include "billiards/qfield.hpp"

#include <cmath>
#include <utility>

namespace billiards {

Rational rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_strings(const std::string& num, const std::string& den) {
    try {
        Int n(num, 10), d(den, 10);
        return rational(n, d);
    } catch (const std::invalid_argument&) {
        throw InvalidParams("not a decimal integer pair: \"" + num + "\", \"" + den + "\"");
    }
}

Int floor_rational(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

namespace {

bool is_rational_square(const Rational& x) {
    // Canonical x = P/Q with gcd(P,Q)=1: a rational square iff P and Q both are.
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

}  // namespace

AlphaSpecPtr AlphaSpec::make(const Rational& u, const Rational& v) {
    Rational disc = v * v + 4 * u;
    if (sgn(disc) <= 0)
        throw InvalidParams("alpha spec: v^2 + 4u must be positive");
    if (is_rational_square(disc))
        throw InvalidParams("alpha spec: v^2 + 4u is a rational square, alpha would be rational");
    // alpha = (v + sqrt(disc))/2 > 0  <=>  sqrt(disc) > -v; automatic for v >= 0,
    // otherwise equivalent to disc > v^2, i.e. u > 0.
    if (sgn(v) < 0 && !(disc > v * v))
        throw InvalidParams("alpha spec: positive root is not positive");
    return AlphaSpecPtr(new AlphaSpec(u, v, disc));
}

AlphaSpecPtr AlphaSpec::sqrt2() {
    static const AlphaSpecPtr instance = make(rational(2), rational(0));
    return instance;
}

QElement::QElement(Rational r, Rational s, AlphaSpecPtr spec)
    : r_(std::move(r)), s_(std::move(s)), spec_(std::move(spec)) {
    if (!spec_) throw InvalidParams("QElement requires an alpha spec");
}

QElement qel(Rational r, Rational s, AlphaSpecPtr spec) {
    return QElement(std::move(r), std::move(s), std::move(spec));
}

QElement qel(long r, long s, AlphaSpecPtr spec) {
    return QElement(rational(r), rational(s), std::move(spec));
}

QElement operator+(const QElement& a, const QElement& b) {
    a.require_same_field(b);
    return QElement(a.r_ + b.r_, a.s_ + b.s_, a.spec_);
}

QElement operator-(const QElement& a, const QElement& b) {
    a.require_same_field(b);
    return QElement(a.r_ - b.r_, a.s_ - b.s_, a.spec_);
}

QElement operator*(const QElement& a, const QElement& b) {
    a.require_same_field(b);
    // (r1 + s1 a)(r2 + s2 a) with a^2 = u + v a.
    const Rational& u = a.spec_->u();
    const Rational& v = a.spec_->v();
    Rational ss = a.s_ * b.s_;
    return QElement(a.r_ * b.r_ + ss * u, a.r_ * b.s_ + a.s_ * b.r_ + ss * v, a.spec_);
}

QElement inv(const QElement& a) {
    // Solve (r + s a)(x + y a) = 1: the determinant r^2 + v r s - u s^2 is the
    // field norm, zero only for a = 0.
    const Rational& u = a.spec()->u();
    const Rational& v = a.spec()->v();
    const Rational& r = a.r();
    const Rational& s = a.s();
    Rational det = r * r + v * r * s - u * s * s;
    if (sgn(det) == 0) throw DivisionByZero();
    return QElement((r + v * s) / det, -s / det, a.spec());
}

QElement operator/(const QElement& a, const QElement& b) {
    a.require_same_field(b);
    return a * inv(b);
}

int QElement::sign() const {
    if (sgn(s_) == 0) return sgn(r_);
    // r + s*alpha = (A + B*sqrt(D))/2 with A = 2r + s v, B = s, D = disc.
    Rational A = 2 * r_ + s_ * spec_->v();
    const Rational& B = s_;
    int sa = sgn(A), sb = sgn(B);
    if (sa >= 0 && sb > 0) return 1;
    if (sa <= 0 && sb < 0) return -1;
    // Opposite signs: compare A^2 against B^2 D. Equality would make D a
    // rational square, which AlphaSpec::make rejects.
    int cmp = ::cmp(A * A, B * B * spec_->disc());
    if (cmp == 0) throw InvalidParams("alpha spec discriminant is a rational square");
    return sa > 0 ? cmp : -cmp;
}

QElement abs(const QElement& a) { return a.sign() < 0 ? -a : a; }

namespace {

// sign(alpha - t) for rational t, via the element (-t) + 1*alpha.
int cmp_alpha(const AlphaSpecPtr& spec, const Rational& t) {
    return QElement(-t, rational(1), spec).sign();
}

// Open rational interval (lo, hi) containing alpha, width <= 1/(2 den(D)).
void alpha_interval(const AlphaSpecPtr& spec, Rational& lo, Rational& hi) {
    const Rational& D = spec->disc();
    Int m = D.get_num() * D.get_den();
    Int z;
    mpz_sqrt(z.get_mpz_t(), m.get_mpz_t());
    // z/den <= sqrt(D) < (z+1)/den, strict on both sides since D is non-square.
    Rational rlo = rational(z, D.get_den());
    Rational rhi = rational(z + 1, D.get_den());
    lo = (spec->v() + rlo) / 2;
    hi = (spec->v() + rhi) / 2;
}

}  // namespace

Int floor(const QElement& a) {
    if (a.is_rational()) return floor_rational(a.r());
    Rational lo, hi;
    alpha_interval(a.spec(), lo, hi);
    // a is irrational, so the enclosing interval of r + s*[lo,hi] eventually
    // pins a unique integer floor under bisection of the alpha interval.
    for (;;) {
        Rational alow = a.r() + a.s() * lo;
        Rational ahigh = a.r() + a.s() * hi;
        if (sgn(a.s()) < 0) std::swap(alow, ahigh);
        Int flo = floor_rational(alow);
        Int fhi = floor_rational(ahigh);
        if (flo == fhi) return flo;
        Rational mid = (lo + hi) / 2;
        if (cmp_alpha(a.spec(), mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
}

std::string to_decimal(const QElement& a, int digits) {
    if (digits < 1) throw InvalidParams("to_decimal requires digits >= 1");
    int sg = a.sign();
    QElement mag = sg < 0 ? -a : a;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(|a| * 10^digits), half away from zero, as an exact floor.
    QElement scaled(mag.r() * pow10 + rational(1, 2), mag.s() * pow10, mag.spec());
    Int n = floor(scaled);
    Int ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), n.get_mpz_t(), pow10.get_mpz_t());
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (sg < 0 && n != 0) out.insert(0, "-");
    return out;
}

double to_double(const QElement& a) {
    double d = a.spec()->disc().get_d();
    double alpha = (a.spec()->v().get_d() + std::sqrt(d)) / 2.0;
    return a.r().get_d() + a.s().get_d() * alpha;
}

}  // namespace billiards
