#ifndef BILLIARDS_ERRORS_HPP
#define BILLIARDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace billiards {

/// Base class for all contract violations raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero field element") {}
};

struct SpecMismatch : Error {
    SpecMismatch() : Error("operands belong to different quadratic fields") {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

struct PointOutsideTable : Error {
    explicit PointOutsideTable(const std::string& which)
        : Error("marked point lies outside the table: " + which) {}
};

struct CoincidentMarkedPoints : Error {
    CoincidentMarkedPoints() : Error("start and target points coincide") {}
};

struct DirectionOutward : Error {
    DirectionOutward() : Error("initial direction does not point strictly into the table") {}
};

struct AmbiguousCrossing : Error {
    explicit AmbiguousCrossing(std::size_t count)
        : Error("expected exactly one height crossing, found " + std::to_string(count)) {}
};

struct InvalidBlockingPoint : Error {
    explicit InvalidBlockingPoint(const std::string& msg) : Error(msg) {}
};

}  // namespace billiards

#endif
