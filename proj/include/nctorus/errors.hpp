#pragma once

#include <stdexcept>
#include <string>

namespace nct {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BackendMismatch : Error {
    BackendMismatch() : Error("backend mismatch: cannot mix exact and numeric values") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by the zero scalar") {}
};
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& m = "series not invertible: lowest-order coefficient is zero")
        : Error(m) {}
};
struct FloorExceeded : Error {
    explicit FloorExceeded(int order, int floor)
        : Error("series order " + std::to_string(order) + " below configured floor -" + std::to_string(floor)) {}
};
struct CapTooSmall : Error {
    explicit CapTooSmall(const std::string& m) : Error(m) {}
};
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& m = "matrix size mismatch") : Error(m) {}
};
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& m) : Error(m) {}
};
struct PromotionError : Error {
    explicit PromotionError(const std::string& m = "coefficient promotion requested without a sampling resolution")
        : Error(m) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& m = "index out of range") : Error(m) {}
};
struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& m = "unsupported simplicial degree") : Error(m) {}
};
struct RepresentationMismatch : Error {
    explicit RepresentationMismatch(const std::string& m =
        "incompatible coefficient representations (fourier vs piecewise)") : Error(m) {}
};

} // namespace nct
