#pragma once

#include <stdexcept>
#include <string>

namespace crmap {

struct CrmapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : CrmapError {
    DivisionByZero() : CrmapError("division by zero scalar") {}
};
struct NegativeRadicand : CrmapError {
    explicit NegativeRadicand(const std::string& what) : CrmapError("negative radicand: " + what) {}
};
struct RadicalNotRepresentable : CrmapError {
    explicit RadicalNotRepresentable(const std::string& what)
        : CrmapError("radical not representable: " + what) {}
};
struct PoleAtPoint : CrmapError {
    explicit PoleAtPoint(const std::string& what) : CrmapError("pole at point: " + what) {}
};
struct PoleAtBasePoint : CrmapError {
    explicit PoleAtBasePoint(const std::string& what) : CrmapError("pole at base point: " + what) {}
};
struct PoleOnSegre : CrmapError {
    explicit PoleOnSegre(const std::string& what) : CrmapError("pole on Segre variety: " + what) {}
};
struct DimensionMismatch : CrmapError {
    explicit DimensionMismatch(const std::string& what) : CrmapError("dimension mismatch: " + what) {}
};
struct NotVerified : CrmapError {
    explicit NotVerified(const std::string& what) : CrmapError("map not verified: " + what) {}
};
struct NonUnitaryU : CrmapError {
    explicit NonUnitaryU(const std::string& what) : CrmapError("matrix not unitary: " + what) {}
};
struct DegenerateJet : CrmapError {
    explicit DegenerateJet(const std::string& what) : CrmapError("degenerate jet: " + what) {}
};
struct ConstraintViolation : CrmapError {
    explicit ConstraintViolation(const std::string& what) : CrmapError("constraint violation: " + what) {}
};
struct ShapeMismatch : CrmapError {
    explicit ShapeMismatch(const std::string& what) : CrmapError("shape mismatch: " + what) {}
};
struct NotNormalized : CrmapError {
    explicit NotNormalized(const std::string& what) : CrmapError("map not normalized: " + what) {}
};
struct ParseError : CrmapError {
    explicit ParseError(const std::string& what) : CrmapError("parse error: " + what) {}
};

}  // namespace crmap
