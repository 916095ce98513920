#pragma once

#include <stdexcept>
#include <string>

namespace algknot {

// Base for all typed failures raised by the library. CLI maps these to exit
// code 2 (input/precondition) or 1 (verification) as appropriate.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial") {}
    explicit ZeroPolynomial(const std::string& w) : Error(w) {}
};

struct DegeneratePosition : Error {
    explicit DegeneratePosition(const std::string& w) : Error(w) {}
};

struct NotImmersed : Error {
    explicit NotImmersed(const std::string& w) : Error(w) {}
};

struct SelfIntersecting : Error {
    explicit SelfIntersecting(const std::string& w) : Error(w) {}
};

struct NonGenericProjection : Error {
    explicit NonGenericProjection(const std::string& w) : Error(w) {}
};

struct DegenerateParametrization : Error {
    explicit DegenerateParametrization(const std::string& w) : Error(w) {}
};

struct ChartFailure : Error {
    explicit ChartFailure(const std::string& w) : Error(w) {}
};

struct ChartHitsCurveTangentially : Error {
    explicit ChartHitsCurveTangentially(const std::string& w) : Error(w) {}
};

struct PointOnCurve : Error {
    explicit PointOnCurve(const std::string& w) : Error(w) {}
};

struct NotMW : Error {
    explicit NotMW(const std::string& w) : Error(w) {}
};

struct SearchFailed : Error {
    explicit SearchFailed(const std::string& w) : Error(w) {}
};

struct AmbiguousCensus : Error {
    explicit AmbiguousCensus(const std::string& w) : Error(w) {}
};

struct NonTransversePlane : Error {
    explicit NonTransversePlane(const std::string& w) : Error(w) {}
};

struct TooManyCrossings : Error {
    explicit TooManyCrossings(const std::string& w) : Error(w) {}
};

struct MultiComponent : Error {
    explicit MultiComponent(const std::string& w) : Error(w) {}
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& w) : Error(w) {}
};

struct NotSmooth : Error {
    explicit NotSmooth(const std::string& w) : Error(w) {}
};

struct BudgetExhausted : Error {
    explicit BudgetExhausted(const std::string& w) : Error(w) {}
};

}  // namespace algknot
