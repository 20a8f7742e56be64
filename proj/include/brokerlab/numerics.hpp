#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "brokerlab/errors.hpp"

namespace brokerlab {

// Closed finite interval [lo, hi].
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw ParameterError("Interval: endpoints must be finite");
        if (lo > hi) throw ParameterError("Interval: lo > hi");
    }

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

// Tolerances for adaptive quadrature. The integral I is accepted once the
// estimated error is below max(abs_tol, rel_tol * |I|).
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 60;

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol > 0))
            throw ParameterError("QuadratureSpec: tolerances must be positive");
        if (max_depth < 10)
            throw ParameterError("QuadratureSpec: max_depth must be at least 10");
    }
};

// Adaptive Simpson quadrature of f over iv.
//
// Throws EvaluationError if f returns a non-finite value and
// ConvergenceError if the tolerance cannot be met within spec.max_depth.
double integrate(const std::function<double(double)>& f, Interval iv,
                 const QuadratureSpec& spec = {});

// Same, with forced subdivision points. Callers must pass the integrand's
// piece boundaries (e.g. distribution breakpoints) so that each sub-interval
// is smooth. Breakpoints outside iv are ignored.
double integrate(const std::function<double(double)>& f, Interval iv,
                 std::span<const double> breakpoints,
                 const QuadratureSpec& spec = {});

// Bisection root finding on a bracket. Requires f(lo) and f(hi) to have
// opposite signs (or be zero); shrinks the bracket to width <= tol and
// returns its midpoint. Deterministic.
template <typename F>
double find_root(F&& f, Interval iv, double tol = 1e-12) {
    if (!(tol > 0)) throw ParameterError("find_root: tol must be positive");
    double lo = iv.lo, hi = iv.hi;
    double flo = f(lo);
    if (!std::isfinite(flo)) throw EvaluationError("find_root: f(lo) not finite");
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (!std::isfinite(fhi)) throw EvaluationError("find_root: f(hi) not finite");
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw BracketError("find_root: f has the same sign at both endpoints");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fmid = f(mid);
        if (!std::isfinite(fmid)) throw EvaluationError("find_root: f(mid) not finite");
        if (fmid == 0.0) return mid;
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace brokerlab
