#include "brokerlab/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace brokerlab {

namespace {

double checked_eval(const std::function<double(double)>& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y))
        throw EvaluationError("integrate: integrand not finite at x = " + std::to_string(x));
    return y;
}

struct SimpsonWorker {
    const std::function<double(double)>& f;
    int max_depth;

    // Classic adaptive Simpson with Richardson extrapolation. `whole` is the
    // 3-point Simpson estimate over [a, b]; eps is this interval's error
    // budget. A minimum depth guards against premature acceptance on
    // integrands that happen to agree at the first sample points.
    double refine(double a, double fa, double m, double fm, double b, double fb,
                  double whole, double eps, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = checked_eval(f, lm);
        const double frm = checked_eval(f, rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth >= 4 && std::abs(delta) <= 15.0 * eps)
            return left + right + delta / 15.0;
        if (depth >= max_depth)
            throw ConvergenceError("integrate: max_depth exceeded before reaching tolerance");
        if (m - a <= 0.0 || b - m <= 0.0)  // cannot subdivide further
            return left + right + delta / 15.0;
        return refine(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1) +
               refine(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1);
    }

    double run(double a, double b, double eps) {
        if (b <= a) return 0.0;
        const double m = 0.5 * (a + b);
        const double fa = checked_eval(f, a);
        const double fm = checked_eval(f, m);
        const double fb = checked_eval(f, b);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return refine(a, fa, m, fm, b, fb, whole, eps, 0);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, Interval iv,
                 const QuadratureSpec& spec) {
    return integrate(f, iv, std::span<const double>{}, spec);
}

double integrate(const std::function<double(double)>& f, Interval iv,
                 std::span<const double> breakpoints, const QuadratureSpec& spec) {
    spec.validate();
    if (iv.length() == 0.0) return 0.0;

    std::vector<double> nodes;
    nodes.reserve(breakpoints.size() + 2);
    nodes.push_back(iv.lo);
    for (double b : breakpoints)
        if (b > iv.lo && b < iv.hi) nodes.push_back(b);
    nodes.push_back(iv.hi);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    SimpsonWorker worker{f, spec.max_depth};

    // Rough pass to give rel_tol something to scale against.
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i], b = nodes[i + 1], m = 0.5 * (a + b);
        rough += (b - a) / 6.0 *
                 (checked_eval(f, a) + 4.0 * checked_eval(f, m) + checked_eval(f, b));
    }
    const double budget = std::max(spec.abs_tol, spec.rel_tol * std::abs(rough));
    const double seg_eps = budget / static_cast<double>(nodes.size() - 1);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        total += worker.run(nodes[i], nodes[i + 1], seg_eps);
    return total;
}

}  // namespace brokerlab
