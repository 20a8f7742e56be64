#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "brokerlab/errors.hpp"
#include "brokerlab/numerics.hpp"
#include "brokerlab/rng.hpp"

namespace brokerlab {

// Parameters of the three-piece quadratic/linear/quadratic CDF family
// H_{alpha,delta} on [0,1]. The CDF hovers near level alpha on
// [delta, 1-delta] and bends to hit 0 and 1 at the endpoints.
struct HParams {
    double alpha;
    double delta;

    HParams(double alpha_, double delta_);

    // Upper limit of the valid delta range for a given alpha:
    // min(alpha/(2 alpha + 1), (1 - alpha)/(3 - 2 alpha)).
    static double max_delta(double alpha);
};

enum class Family { uniform, power, truncated_exponential, h_family, mixture };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Serializable description of a distribution. Scalar parameters live in
// `params` under documented keys:
//   uniform                -> "lo", "hi"
//   power                  -> "delta"
//   truncated_exponential  -> "lambda", "cutoff"
//   h_family               -> "alpha", "delta"
//   mixture                -> components + weights
// JSON round-trips are bit-exact on all doubles.
struct DistributionSpec {
    Family family = Family::uniform;
    std::map<std::string, double> params;
    std::vector<DistributionSpec> components;
    std::vector<double> weights;

    nlohmann::ordered_json to_json() const;
    static DistributionSpec from_json(const nlohmann::json& j);
    bool operator==(const DistributionSpec& other) const;
};

namespace detail {
struct DistImpl;
}

// Bounded absolutely continuous distribution on [support.lo, support.hi],
// support.lo >= 0. Immutable and cheap to copy; safe to share across threads.
//
// cdf() clamps to 0 below the support and 1 above it, pdf() is 0 outside,
// and cdf_integral() extends linearly above the support, so all three are
// defined on the whole nonnegative axis.
class Distribution {
public:
    double cdf(double x) const;
    double pdf(double x) const;

    // Exact closed form of \int_0^x cdf(t) dt.
    double cdf_integral(double x) const;

    // \int_q^hi (1 - cdf(t)) dt, zero for q >= hi.
    double upper_tail(double q) const;

    Interval support() const;

    // Piece boundaries interior to the support, sorted ascending. Quadrature
    // over any integrand built from this distribution must subdivide here.
    const std::vector<double>& breakpoints() const;

    const DistributionSpec& spec() const;

private:
    friend Distribution make_from_impl(std::shared_ptr<const detail::DistImpl> impl);
    std::shared_ptr<const detail::DistImpl> impl_;
};

Distribution make_uniform(double lo, double hi);
Distribution make_power(double delta);
Distribution make_truncated_exponential(double lambda, double cutoff);
Distribution make_h(const HParams& params);
Distribution make_mixture(std::vector<Distribution> components, std::vector<double> weights);
Distribution make_distribution(const DistributionSpec& spec);

// Inverse CDF to bracket width 1e-12 via bisection. quantile(d, 0) is the
// support's lower end, quantile(d, 1) its upper end.
double quantile(const Distribution& d, double u);

// Inverse-transform sample: quantile at the stream's next uniform.
double sample(const Distribution& d, rng::Stream& stream);

struct DominanceResult {
    bool dominates;    // true iff G(x) >= F(x) - 1e-12 everywhere on the grid
    double worst_gap;  // min over the grid of G(x) - F(x)
};

// Checks whether F (buyer) stochastically dominates G (seller), i.e.
// G(x) >= F(x) for all x. Evaluated on grid_n uniform points over the union
// support plus both breakpoint sets and support endpoints.
DominanceResult check_stochastic_dominance(const Distribution& F, const Distribution& G,
                                           int grid_n = 10001);

enum class Side { buyer, seller };

// Grid monotone-hazard-rate check with slack 1e-9:
//   buyer:  (1 - cdf)/pdf nonincreasing on interior grid points
//   seller: cdf/pdf nondecreasing
// Throws DegenerateDensityError if pdf vanishes at an interior grid point.
// This is numerical evidence on a grid, not a proof.
bool check_mhr(const Distribution& d, Side side, int grid_n = 10001);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks the Distribution type invariants: cdf(lo)=0, cdf(hi)=1, cdf
// nondecreasing and pdf nonnegative on the validation grid, and
// cdf(b)-cdf(a) consistent with \int_a^b pdf within 1e-8 on sampled pairs.
ValidationReport validate_distribution(const Distribution& d, int grid_n = 10001);

// grid_n uniform points over iv merged with extra points (sorted, deduped).
std::vector<double> validation_grid(Interval iv, int grid_n,
                                    std::span<const double> extra = {});

}  // namespace brokerlab
