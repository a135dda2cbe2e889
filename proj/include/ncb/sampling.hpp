#pragma once

// Three independent generators for the doubly non-central beta law.  The
// mixture route is the cheapest and serves as the production default; the
// definition and convex-combination routes are kept so the three can be
// cross-validated against each other.

#include <cstddef>
#include <vector>

#include "ncb/ncbeta.hpp"
#include "ncb/ncchisq.hpp"
#include "ncb/random.hpp"

namespace ncb::sampling {

namespace detail {

// Beta draw with the zero-shape conventions of the degenerate chi-squared
// components: a zero first shape is the constant 0, a zero second shape the
// constant 1.
inline double beta_or_point_mass(double a, double b, RandomStream& rng) {
    if (a <= 0.0) return 0.0;
    if (b <= 0.0) return 1.0;
    return rng.beta(a, b);
}

}  // namespace detail

// Draws through the definition Y'_1 / (Y'_1 + Y'_2) with independent
// chi'^2_{2 alpha_i}(lambda_i) components.  Zero shapes are admitted; the
// measure-zero event of both components vanishing maps to 0.
inline std::vector<double> sample_definition(std::size_t n, const DnCBetaParams& p,
                                             RandomStream& rng) {
    p.validate();
    std::vector<double> out(n);
    const NcChiSqParams c1{2.0 * p.a1, p.l1};
    const NcChiSqParams c2{2.0 * p.a2, p.l2};
    for (auto& v : out) {
        const double y1 = ncchisq::draw(c1, rng);
        const double y2 = ncchisq::draw(c2, rng);
        v = (y1 > 0.0 || y2 > 0.0) ? y1 / (y1 + y2) : 0.0;
    }
    return out;
}

// Draws through the mixture representation: (M_1, M_2) independent Poissons,
// then Beta(alpha_1 + M_1, alpha_2 + M_2).  Requires positive shapes.
inline std::vector<double> sample_mixture(std::size_t n, const DnCBetaParams& p,
                                          RandomStream& rng) {
    p.require_positive_shapes();
    std::vector<double> out(n);
    for (auto& v : out) {
        const long m1 = p.l1 > 0.0 ? rng.poisson(0.5 * p.l1) : 0;
        const long m2 = p.l2 > 0.0 ? rng.poisson(0.5 * p.l2) : 0;
        v = rng.beta(p.a1 + double(m1), p.a2 + double(m2));
    }
    return out;
}

// Draws through the convex linear combination
//   X' = X'_2 X + (1 - X'_2) X'_pnc
// with X ~ Beta(a1, a2), M+ ~ Poisson(l+/2), X'_2 | M+ ~ Beta(a+, M+),
// i* ~ Binomial(M+, l1/l+) and X'_pnc ~ Beta(i*, M+ - i*) under the
// zero-shape point-mass conventions.  M+ = 0 collapses to the beta draw.
inline std::vector<double> sample_convex(std::size_t n, const DnCBetaParams& p,
                                         RandomStream& rng) {
    p.validate();
    std::vector<double> out(n);
    const double lp = p.l_plus();
    for (auto& v : out) {
        const double x = detail::beta_or_point_mass(p.a1, p.a2, rng);
        const long mplus = lp > 0.0 ? rng.poisson(0.5 * lp) : 0;
        if (mplus == 0) {
            v = x;
            continue;
        }
        const double xp2 = detail::beta_or_point_mass(p.a_plus(), double(mplus), rng);
        const long istar = rng.binomial(mplus, p.l1 / lp);
        const double xpnc = detail::beta_or_point_mass(double(istar), double(mplus - istar), rng);
        v = xp2 * x + (1.0 - xp2) * xpnc;
    }
    return out;
}

enum class Route { definition, mixture, convex };

inline std::vector<double> sample(std::size_t n, const DnCBetaParams& p, RandomStream& rng,
                                  Route route = Route::mixture) {
    switch (route) {
        case Route::definition: return sample_definition(n, p, rng);
        case Route::convex: return sample_convex(n, p, rng);
        case Route::mixture: default: return sample_mixture(n, p, rng);
    }
}

}  // namespace ncb::sampling
