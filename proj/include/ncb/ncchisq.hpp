#pragma once

// Non-central chi-squared distribution: density, CDF, moment formulas,
// Patnaik approximation parameters and sampling.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ncb/errors.hpp"
#include "ncb/random.hpp"
#include "ncb/series.hpp"
#include "ncb/specfun.hpp"

namespace ncb {

struct NcChiSqParams {
    double g;       // degrees of freedom, >= 0
    double lambda;  // non-centrality, >= 0

    void validate() const {
        if (!(g >= 0.0)) throw std::domain_error("NcChiSqParams: g must be >= 0");
        if (!(lambda >= 0.0)) throw std::domain_error("NcChiSqParams: lambda must be >= 0");
        if (g == 0.0 && lambda == 0.0)
            throw std::domain_error("NcChiSqParams: g = lambda = 0 is degenerate at zero");
    }
};

struct PatnaikParams {
    double nu;   // effective degrees of freedom
    double rho;  // scale, >= 1
};

namespace ncchisq {

namespace detail {

inline double log_poisson_weight(long i, double half_lambda) {
    return -half_lambda + double(i) * std::log(half_lambda) - std::lgamma(double(i) + 1.0);
}

// Poisson-mixture series summed bidirectionally from the Poisson mode; the
// component(i) callback supplies the central chi-squared factor (pdf or CDF).
// The downward scan keeps going while the sum is still zero so that a series
// dominated by the low-index tail is not cut off early.
template <typename Component>
double poisson_mixture(double half_lambda, Component component, const SeriesControl& ctrl) {
    const long mode = static_cast<long>(std::floor(half_lambda));
    double sum = 0.0;
    long used = 0;
    for (long i = mode; ; ++i) {
        const double term = std::exp(log_poisson_weight(i, half_lambda)) * component(i);
        const double prev = sum;
        sum += term;
        if (++used > ctrl.maxiter)
            throw ConvergenceError("ncchisq: mixture series did not converge", sum, used);
        if (i > mode && ncb::detail::series_settled(sum, prev, ctrl.tol)) break;
    }
    for (long i = mode - 1; i >= 0; --i) {
        const double term = std::exp(log_poisson_weight(i, half_lambda)) * component(i);
        const double prev = sum;
        sum += term;
        if (++used > ctrl.maxiter)
            throw ConvergenceError("ncchisq: mixture series did not converge", sum, used);
        if (sum > 0.0 && ncb::detail::series_settled(sum, prev, ctrl.tol)) break;
    }
    return sum;
}

}  // namespace detail

// Density of chi'^2_g(lambda): the series of chi^2_{g+2i} densities weighted
// by Poisson(lambda / 2) probabilities.
inline double pdf(double y, const NcChiSqParams& p, SeriesControl ctrl = {}) {
    p.validate();
    ctrl.validate();
    if (!(p.g > 0.0)) throw std::domain_error("ncchisq::pdf: g must be > 0");
    if (!(y > 0.0)) throw std::domain_error("ncchisq::pdf: y must be > 0");
    const double h = 0.5 * p.g;
    const double lny = std::log(y);
    auto chisq_pdf = [&](long i) {
        const double hd = h + double(i);
        return std::exp((hd - 1.0) * lny - 0.5 * y - std::lgamma(hd) -
                        hd * 0.6931471805599453094172321214581766);
    };
    if (p.lambda == 0.0) return chisq_pdf(0);
    return detail::poisson_mixture(0.5 * p.lambda, chisq_pdf, ctrl);
}

// Distribution function as the Poisson mixture of central chi-squared CDFs.
inline double cdf(double y, const NcChiSqParams& p, SeriesControl ctrl = {}) {
    p.validate();
    ctrl.validate();
    if (!(p.g > 0.0)) throw std::domain_error("ncchisq::cdf: g must be > 0");
    if (!(y > 0.0)) throw std::domain_error("ncchisq::cdf: y must be > 0");
    const double h = 0.5 * p.g;
    auto chisq_cdf = [&](long i) { return specfun::gamma_p(h + double(i), 0.5 * y); };
    const double s = p.lambda == 0.0 ? chisq_cdf(0)
                                     : detail::poisson_mixture(0.5 * p.lambda, chisq_cdf, ctrl);
    return s < 1.0 ? s : 1.0;
}

namespace detail {

inline void check_moment_order(int r) {
    if (r < 1) throw std::domain_error("ncchisq: moment order must be >= 1");
    if (r > 8) throw std::out_of_range("ncchisq: moment order capped at 8");
}

}  // namespace detail

// r-th moment about zero, literature formula:
// 2^r Gamma(r + g/2) sum_j C(r, j) (lambda/2)^j / Gamma(j + g/2).
inline double moment_literature(int r, const NcChiSqParams& p) {
    p.validate();
    detail::check_moment_order(r);
    if (!(p.g > 0.0)) throw std::domain_error("ncchisq::moment_literature: g must be > 0");
    const double h = 0.5 * p.g;
    const double hl = 0.5 * p.lambda;
    double sum = 0.0;
    for (int j = 0; j <= r; ++j)
        sum += specfun::choose(r, j) * std::pow(hl, j) * specfun::pochhammer(h + j, r - j);
    return std::ldexp(sum, r);
}

// r-th moment about zero through the Stirling-number expansion:
// 2^r sum_i sum_j S(i, j) (1/i!) d^i/dh^i (h)_r (lambda/2)^j.
inline double moment_stirling(int r, const NcChiSqParams& p) {
    p.validate();
    detail::check_moment_order(r);
    if (!(p.g > 0.0)) throw std::domain_error("ncchisq::moment_stirling: g must be > 0");
    const double h = 0.5 * p.g;
    const double hl = 0.5 * p.lambda;
    const auto poly = specfun::PochPoly::make(r);
    double sum = 0.0;
    double ifact = 1.0;
    for (int i = 0; i <= r; ++i) {
        if (i > 0) ifact *= i;
        const double deriv = poly.derivative(h, i) / ifact;
        for (int j = 0; j <= i; ++j)
            sum += specfun::stirling2_d(i, j) * deriv * std::pow(hl, j);
    }
    return std::ldexp(sum, r);
}

// r-th moment about zero of the purely non-central case (zero degrees of
// freedom): 2^r sum_i sum_j |s(r, i)| S(i, j) (lambda/2)^j.
inline double moment_purely_noncentral(int r, double lambda) {
    detail::check_moment_order(r);
    if (!(lambda > 0.0))
        throw std::domain_error("ncchisq::moment_purely_noncentral: lambda must be > 0");
    const double hl = 0.5 * lambda;
    double sum = 0.0;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= i; ++j)
            sum += specfun::stirling1_unsigned_d(r, i) * specfun::stirling2_d(i, j) *
                   std::pow(hl, j);
    return std::ldexp(sum, r);
}

// Effective degrees of freedom and scale of the Patnaik approximation
// Y' ~ Gamma(nu/2, 2 rho).
inline PatnaikParams patnaik_params(const NcChiSqParams& p) {
    p.validate();
    if (!(p.g > 0.0)) throw std::domain_error("ncchisq::patnaik_params: g must be > 0");
    if (p.lambda == 0.0) return {p.g, 1.0};
    const double nu = (p.g + p.lambda) * (p.g + p.lambda) / (p.g + 2.0 * p.lambda);
    const double rho = (p.g + 2.0 * p.lambda) / (p.g + p.lambda);
    return {nu, rho};
}

// One draw through the mixture route: M ~ Poisson(lambda/2), then
// chi^2_{g + 2M}; with g = 0 only the purely non-central part remains.
inline double draw(const NcChiSqParams& p, RandomStream& rng) {
    const long m = p.lambda > 0.0 ? rng.poisson(0.5 * p.lambda) : 0;
    return rng.chisq(p.g + 2.0 * double(m));
}

inline std::vector<double> sample(std::size_t n, const NcChiSqParams& p, RandomStream& rng) {
    p.validate();
    std::vector<double> out(n);
    for (auto& v : out) v = draw(p, rng);
    return out;
}

// Alternative draw through the additive decomposition: a central chi^2_g part
// plus a Poisson-stopped sum of chi^2_2 variables.  Retained for cross-tests
// against the mixture route.
inline std::vector<double> sample_decomposition(std::size_t n, const NcChiSqParams& p,
                                                RandomStream& rng) {
    p.validate();
    std::vector<double> out(n);
    for (auto& v : out) {
        const double central = p.g > 0.0 ? rng.chisq(p.g) : 0.0;
        const long m = p.lambda > 0.0 ? rng.poisson(0.5 * p.lambda) : 0;
        // sum of m independent chi^2_2 variables is Gamma(m, 2)
        v = central + rng.gamma(double(m), 2.0);
    }
    return out;
}

}  // namespace ncchisq
}  // namespace ncb
