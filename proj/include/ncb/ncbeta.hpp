#pragma once

// The non-central beta family: doubly non-central density (series and
// perturbation forms), CDF, conditional density given M+, moments, endpoint
// limits, the type 1 / type 2 specializations and the Patnaik/G3B mapping.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ncb/errors.hpp"
#include "ncb/series.hpp"
#include "ncb/specfun.hpp"

namespace ncb {

// Above this combined non-centrality the Poisson-weighted series are
// accumulated in log space to dodge overflow of (lambda/2)^j / j!.
inline constexpr double kLogSpaceLambdaThreshold = 1400.0;

struct DnCBetaParams {
    double a1;  // shape alpha_1, >= 0
    double a2;  // shape alpha_2, >= 0
    double l1;  // non-centrality lambda_1, >= 0
    double l2;  // non-centrality lambda_2, >= 0

    double a_plus() const noexcept { return a1 + a2; }
    double l_plus() const noexcept { return l1 + l2; }

    // lambda_1 / lambda_plus, defined only when lambda_plus > 0.
    double theta1() const {
        if (!(l_plus() > 0.0))
            throw std::domain_error("DnCBetaParams: theta1 requires lambda_plus > 0");
        return l1 / l_plus();
    }

    // Each chi'^2 component must not be degenerate at zero.
    void validate() const {
        if (!(a1 >= 0.0) || !(a2 >= 0.0) || !(l1 >= 0.0) || !(l2 >= 0.0))
            throw std::domain_error("DnCBetaParams: parameters must be >= 0");
        if (!(a1 + l1 > 0.0) || !(a2 + l2 > 0.0))
            throw std::domain_error("DnCBetaParams: alpha_i + lambda_i must be > 0");
    }

    // pdf/cdf/moment formulas additionally need strictly positive shapes.
    void require_positive_shapes() const {
        validate();
        if (!(a1 > 0.0) || !(a2 > 0.0))
            throw std::domain_error("DnCBetaParams: shapes must be > 0 for this operation");
    }
};

struct Nc1BetaParams {
    double a1, a2;  // shapes, > 0
    double l;       // non-centrality (numerator chi-squared), >= 0

    void validate() const {
        if (!(a1 > 0.0) || !(a2 > 0.0))
            throw std::domain_error("Nc1BetaParams: shapes must be > 0");
        if (!(l >= 0.0)) throw std::domain_error("Nc1BetaParams: lambda must be >= 0");
    }
};

struct Nc2BetaParams {
    double a1, a2;  // shapes, > 0
    double l;       // non-centrality (denominator chi-squared), >= 0

    void validate() const {
        if (!(a1 > 0.0) || !(a2 > 0.0))
            throw std::domain_error("Nc2BetaParams: shapes must be > 0");
        if (!(l >= 0.0)) throw std::domain_error("Nc2BetaParams: lambda must be >= 0");
    }
};

// Libby-Novick generalized beta; gamma == 1 reduces to Beta(b1, b2).
struct G3BParams {
    double b1, b2;  // shapes, > 0
    double gamma;   // scale, > 0

    void validate() const {
        if (!(b1 > 0.0) || !(b2 > 0.0) || !(gamma > 0.0))
            throw std::domain_error("G3BParams: parameters must be > 0");
    }
};

namespace ncbeta {

namespace detail {

inline void check_open_unit(double x, const char* who) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error(std::string(who) + ": x must lie strictly in (0, 1)");
}

inline void check_moment_order(int r) {
    if (r < 1) throw std::domain_error("ncbeta: moment order must be >= 1");
    if (r > 8) throw std::out_of_range("ncbeta: moment order capped at 8");
}

inline double ln_beta_pdf(double x, double a, double b) {
    return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - specfun::ln_beta(a, b);
}

inline double log_poisson_weight(long j, double half_lambda) {
    if (half_lambda == 0.0) return j == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return -half_lambda + double(j) * std::log(half_lambda) - std::lgamma(double(j) + 1.0);
}

}  // namespace detail

// Density as the double series of Beta(a1 + j, a2 + k) densities weighted by
// the product of the two Poisson laws.  Reference route kept for cross-checks
// against the perturbation form.
inline double pdf_series(double x, const DnCBetaParams& p, SeriesControl ctrl = {}) {
    p.require_positive_shapes();
    ctrl.validate();
    detail::check_open_unit(x, "ncbeta::pdf_series");
    const double hl1 = 0.5 * p.l1, hl2 = 0.5 * p.l2;
    const double lnx = std::log(x), lnomx = std::log1p(-x);
    double sum = 0.0;
    for (long j = 0;; ++j) {
        const double wj = detail::log_poisson_weight(j, hl1);
        double inner = 0.0;
        for (long k = 0;; ++k) {
            const double lt = wj + detail::log_poisson_weight(k, hl2) +
                              (p.a1 + j - 1.0) * lnx + (p.a2 + k - 1.0) * lnomx -
                              specfun::ln_beta(p.a1 + j, p.a2 + k);
            const double prev = inner;
            inner += std::exp(lt);
            if (k >= ctrl.maxiter)
                throw ConvergenceError("ncbeta::pdf_series: inner series did not converge",
                                       sum + inner, k);
            if (k > 0 && (inner > 0.0 || k > hl2) &&
                ncb::detail::series_settled(inner, prev, ctrl.tol))
                break;
        }
        const double prev = sum;
        sum += inner;
        if (j >= ctrl.maxiter)
            throw ConvergenceError("ncbeta::pdf_series: outer series did not converge", sum, j);
        if (j > 0 && (sum > 0.0 || j > hl1) &&
            ncb::detail::series_settled(sum, prev, ctrl.tol))
            break;
        if (hl1 == 0.0) break;
    }
    return sum;
}

// Production density path: the perturbation of the central beta density,
//   Beta(x; a1, a2) e^(-lambda_plus / 2) psi2[a+; a1, a2; (l1/2) x, (l2/2)(1-x)].
inline double pdf(double x, const DnCBetaParams& p, SeriesControl ctrl = {}) {
    p.require_positive_shapes();
    ctrl.validate();
    detail::check_open_unit(x, "ncbeta::pdf");
    const double xa = 0.5 * p.l1 * x;
    const double ya = 0.5 * p.l2 * (1.0 - x);
    if (p.l_plus() > kLogSpaceLambdaThreshold) {
        const double lp = specfun::ln_humbert_psi2(p.a_plus(), p.a1, p.a2, xa, ya, ctrl);
        return std::exp(detail::ln_beta_pdf(x, p.a1, p.a2) - 0.5 * p.l_plus() + lp);
    }
    const double psi = specfun::humbert_psi2(p.a_plus(), p.a1, p.a2, xa, ya, ctrl);
    return std::exp(detail::ln_beta_pdf(x, p.a1, p.a2)) * std::exp(-0.5 * p.l_plus()) * psi;
}

namespace detail {

// Inner series of the CDF for a fixed outer index: the Poisson(l2/2)-weighted
// sum of Beta(first, a2 + k) distribution functions.  Runs on its own default
// control, mirroring the nested structure of the reference implementation.
inline double cdf_inner(double x, double first, double a2, double hl2,
                        const SeriesControl& inner_ctrl) {
    double sum = std::exp(log_poisson_weight(0, hl2)) * specfun::reg_inc_beta(x, first, a2);
    for (long k = 1;; ++k) {
        const double fac =
            std::exp(log_poisson_weight(k, hl2)) * specfun::reg_inc_beta(x, first, a2 + k);
        const double prev = sum;
        sum += fac;
        if (k >= inner_ctrl.maxiter)
            throw ConvergenceError("ncbeta::cdf: inner series did not converge", sum, k);
        if ((sum > 0.0 || k > hl2) && ncb::detail::series_settled(sum, prev, inner_ctrl.tol))
            break;
    }
    return sum;
}

}  // namespace detail

// Distribution function as the double Poisson-weighted series of regularized
// incomplete beta values; outer series over the first index, converged inner
// series per term.
inline double cdf(double x, const DnCBetaParams& p, SeriesControl ctrl = {},
                  bool lower_tail = true) {
    p.require_positive_shapes();
    ctrl.validate();
    detail::check_open_unit(x, "ncbeta::cdf");
    const double hl1 = 0.5 * p.l1, hl2 = 0.5 * p.l2;
    const SeriesControl inner_ctrl{};  // default control for the nested series
    double sum = std::exp(detail::log_poisson_weight(0, hl1)) *
                 detail::cdf_inner(x, p.a1, p.a2, hl2, inner_ctrl);
    if (hl1 > 0.0) {
        for (long n = 1;; ++n) {
            const double fac = std::exp(detail::log_poisson_weight(n, hl1)) *
                               detail::cdf_inner(x, p.a1 + n, p.a2, hl2, inner_ctrl);
            const double prev = sum;
            sum += fac;
            if (n >= ctrl.maxiter)
                throw ConvergenceError("ncbeta::cdf: outer series did not converge", sum, n);
            if ((sum > 0.0 || n > hl1) && ncb::detail::series_settled(sum, prev, ctrl.tol))
                break;
        }
    }
    if (sum > 1.0) sum = 1.0;
    return lower_tail ? sum : 1.0 - sum;
}

// Density of X' given M+ = mplus: a Binomial(mplus, l1/l+) mixture of
// Beta(a1 + i, a2 + mplus - i) densities.  Zero-shape point masses are left
// to the sampling routines; here both shapes must be positive.
inline double cond_pdf_given_mplus(double x, const DnCBetaParams& p, long mplus) {
    p.require_positive_shapes();
    detail::check_open_unit(x, "ncbeta::cond_pdf_given_mplus");
    if (mplus < 0) throw std::domain_error("ncbeta::cond_pdf_given_mplus: mplus must be >= 0");
    if (!(p.l_plus() > 0.0))
        throw std::domain_error("ncbeta::cond_pdf_given_mplus: lambda_plus must be > 0");
    const double theta = p.theta1();
    double sum = 0.0;
    for (long i = 0; i <= mplus; ++i) {
        double logw;
        if (theta == 0.0)
            logw = i == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
        else if (theta == 1.0)
            logw = i == mplus ? 0.0 : -std::numeric_limits<double>::infinity();
        else
            logw = std::lgamma(double(mplus) + 1.0) - std::lgamma(double(i) + 1.0) -
                   std::lgamma(double(mplus - i) + 1.0) + double(i) * std::log(theta) +
                   double(mplus - i) * std::log1p(-theta);
        sum += std::exp(logw + detail::ln_beta_pdf(x, p.a1 + i, p.a2 + mplus - i));
    }
    return sum;
}

// Type 1 density: the single Poisson-weighted series of Beta(a1 + j, a2)
// densities.
inline double type1_pdf(double x, const Nc1BetaParams& p, SeriesControl ctrl = {}) {
    p.validate();
    ctrl.validate();
    detail::check_open_unit(x, "ncbeta::type1_pdf");
    const double hl = 0.5 * p.l;
    const double lnx = std::log(x);
    const double base = (p.a2 - 1.0) * std::log1p(-x);
    double sum = 0.0;
    for (long j = 0;; ++j) {
        const double lt = detail::log_poisson_weight(j, hl) + (p.a1 + j - 1.0) * lnx + base -
                          specfun::ln_beta(p.a1 + j, p.a2);
        const double prev = sum;
        sum += std::exp(lt);
        if (j >= ctrl.maxiter)
            throw ConvergenceError("ncbeta::type1_pdf: series did not converge", sum, j);
        if (j > 0 && (sum > 0.0 || j > hl) && ncb::detail::series_settled(sum, prev, ctrl.tol))
            break;
        if (hl == 0.0) break;
    }
    return sum;
}

// Type 1 density through the perturbation form
//   Beta(x; a1, a2) e^(-l/2) 1F1(a+; a1; (l/2) x).
inline double type1_pdf_perturbation(double x, const Nc1BetaParams& p,
                                     SeriesControl ctrl = {}) {
    p.validate();
    ctrl.validate();
    detail::check_open_unit(x, "ncbeta::type1_pdf_perturbation");
    const double f1 = specfun::kummer_1f1(p.a1 + p.a2, p.a1, 0.5 * p.l * x, ctrl);
    return std::exp(detail::ln_beta_pdf(x, p.a1, p.a2) - 0.5 * p.l) * f1;
}

// Type 2 densities via the reflection X'_2 = 1 - X'_1 with swapped shapes.
inline double type2_pdf(double x, const Nc2BetaParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_open_unit(x, "ncbeta::type2_pdf");
    return type1_pdf(1.0 - x, Nc1BetaParams{p.a2, p.a1, p.l}, ctrl);
}

inline double type2_pdf_perturbation(double x, const Nc2BetaParams& p,
                                     SeriesControl ctrl = {}) {
    p.validate();
    ctrl.validate();
    detail::check_open_unit(x, "ncbeta::type2_pdf_perturbation");
    const double f1 = specfun::kummer_1f1(p.a1 + p.a2, p.a2, 0.5 * p.l * (1.0 - x), ctrl);
    return std::exp(detail::ln_beta_pdf(x, p.a1, p.a2) - 0.5 * p.l) * f1;
}

// Closed-form distribution functions for unit shapes.
inline double type1_cdf_11(double x, double lambda) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error("ncbeta::type1_cdf_11: x must lie in (0, 1)");
    if (!(lambda >= 0.0)) throw std::domain_error("ncbeta::type1_cdf_11: lambda must be >= 0");
    return x * std::exp(-0.5 * lambda * (1.0 - x));
}

inline double type2_cdf_11(double x, double lambda) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error("ncbeta::type2_cdf_11: x must lie in (0, 1)");
    if (!(lambda >= 0.0)) throw std::domain_error("ncbeta::type2_cdf_11: lambda must be >= 0");
    return 1.0 - std::exp(-0.5 * lambda * x) * (1.0 - x);
}

struct EndpointLimits {
    double at0;
    double at1;
};

// Density limits at 0 and 1 for unit shapes:
//   (e^(-l1/2) (l2/2 + 1), e^(-l2/2) (l1/2 + 1)).
inline EndpointLimits endpoint_limits_11(const DnCBetaParams& p) {
    p.validate();
    if (p.a1 != 1.0 || p.a2 != 1.0)
        throw std::domain_error("ncbeta::endpoint_limits_11: shapes must equal 1");
    return {std::exp(-0.5 * p.l1) * (0.5 * p.l2 + 1.0),
            std::exp(-0.5 * p.l2) * (0.5 * p.l1 + 1.0)};
}

inline EndpointLimits type1_endpoint_limits_11(double lambda) {
    if (!(lambda >= 0.0))
        throw std::domain_error("ncbeta::type1_endpoint_limits_11: lambda must be >= 0");
    return {std::exp(-0.5 * lambda), 0.5 * lambda + 1.0};
}

inline EndpointLimits type2_endpoint_limits_11(double lambda) {
    const EndpointLimits t1 = type1_endpoint_limits_11(lambda);
    return {t1.at1, t1.at0};
}

// r-th moment about zero: the finite sum of r + 1 weighted 1F1 terms,
//   (a1)_r / (a+)_r e^(-l+/2)
//     sum_i C(r,i) (a+)_i (l1/2)^i / ((a1)_i (a+ + r)_i)
//           1F1(a+ + i; a+ + r + i; l+/2).
inline double moment(int r, const DnCBetaParams& p, SeriesControl ctrl = {}) {
    p.require_positive_shapes();
    detail::check_moment_order(r);
    ctrl.validate();
    const double ap = p.a_plus(), lp = p.l_plus();
    const double hl1 = 0.5 * p.l1, hlp = 0.5 * lp;
    const double front = specfun::pochhammer(p.a1, r) / specfun::pochhammer(ap, r);
    if (lp > kLogSpaceLambdaThreshold) {
        double lsum = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= r; ++i) {
            if (hl1 == 0.0 && i > 0) break;
            const double lcoef = std::log(specfun::choose(r, i)) +
                                 std::log(specfun::pochhammer(ap, i)) +
                                 double(i) * (hl1 > 0.0 ? std::log(hl1) : 0.0) -
                                 std::log(specfun::pochhammer(p.a1, i)) -
                                 std::log(specfun::pochhammer(ap + r, i));
            lsum = ncb::detail::log_add_exp(
                lsum, lcoef + specfun::ln_kummer_1f1(ap + i, ap + r + i, hlp, ctrl));
        }
        return front * std::exp(-hlp + lsum);
    }
    double sum = 0.0;
    for (int i = 0; i <= r; ++i) {
        if (hl1 == 0.0 && i > 0) break;
        const double coef = specfun::choose(r, i) * specfun::pochhammer(ap, i) *
                            std::pow(hl1, i) /
                            (specfun::pochhammer(p.a1, i) * specfun::pochhammer(ap + r, i));
        sum += coef * specfun::kummer_1f1(ap + i, ap + r + i, hlp, ctrl);
    }
    return front * std::exp(-hlp) * sum;
}

// Explicit r = 1 specialization of the moment formula.
inline double mean(const DnCBetaParams& p, SeriesControl ctrl = {}) {
    p.require_positive_shapes();
    ctrl.validate();
    const double ap = p.a_plus(), hlp = 0.5 * p.l_plus();
    const double inner =
        specfun::kummer_1f1(ap, ap + 1.0, hlp, ctrl) +
        ap * (0.5 * p.l1) / (p.a1 * (ap + 1.0)) *
            specfun::kummer_1f1(ap + 1.0, ap + 2.0, hlp, ctrl);
    return p.a1 / ap * std::exp(-hlp) * inner;
}

// Explicit r = 2 specialization of the moment formula.
inline double second_moment(const DnCBetaParams& p, SeriesControl ctrl = {}) {
    p.require_positive_shapes();
    ctrl.validate();
    const double ap = p.a_plus(), hlp = 0.5 * p.l_plus();
    const double inner =
        specfun::kummer_1f1(ap, ap + 2.0, hlp, ctrl) +
        ap * p.l1 / (p.a1 * (ap + 2.0)) *
            specfun::kummer_1f1(ap + 1.0, ap + 3.0, hlp, ctrl) +
        specfun::pochhammer(ap, 2) * 0.25 * p.l1 * p.l1 /
            (specfun::pochhammer(p.a1, 2) * specfun::pochhammer(ap + 2.0, 2)) *
            specfun::kummer_1f1(ap + 2.0, ap + 4.0, hlp, ctrl);
    return specfun::pochhammer(p.a1, 2) / specfun::pochhammer(ap, 2) * std::exp(-hlp) * inner;
}

// Closed-form mean for unit shapes.  The non-centralities may be negative
// here: the method of moments solves over the raw real plane and inspects the
// sign of the solution afterwards.  lambda_plus == 0 returns the exact
// uniform value instead of evaluating the 0/0 form.
inline double mean_11(double l1, double l2) {
    const double t = l1 + l2;
    if (t == 0.0) return 0.5;
    // t^2 - 4 t + 8 - 8 e^(-t/2), written with expm1 to limit cancellation
    const double g = t * t - 4.0 * t - 8.0 * std::expm1(-0.5 * t);
    return 0.5 + (l1 - l2) / (2.0 * t * t * t) * g;
}

// Closed-form variance for unit shapes; same domain conventions as mean_11.
inline double var_11(double l1, double l2) {
    const double t = l1 + l2;
    if (t == 0.0) return 1.0 / 12.0;
    const double em = std::expm1(-0.5 * t);  // e^(-t/2) - 1
    const double one_m_e = -em;              // 1 - e^(-t/2)
    // (t - 2)(t - 8) - 2 e^(-t/2) (t + 8)
    const double b2 = t * t - 12.0 * t - 2.0 * (t + 8.0) * em;
    // t^2 e^(-t/2) - 2 (1 - e^(-t/2)) (t + 1 - e^(-t/2))
    const double b3 = t * t * (1.0 + em) - 2.0 * one_m_e * (t + one_m_e);
    const double t2 = t * t;
    return 4.0 / t2 + 4.0 * l1 * l2 / (t2 * t2 * t) * b2 +
           8.0 * (l1 - l2) * (l1 - l2) / (t2 * t2 * t2) * b3;
}

// Type 1 moments through the finite 1F1 sum (the lambda_2 = 0 case of the
// general formula).
inline double type1_moment(int r, const Nc1BetaParams& p, SeriesControl ctrl = {}) {
    p.validate();
    return moment(r, DnCBetaParams{p.a1, p.a2, p.l, 0.0}, ctrl);
}

// Type 1 moments through the 2F2 representation,
//   (a1)_r / (a+)_r e^(-l/2) 2F2(a1 + r, a+; a1, a+ + r; l/2);
// kept as the second route of the identity the two formulas satisfy.
inline double type1_moment_2f2(int r, const Nc1BetaParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_moment_order(r);
    ctrl.validate();
    const double ap = p.a1 + p.a2;
    return specfun::pochhammer(p.a1, r) / specfun::pochhammer(ap, r) * std::exp(-0.5 * p.l) *
           specfun::generalized_2f2(p.a1 + r, ap, p.a1, ap + r, 0.5 * p.l, ctrl);
}

// Type 2 moments: (a1)_r / (a+)_r e^(-l/2) 1F1(a+; a+ + r; l/2).
inline double type2_moment(int r, const Nc2BetaParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_moment_order(r);
    ctrl.validate();
    const double ap = p.a1 + p.a2;
    return specfun::pochhammer(p.a1, r) / specfun::pochhammer(ap, r) * std::exp(-0.5 * p.l) *
           specfun::kummer_1f1(ap, ap + r, 0.5 * p.l, ctrl);
}

struct Type12Moments11 {
    double mean1;  // mean of the type 1 distribution, > 1/2 for lambda > 0
    double mean2;  // mean of the type 2 distribution, < 1/2 for lambda > 0
    double var;    // shared variance of the two
};

// Closed-form unit-shape means and variance of the type 1 / type 2 family.
inline Type12Moments11 mean_type12_11(double lambda) {
    if (!(lambda >= 0.0))
        throw std::domain_error("ncbeta::mean_type12_11: lambda must be >= 0");
    const double m1 = mean_11(lambda, 0.0);
    return {m1, 1.0 - m1, var_11(lambda, 0.0)};
}

struct MeanDecomposition {
    double mean;          // general-route mean of the doubly non-central law
    double type_mixture;  // (l1/l+) E(X'_1) + (l2/l+) E(X'_2) at lambda_plus
    double beta_convex;   // convex combination of the beta mean and theta1
};

// Both mean identities evaluated side by side for invariant testing.
inline MeanDecomposition mean_decomposition_check(const DnCBetaParams& p,
                                                  SeriesControl ctrl = {}) {
    p.require_positive_shapes();
    if (!(p.l_plus() > 0.0))
        throw std::domain_error("ncbeta::mean_decomposition_check: lambda_plus must be > 0");
    const double lp = p.l_plus(), theta = p.theta1();
    const double m = moment(1, p, ctrl);
    const double m1 = type1_moment(1, Nc1BetaParams{p.a1, p.a2, lp}, ctrl);
    const double m2 = type2_moment(1, Nc2BetaParams{p.a1, p.a2, lp}, ctrl);
    const double mixture = theta * m1 + (1.0 - theta) * m2;
    const double k = std::exp(-0.5 * lp) *
                     specfun::kummer_1f1(p.a_plus(), p.a_plus() + 1.0, 0.5 * lp, ctrl);
    const double convex = p.a1 / p.a_plus() * k + theta * (1.0 - k);
    return {m, mixture, convex};
}

// Patnaik-style G3B approximation parameters:
//   nu_r = (2 a_r + l_r)^2 / (2 (a_r + l_r)),  beta_r = nu_r / 2,
//   rho_r = 2 (a_r + l_r) / (2 a_r + l_r),     gamma = rho_2 / rho_1.
inline G3BParams patnaik_g3b(const DnCBetaParams& p) {
    p.require_positive_shapes();
    auto half_nu = [](double a, double l) {
        return (2.0 * a + l) * (2.0 * a + l) / (4.0 * (a + l));
    };
    auto rho = [](double a, double l) { return 2.0 * (a + l) / (2.0 * a + l); };
    return {half_nu(p.a1, p.l1), half_nu(p.a2, p.l2), rho(p.a2, p.l2) / rho(p.a1, p.l1)};
}

}  // namespace ncbeta
}  // namespace ncb
