#pragma once

// The comparison distributions on (0, 1): Libby-Novick generalized beta
// (G3B), Gauss hypergeometric (GH) and confluent hypergeometric (CH), each
// with density, moments and the unit-shape endpoint limits.  All reduce to
// the beta law when their extra parameter is neutral.

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncb/ncbeta.hpp"
#include "ncb/series.hpp"
#include "ncb/specfun.hpp"

namespace ncb {

struct GHParams {
    double a, b;  // shapes, > 0
    double lam;   // any real
    double z;     // > -1; z == 0 reduces to Beta(a, b)

    void validate() const {
        if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("GHParams: shapes must be > 0");
        if (!(z > -1.0)) throw std::domain_error("GHParams: z must be > -1");
    }
};

struct CHParams {
    double c, d;   // shapes, > 0
    double delta;  // any real; delta == 0 reduces to Beta(c, d)

    void validate() const {
        if (!(c > 0.0) || !(d > 0.0)) throw std::domain_error("CHParams: shapes must be > 0");
    }
};

namespace altmodels {

namespace detail {

inline void check_open_unit(double x, const char* who) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error(std::string(who) + ": x must lie strictly in (0, 1)");
}

inline double beta_pdf(double x, double a, double b) {
    return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) -
                    specfun::ln_beta(a, b));
}

inline double beta_moment(int r, double a, double b) {
    return specfun::pochhammer(a, r) / specfun::pochhammer(a + b, r);
}

inline void check_moment_order(int r) {
    if (r < 1) throw std::domain_error("altmodels: moment order must be >= 1");
    if (r > 8) throw std::out_of_range("altmodels: moment order capped at 8");
}

}  // namespace detail

// G3B density Beta(x; b1, b2) gamma^b1 / (1 - (1 - gamma) x)^(b1 + b2).
inline double g3b_pdf(double x, const G3BParams& p) {
    p.validate();
    detail::check_open_unit(x, "altmodels::g3b_pdf");
    return detail::beta_pdf(x, p.b1, p.b2) * std::pow(p.gamma, p.b1) /
           std::pow(1.0 - (1.0 - p.gamma) * x, p.b1 + p.b2);
}

// G3B distribution function: the beta CDF at the transformed point
// gamma x / (gamma x + 1 - x).
inline double g3b_cdf(double x, const G3BParams& p, bool lower_tail = true) {
    p.validate();
    detail::check_open_unit(x, "altmodels::g3b_cdf");
    const double q = p.gamma * x / (p.gamma * x + 1.0 - x);
    const double lo = specfun::reg_inc_beta(q, p.b1, p.b2);
    return lower_tail ? lo : 1.0 - lo;
}

// r-th moment about zero:
//   (b1)_r / (b1 + b2)_r gamma^b1 2F1(b1 + r, b1 + b2; b1 + b2 + r; 1 - gamma).
// The 2F1 evaluator transforms arguments at or below -0.9 itself, so the
// formula is usable for any gamma > 0.
inline double g3b_moment(int r, const G3BParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_moment_order(r);
    if (p.gamma == 1.0) return detail::beta_moment(r, p.b1, p.b2);
    const double bs = p.b1 + p.b2;
    return detail::beta_moment(r, p.b1, p.b2) * std::pow(p.gamma, p.b1) *
           specfun::gauss_2f1(p.b1 + r, bs, bs + r, 1.0 - p.gamma, ctrl);
}

struct G3BLimits11 {
    double at0;  // gamma
    double at1;  // 1 / gamma
};

inline G3BLimits11 g3b_limits_11(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("altmodels::g3b_limits_11: gamma must be > 0");
    return {gamma, 1.0 / gamma};
}

// GH density Beta(x; a, b) / ((1 + z x)^lam 2F1(lam, a; a + b; -z)).
inline double gh_pdf(double x, const GHParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_open_unit(x, "altmodels::gh_pdf");
    if (p.z == 0.0) return detail::beta_pdf(x, p.a, p.b);
    const double norm = specfun::gauss_2f1(p.lam, p.a, p.a + p.b, -p.z, ctrl);
    return detail::beta_pdf(x, p.a, p.b) / (std::pow(1.0 + p.z * x, p.lam) * norm);
}

// GH moments as the ratio of two 2F1 values.
inline double gh_moment(int r, const GHParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_moment_order(r);
    if (p.z == 0.0) return detail::beta_moment(r, p.a, p.b);
    return detail::beta_moment(r, p.a, p.b) *
           specfun::gauss_2f1(p.lam, p.a + r, p.a + p.b + r, -p.z, ctrl) /
           specfun::gauss_2f1(p.lam, p.a, p.a + p.b, -p.z, ctrl);
}

struct GHLimits11 {
    double at0;
    double at1;
};

// Density limits at the endpoints for a = b = 1.
inline GHLimits11 gh_limits_11(const GHParams& p, SeriesControl ctrl = {}) {
    p.validate();
    if (p.a != 1.0 || p.b != 1.0)
        throw std::domain_error("altmodels::gh_limits_11: shapes must equal 1");
    if (p.z == 0.0) return {1.0, 1.0};
    const double norm = specfun::gauss_2f1(p.lam, 1.0, 2.0, -p.z, ctrl);
    return {1.0 / norm, std::pow(1.0 + p.z, -p.lam) / norm};
}

// CH density Beta(x; c, d) e^(-delta x) / 1F1(c; c + d; -delta).
inline double ch_pdf(double x, const CHParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_open_unit(x, "altmodels::ch_pdf");
    if (p.delta == 0.0) return detail::beta_pdf(x, p.c, p.d);
    const double norm = specfun::kummer_1f1(p.c, p.c + p.d, -p.delta, ctrl);
    return detail::beta_pdf(x, p.c, p.d) * std::exp(-p.delta * x) / norm;
}

// Unit-shape closed form delta e^(delta (1 - x)) / (e^delta - 1); the
// removable delta = 0 case short-circuits to the uniform density.
inline double ch_pdf_11(double x, double delta) {
    detail::check_open_unit(x, "altmodels::ch_pdf_11");
    if (delta == 0.0) return 1.0;
    return delta / std::expm1(delta) * std::exp(delta * (1.0 - x));
}

// CH moments as the ratio of two 1F1 values.
inline double ch_moment(int r, const CHParams& p, SeriesControl ctrl = {}) {
    p.validate();
    detail::check_moment_order(r);
    if (p.delta == 0.0) return detail::beta_moment(r, p.c, p.d);
    return detail::beta_moment(r, p.c, p.d) *
           specfun::kummer_1f1(p.c + r, p.c + p.d + r, -p.delta, ctrl) /
           specfun::kummer_1f1(p.c, p.c + p.d, -p.delta, ctrl);
}

struct CHLimits11 {
    double at0;  // delta e^delta / (e^delta - 1)
    double at1;  // delta / (e^delta - 1)
};

inline CHLimits11 ch_limits_11(double delta) {
    if (delta == 0.0) return {1.0, 1.0};
    return {delta / -std::expm1(-delta), delta / std::expm1(delta)};
}

}  // namespace altmodels
}  // namespace ncb
