#pragma once

// Special functions and combinatorial kernels: Pochhammer symbols and their
// derivatives, Stirling numbers, incomplete beta/gamma, and the
// hypergeometric family 1F1, 2F1, 2F2 and Humbert psi2.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ncb/errors.hpp"
#include "ncb/series.hpp"

namespace ncb::specfun {

using int128 = __int128;
using uint128 = unsigned __int128;

// Stirling tables are exact up to this index; the moment formulas that
// consume them are capped accordingly.
inline constexpr int kStirlingMax = 30;

namespace detail {

using StirlingTable =
    std::array<std::array<uint128, kStirlingMax + 1>, kStirlingMax + 1>;

constexpr StirlingTable make_stirling2_table() {
    StirlingTable s{};
    s[0][0] = 1;
    for (int n = 1; n <= kStirlingMax; ++n)
        for (int k = 1; k <= n; ++k)
            s[n][k] = uint128(k) * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

constexpr StirlingTable make_stirling1_table() {
    StirlingTable s{};
    s[0][0] = 1;
    for (int n = 1; n <= kStirlingMax; ++n)
        for (int k = 1; k <= n; ++k)
            s[n][k] = uint128(n - 1) * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

inline constexpr StirlingTable kStirling2 = make_stirling2_table();
inline constexpr StirlingTable kStirling1Unsigned = make_stirling1_table();

inline void check_stirling_index(int a, int b) {
    if (a < 0 || b < 0 || a > kStirlingMax || b > kStirlingMax)
        throw std::out_of_range("Stirling index out of table range [0, 30]");
}

}  // namespace detail

// S(i, j), Stirling number of the second kind.
inline uint128 stirling2(int i, int j) {
    detail::check_stirling_index(i, j);
    if (j > i) return 0;
    return detail::kStirling2[i][j];
}

// |s(r, i)|, unsigned Stirling number of the first kind.
inline uint128 stirling1_unsigned(int r, int i) {
    detail::check_stirling_index(r, i);
    if (i > r) return 0;
    return detail::kStirling1Unsigned[r][i];
}

// s(r, i) = (-1)^(r-i) |s(r, i)|.
inline int128 stirling1_signed(int r, int i) {
    const uint128 u = stirling1_unsigned(r, i);
    return ((r - i) % 2 != 0) ? -int128(u) : int128(u);
}

inline double stirling2_d(int i, int j) { return static_cast<double>(stirling2(i, j)); }
inline double stirling1_unsigned_d(int r, int i) {
    return static_cast<double>(stirling1_unsigned(r, i));
}

// Ascending factorial (a)_l = a (a+1) ... (a+l-1), with (a)_0 = 1.
inline double pochhammer(double a, int l) {
    if (l < 0) throw std::domain_error("pochhammer: order must be >= 0");
    double p = 1.0;
    for (int k = 0; k < l; ++k) p *= a + k;
    return p;
}

// (a)_{l+m} split as (a)_l (a+l)_m.
inline double pochhammer_sum_split(double a, int l, int m) {
    return pochhammer(a, l) * pochhammer(a + l, m);
}

// Coefficients c_k with (a)_r = sum_k c_k a^k; c_k = |s(r, k)|.
struct PochPoly {
    int r = 0;
    std::vector<double> coeffs;  // size r + 1, coeffs[0] = 0 for r >= 1

    static PochPoly make(int r) {
        if (r < 0 || r > kStirlingMax)
            throw std::out_of_range("PochPoly: order out of range [0, 30]");
        PochPoly p;
        p.r = r;
        p.coeffs.resize(r + 1);
        for (int k = 0; k <= r; ++k) p.coeffs[k] = stirling1_unsigned_d(r, k);
        return p;
    }

    double eval(double a) const {
        double acc = 0.0;
        for (int k = r; k >= 0; --k) acc = acc * a + coeffs[k];
        return acc;
    }

    // i-th derivative of the polynomial at a.
    double derivative(double a, int i) const {
        if (i < 0) throw std::domain_error("PochPoly: derivative order must be >= 0");
        if (i > r) return 0.0;
        double acc = 0.0;
        for (int k = r; k >= i; --k) {
            double falling = 1.0;
            for (int t = 0; t < i; ++t) falling *= k - t;
            acc += coeffs[k] * falling * std::pow(a, k - i);
        }
        return acc;
    }
};

// d^i/da^i (a)_r, evaluated analytically through the coefficient form.
inline double poch_derivative(double a, int r, int i) {
    if (i > r) return 0.0;
    return PochPoly::make(r).derivative(a, i);
}

// Exact binomial coefficient for small integer arguments.
inline double choose(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

inline double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be > 0");
    return std::lgamma(x);
}

inline double ln_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("ln_beta: arguments must be > 0");
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace detail {

// Continued fraction for the regularized incomplete beta (Lentz's method).
inline double ibeta_cf(double x, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double fpmin = std::numeric_limits<double>::min() / eps;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= eps) return h;
    }
    throw ConvergenceError("reg_inc_beta: continued fraction did not converge", h, 300);
}

}  // namespace detail

// Regularized incomplete beta B(x; a, b) / B(a, b), i.e. the Beta(a, b) CDF.
inline double reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("reg_inc_beta: shape parameters must be > 0");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::domain_error("reg_inc_beta: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double lnfront =
        a * std::log(x) + b * std::log1p(-x) - ln_beta(a, b);
    if (x < (a + 1.0) / (a + b + 2.0))
        return std::exp(lnfront) * detail::ibeta_cf(x, a, b) / a;
    return 1.0 - std::exp(lnfront) * detail::ibeta_cf(1.0 - x, b, a) / b;
}

namespace detail {

// Regularized lower incomplete gamma P(a, x) by series expansion (x < a + 1).
inline double gamma_p_series(double a, double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 1; n <= 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * eps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw ConvergenceError("gamma_p: series did not converge", sum, 500);
}

// Regularized upper incomplete gamma Q(a, x) by continued fraction (x >= a + 1).
inline double gamma_q_cf(double a, double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= eps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw ConvergenceError("gamma_q: continued fraction did not converge", h, 500);
}

}  // namespace detail

// Regularized lower incomplete gamma P(a, x); the chi-squared CDF runs on it.
inline double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_p: a must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? detail::gamma_p_series(a, x) : 1.0 - detail::gamma_q_cf(a, x);
}

inline double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_q: a must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("gamma_q: x must be >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - detail::gamma_p_series(a, x) : detail::gamma_q_cf(a, x);
}

// Upper incomplete gamma Gamma(a, x) = integral_x^inf t^(a-1) e^(-t) dt.
inline double upper_inc_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("upper_inc_gamma: a must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("upper_inc_gamma: x must be >= 0");
    return gamma_q(a, x) * std::exp(std::lgamma(a));
}

namespace detail {

inline bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

}  // namespace detail

// Kummer's confluent hypergeometric function 1F1(a; b; z).  Negative z is
// routed through the Kummer transform 1F1(a; b; z) = e^z 1F1(b-a; b; -z) so
// the series keeps positive terms.
inline double kummer_1f1(double a, double b, double z, SeriesControl ctrl = {}) {
    ctrl.validate();
    if (detail::is_nonpositive_integer(b))
        throw std::domain_error("kummer_1f1: b must not be zero or a negative integer");
    if (z == 0.0) return 1.0;
    if (z < 0.0) return std::exp(z) * kummer_1f1(b - a, b, -z, ctrl);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < ctrl.maxiter; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        const double prev = sum;
        sum += term;
        if (ncb::detail::series_settled(sum, prev, ctrl.tol)) return sum;
    }
    throw ConvergenceError("kummer_1f1: series did not converge", sum, ctrl.maxiter);
}

// log 1F1(a; b; z) accumulated in log space; needed where e^(-lam/2) 1F1(...)
// would overflow or underflow if formed naively.  Requires a, b > 0 and z >= 0
// so that every term is positive.
inline double ln_kummer_1f1(double a, double b, double z, SeriesControl ctrl = {}) {
    ctrl.validate();
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("ln_kummer_1f1: a and b must be > 0");
    if (!(z >= 0.0)) throw std::domain_error("ln_kummer_1f1: z must be >= 0");
    if (z == 0.0) return 0.0;
    const double lz = std::log(z);
    double lterm = 0.0;  // log of the k-th term, starting at k = 0
    double lsum = 0.0;
    for (int k = 0; k < ctrl.maxiter; ++k) {
        lterm += std::log((a + k) / (b + k)) + lz - std::log(k + 1.0);
        const double prev = lsum;
        lsum = ncb::detail::log_add_exp(lsum, lterm);
        if (ncb::detail::series_settled(lsum, prev, ctrl.tol)) return lsum;
    }
    throw ConvergenceError("ln_kummer_1f1: series did not converge", lsum, ctrl.maxiter);
}

// Gauss hypergeometric 2F1(a, b; c; z) for z < 1.  The direct series is used
// on (-0.9, 1); at or below -0.9 the Pfaff transformation
//   2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1))
// maps the argument into (0, 1).
inline double gauss_2f1(double a, double b, double c, double z, SeriesControl ctrl = {}) {
    ctrl.validate();
    if (detail::is_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: c must not be zero or a negative integer");
    if (!(z < 1.0)) throw std::domain_error("gauss_2f1: z must be < 1");
    if (z == 0.0) return 1.0;
    if (z <= -0.9)
        return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0), ctrl);
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < ctrl.maxiter; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        const double prev = sum;
        sum += term;
        if (ncb::detail::series_settled(sum, prev, ctrl.tol)) return sum;
    }
    throw ConvergenceError("gauss_2f1: series did not converge", sum, ctrl.maxiter);
}

// Generalized hypergeometric 2F2(a1, a2; b1, b2; z).
inline double generalized_2f2(double a1, double a2, double b1, double b2, double z,
                              SeriesControl ctrl = {}) {
    ctrl.validate();
    if (detail::is_nonpositive_integer(b1) || detail::is_nonpositive_integer(b2))
        throw std::domain_error("generalized_2f2: b1, b2 must not be zero or negative integers");
    if (z == 0.0) return 1.0;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < ctrl.maxiter; ++k) {
        term *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (k + 1)) * z;
        const double prev = sum;
        sum += term;
        if (ncb::detail::series_settled(sum, prev, ctrl.tol)) return sum;
    }
    throw ConvergenceError("generalized_2f2: series did not converge", sum, ctrl.maxiter);
}

// Humbert's confluent hypergeometric function of two variables,
//   psi2[alpha; g1, g2; x, y] = sum_j (alpha)_j / (g1)_j x^j / j!
//                               * 1F1(alpha + j; g2; y),
// evaluated as the outer series over j with a fresh inner 1F1 per term.
inline double humbert_psi2(double alpha, double g1, double g2, double x, double y,
                           SeriesControl ctrl = {}) {
    ctrl.validate();
    if (!(alpha > 0.0)) throw std::domain_error("humbert_psi2: alpha must be > 0");
    if (!(g1 > 0.0) || !(g2 > 0.0))
        throw std::domain_error("humbert_psi2: g1 and g2 must be > 0");
    double sum = kummer_1f1(alpha, g2, y, ctrl);
    if (x == 0.0) return sum;
    double coef = 1.0;
    double u = alpha, l = g1;
    for (int m = 1; m <= ctrl.maxiter; ++m) {
        coef *= (u / l) * x / m;
        const double fac = coef * kummer_1f1(alpha + m, g2, y, ctrl);
        const double prev = sum;
        sum += fac;
        if (ncb::detail::series_settled(sum, prev, ctrl.tol)) return sum;
        u += 1.0;
        l += 1.0;
    }
    throw ConvergenceError("humbert_psi2: outer series did not converge", sum, ctrl.maxiter);
}

// log psi2 for x, y >= 0, accumulated in log space term by term.
inline double ln_humbert_psi2(double alpha, double g1, double g2, double x, double y,
                              SeriesControl ctrl = {}) {
    ctrl.validate();
    if (!(alpha > 0.0)) throw std::domain_error("ln_humbert_psi2: alpha must be > 0");
    if (!(g1 > 0.0) || !(g2 > 0.0))
        throw std::domain_error("ln_humbert_psi2: g1 and g2 must be > 0");
    if (!(x >= 0.0) || !(y >= 0.0))
        throw std::domain_error("ln_humbert_psi2: x and y must be >= 0");
    double lsum = ln_kummer_1f1(alpha, g2, y, ctrl);
    if (x == 0.0) return lsum;
    const double lx = std::log(x);
    double lcoef = 0.0;
    double u = alpha, l = g1;
    for (int m = 1; m <= ctrl.maxiter; ++m) {
        lcoef += std::log(u / l) + lx - std::log(double(m));
        const double lfac = lcoef + ln_kummer_1f1(alpha + m, g2, y, ctrl);
        const double prev = lsum;
        lsum = ncb::detail::log_add_exp(lsum, lfac);
        if (ncb::detail::series_settled(lsum, prev, ctrl.tol)) return lsum;
        u += 1.0;
        l += 1.0;
    }
    throw ConvergenceError("ln_humbert_psi2: outer series did not converge", lsum,
                           ctrl.maxiter);
}

}  // namespace ncb::specfun
