#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ncb {

// Truncation policy shared by every infinite-series evaluation in the
// library.  tol == 0 means "iterate until additional terms no longer change
// the partial sum"; otherwise the series stops once the partial sum changes
// by no more than tol in relative terms.
struct SeriesControl {
    double tol = 0.0;
    int maxiter = 2000;

    void validate() const {
        if (!(tol >= 0.0))
            throw std::domain_error("SeriesControl: tol must be >= 0");
        if (maxiter < 1)
            throw std::domain_error("SeriesControl: maxiter must be >= 1");
    }
};

namespace detail {

// Stopping rule applied term by term: with tol == 0 the partial sum must be
// bitwise unchanged, otherwise the change must be small relative to the sum.
inline bool series_settled(double current, double previous, double tol) {
    if (tol == 0.0) return current == previous;
    return std::abs(current - previous) <= tol * std::abs(current);
}

// log(exp(a) + exp(b)) without leaving log space.
inline double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace detail
}  // namespace ncb
