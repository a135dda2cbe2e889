#pragma once

#include <stdexcept>
#include <string>

namespace ncb {

// Thrown when an infinite-series evaluation exhausts its iteration budget
// before the stopping rule fires.  Carries the partial sum and the number
// of terms accumulated so callers (e.g. fitting loops) can distinguish a
// bad series from bad parameters.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial_sum, long terms)
        : std::runtime_error(what + " (partial sum " + std::to_string(partial_sum) +
                             " after " + std::to_string(terms) + " terms)"),
          partial_sum_(partial_sum),
          terms_(terms) {}

    double partial_sum() const noexcept { return partial_sum_; }
    long terms() const noexcept { return terms_; }

private:
    double partial_sum_;
    long terms_;
};

}  // namespace ncb
