#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace ncb {

// Seeded random stream with the variate generators the samplers need.
// The engine is std::mt19937_64 (bit-exact across platforms by the standard)
// and every distribution below is generated by fixed, hand-written
// algorithms, so a seed determines the output sequence exactly regardless of
// the standard library in use.  A stream is exclusively owned by one caller
// at a time.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    // Uniform on the open interval (0, 1).
    double uniform() {
        for (;;) {
            const double u = (engine_() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    // Standard normal via the Marsaglia polar method, caching the spare.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        for (;;) {
            const double u = 2.0 * uniform() - 1.0;
            const double v = 2.0 * uniform() - 1.0;
            const double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) {
                const double f = std::sqrt(-2.0 * std::log(s) / s);
                spare_ = v * f;
                have_spare_ = true;
                return u * f;
            }
        }
    }

    // Gamma(shape, scale) by Marsaglia-Tsang squeeze; shape < 1 is boosted
    // through Gamma(shape + 1) U^(1/shape).  shape == 0 is the point mass at 0.
    double gamma(double shape, double scale = 1.0) {
        if (!(shape >= 0.0) || !(scale > 0.0))
            throw std::domain_error("RandomStream::gamma: bad shape or scale");
        if (shape == 0.0) return 0.0;
        if (shape < 1.0) {
            const double g = gamma(shape + 1.0, 1.0);
            return scale * g * std::pow(uniform(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
        }
    }

    // Chi-squared with df >= 0 degrees of freedom (df == 0 degenerate at 0).
    double chisq(double df) { return gamma(df / 2.0, 2.0); }

    // Poisson by Knuth's product method, split additively into chunks so the
    // method stays exact for large means.
    long poisson(double mean) {
        if (!(mean >= 0.0)) throw std::domain_error("RandomStream::poisson: mean must be >= 0");
        long total = 0;
        while (mean > 30.0) {
            total += poisson_knuth(30.0);
            mean -= 30.0;
        }
        return total + poisson_knuth(mean);
    }

    long binomial(long n, double p) {
        if (n < 0 || !(p >= 0.0) || !(p <= 1.0))
            throw std::domain_error("RandomStream::binomial: bad arguments");
        long k = 0;
        for (long i = 0; i < n; ++i)
            if (uniform() < p) ++k;
        return k;
    }

    // Beta(a, b) with a, b > 0 as a gamma ratio.
    double beta(double a, double b) {
        if (!(a > 0.0) || !(b > 0.0))
            throw std::domain_error("RandomStream::beta: shapes must be > 0");
        const double x = gamma(a, 1.0);
        const double y = gamma(b, 1.0);
        if (x == 0.0 && y == 0.0) return 0.5;  // only reachable by underflow
        return x / (x + y);
    }

private:
    long poisson_knuth(double mean) {
        if (mean == 0.0) return 0;
        const double limit = std::exp(-mean);
        long k = 0;
        double prod = 1.0;
        do {
            ++k;
            prod *= uniform();
        } while (prod > limit);
        return k - 1;
    }

    std::mt19937_64 engine_;
    std::uint64_t seed_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ncb
