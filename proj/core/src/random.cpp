#include "qsent/random.hpp"

#include <cmath>
#include <numbers>

namespace qsent {

double Rng::uniform() {
    // k/2^53 for k in [1, 2^53 - 1] keeps both endpoints out.
    for (;;) {
        const std::uint64_t k = engine_() >> 11;
        if (k != 0) return static_cast<double>(k) * 0x1.0p-53;
    }
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    cached_normal_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double Rng::exponential() { return -std::log(uniform()); }

ComplexMatrix ginibre(std::ptrdiff_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    }
    return g;
}

ComplexMatrix haar_unitary(std::ptrdiff_t n, Rng& rng) {
    const ComplexMatrix z = ginibre(n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0.0) q.col(j) *= diag / mag;
    }
    return q;
}

} // namespace qsent
