#include "pdm/eig.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdm {

namespace {

// Sturm sequence via the LDL^T pivot recurrence; the number of negative
// pivots of T - xI equals the number of eigenvalues strictly below x. A
// vanishing pivot is an eigenvalue of a leading minor: the next quotient
// e^2/q is pushed to +large so the following pivot counts as negative.
int count_below(const std::vector<std::complex<double>>& diag,
                const std::vector<std::complex<double>>& off, double x) {
    const std::size_t n = diag.size();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        if (i > 0) {
            const double e = off[i - 1].real();
            if (q != 0.0) {
                v = e * e / q;
            } else if (e != 0.0) {
                v = std::abs(e) / std::numeric_limits<double>::epsilon();
            }
        }
        q = diag[i].real() - x - v;
        if (q < 0.0) ++count;
    }
    return count;
}

} // namespace

int sturm_count_below(const TridiagonalOperator& op, double x) {
    if (!op.real_symmetric) throw std::invalid_argument("Sturm count needs a real operator");
    return count_below(op.diag, op.off, x);
}

std::vector<double> eig_sym_tridiag(const TridiagonalOperator& op, int k) {
    if (!op.real_symmetric) {
        throw std::invalid_argument("eig_sym_tridiag needs a real symmetric operator");
    }
    const int n = static_cast<int>(op.size());
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= N");

    auto [lo, hi] = op.gershgorin_interval();
    // widen so strict counts are unambiguous at the extremes
    const double pad = 1e-8 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    lo -= pad;
    hi += pad;

    // bisect to rounding limit; far tighter than the contractual
    // 1e-10 * max(1, Gershgorin radius) bracket width
    std::vector<double> values(static_cast<std::size_t>(k));
    double lower = lo;
    for (int j = 1; j <= k; ++j) {
        double a = lower; // eigenvalues come out ascending; reuse the floor
        double b = hi;
        while (true) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break; // interval at rounding limit
            if (count_below(op.diag, op.off, mid) >= j) {
                b = mid;
            } else {
                a = mid;
            }
        }
        values[static_cast<std::size_t>(j - 1)] = 0.5 * (a + b);
        lower = a;
    }
    return values;
}

} // namespace pdm
