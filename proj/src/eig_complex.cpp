#include "pdm/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

using cplx = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 30; // per eigenvalue

// sqrt(f^2 + g^2) scaled to avoid overflow; principal branch.
cplx hypot_c(cplx f, cplx g) {
    const double af = std::abs(f);
    const double ag = std::abs(g);
    if (af == 0.0 && ag == 0.0) return 0.0;
    if (af >= ag) {
        const cplx t = g / f;
        return f * std::sqrt(1.0 + t * t);
    }
    const cplx t = f / g;
    return g * std::sqrt(1.0 + t * t);
}

// Shifted QL with complex orthogonal rotations (c^2 + s^2 = 1). Identical in
// structure to the classic implicit-shift tridiagonal QL; the plane rotations
// are complex orthogonal rather than unitary, which keeps the matrix complex
// symmetric tridiagonal throughout.
std::vector<cplx> ql_complex_symmetric(std::vector<cplx> d, std::vector<cplx> e) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return d;
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        double kick = 0.0;
        while (true) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
                ++m;
            }
            if (m == l) break;
            if (iter++ >= kMaxSweeps) {
                std::vector<cplx> partial(d.begin(), d.begin() + l);
                throw NonConvergence("complex QL stalled after 30 sweeps", std::move(partial));
            }

            // Wilkinson-style shift from the leading 2x2 of the active block.
            cplx g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            cplx r = hypot_c(g, cplx(1.0, 0.0));
            const cplx denom = std::abs(g + r) >= std::abs(g - r) ? g + r : g - r;
            g = d[m] - d[l] + e[l] / denom;
            if (kick != 0.0) g *= 1.0 + kick; // nudge past a rotation breakdown

            const std::vector<cplx> d_save(d.begin() + l, d.begin() + m + 1);
            const std::vector<cplx> e_save(e.begin() + l, e.begin() + m + 1);

            cplx s = 1.0;
            cplx c = 1.0;
            cplx p = 0.0;
            bool breakdown = false;
            for (int i = m - 1; i >= l; --i) {
                cplx f = s * e[i];
                const cplx b = c * e[i];
                r = hypot_c(f, g);
                e[i + 1] = r;
                if (std::abs(r) <= 1e-8 * (std::abs(f) + std::abs(g))) {
                    breakdown = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (breakdown) {
                std::copy(d_save.begin(), d_save.end(), d.begin() + l);
                std::copy(e_save.begin(), e_save.end(), e.begin() + l);
                kick = kick == 0.0 ? 1e-8 : kick * 16.0;
                continue;
            }
            kick = 0.0;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    return d;
}

} // namespace

std::vector<cplx> eig_complex(const TridiagonalOperator& op, int k) {
    const int n = static_cast<int>(op.size());
    if (n > 4000) throw std::invalid_argument("eig_complex is budgeted for N <= 4000");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= N");

    std::vector<cplx> values = ql_complex_symmetric(op.diag, op.off);
    std::sort(values.begin(), values.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    values.resize(static_cast<std::size_t>(k));
    return values;
}

namespace {

// LU factorization of (T - lambda I) with partial pivoting (gttrf form) and
// one solve per application; fill-in limited to a second superdiagonal.
struct TridiagLU {
    std::vector<cplx> dl, d, du, du2;
    std::vector<int> piv;

    TridiagLU(const TridiagonalOperator& op, cplx lambda) {
        const int n = static_cast<int>(op.size());
        dl.assign(op.off.begin(), op.off.end());
        du.assign(op.off.begin(), op.off.end());
        d.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = op.diag[static_cast<std::size_t>(i)] - lambda;
        du2.assign(n > 2 ? static_cast<std::size_t>(n - 2) : 0, 0.0);
        piv.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) piv[static_cast<std::size_t>(i)] = i;

        const double tiny = 1e-300;
        for (int i = 0; i < n - 1; ++i) {
            if (std::abs(d[i]) >= std::abs(dl[i])) {
                if (std::abs(d[i]) < tiny) d[i] = tiny;
                const cplx fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
                if (i < n - 2) du2[i] = 0.0;
            } else {
                const cplx fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                const cplx temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if (i < n - 2) {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                piv[i] = i + 1;
            }
        }
        if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;
    }

    void solve(std::vector<cplx>& b) const {
        const int n = static_cast<int>(d.size());
        for (int i = 0; i < n - 1; ++i) {
            if (piv[i] == i) {
                b[i + 1] -= dl[i] * b[i];
            } else {
                const cplx temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl[i] * b[i];
            }
        }
        b[n - 1] /= d[n - 1];
        if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
        for (int i = n - 3; i >= 0; --i) {
            b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
        }
    }
};

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

std::vector<cplx> apply_tridiag(const TridiagonalOperator& op, const std::vector<cplx>& v) {
    const int n = static_cast<int>(op.size());
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cplx s = op.diag[i] * v[i];
        if (i > 0) s += op.off[i - 1] * v[i - 1];
        if (i + 1 < n) s += op.off[i] * v[i + 1];
        out[i] = s;
    }
    return out;
}

} // namespace

EigenPair inverse_iteration(const TridiagonalOperator& op, cplx lambda) {
    const int n = static_cast<int>(op.size());
    const TridiagLU lu(op, lambda);

    // deterministic quasi-random start; avoids accidental orthogonality
    std::vector<cplx> v(static_cast<std::size_t>(n));
    unsigned state = 0x9e3779b9u;
    for (int i = 0; i < n; ++i) {
        state = state * 1664525u + 1013904223u;
        v[i] = 1.0 + 0.25 * (static_cast<double>(state >> 8) / 16777216.0 - 0.5);
    }

    for (int pass = 0; pass < 3; ++pass) {
        lu.solve(v);
        const double nv = norm2(v);
        if (!(nv > 0.0) || !std::isfinite(nv)) break;
        for (auto& x : v) x /= nv;
    }

    // transpose Rayleigh quotient (stationary for complex symmetric T)
    const std::vector<cplx> tv = apply_tridiag(op, v);
    cplx vtv = 0.0;
    cplx vttv = 0.0;
    for (int i = 0; i < n; ++i) {
        vtv += v[i] * v[i];
        vttv += v[i] * tv[i];
    }
    cplx refined = lambda;
    if (std::abs(vtv) > 1e-8) refined = vttv / vtv;

    double res = 0.0;
    for (int i = 0; i < n; ++i) res += std::norm(tv[i] - refined * v[i]);
    res = std::sqrt(res); // ||v|| = 1

    return EigenPair{refined, std::move(v), res};
}

} // namespace pdm
