#include "morsekg/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace morsekg {

namespace {

void check_shape(const SymTridiag& t, const char* where) {
    if (t.diag.empty())
        throw std::invalid_argument(std::string(where) + ": empty matrix");
    if (t.off.size() + 1 != t.diag.size())
        throw std::invalid_argument(std::string(where) + ": off.size() must be diag.size()-1");
}

double pivot_floor(const SymTridiag& t) {
    double max_e2 = 1.0;
    for (double e : t.off) max_e2 = std::max(max_e2, e * e);
    return std::numeric_limits<double>::min() * max_e2;
}

}  // namespace

int sturm_count(const SymTridiag& t, double x) {
    check_shape(t, "sturm_count");
    const double pivmin = pivot_floor(t);
    int count = 0;
    double u = t.diag[0] - x;
    if (std::abs(u) < pivmin) u = -pivmin;
    if (u <= 0.0) ++count;
    for (std::size_t i = 1; i < t.diag.size(); ++i) {
        u = t.diag[i] - x - (t.off[i - 1] * t.off[i - 1]) / u;
        if (std::abs(u) < pivmin) u = -pivmin;
        if (u <= 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiag& t, int k) {
    check_shape(t, "lowest_eigenvalues");
    const int n = static_cast<int>(t.diag.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("lowest_eigenvalues: need 1 <= k <= n");

    // Gershgorin bounds.
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    const double span = hi - lo;
    lo -= 1e-12 * std::abs(span) + 1e-300;
    hi += 1e-12 * std::abs(span) + 1e-300;

    std::vector<double> eigs(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        double a = (j > 1) ? eigs[static_cast<std::size_t>(j) - 2] : lo;  // eigenvalues ascend
        double b = hi;
        while (b - a > 4.0 * std::numeric_limits<double>::epsilon() *
                               (std::abs(a) + std::abs(b)) + 1e-300) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;  // interval exhausted in this precision
            if (sturm_count(t, mid) >= j)
                b = mid;
            else
                a = mid;
        }
        eigs[static_cast<std::size_t>(j) - 1] = 0.5 * (a + b);
    }
    return eigs;
}

std::vector<double> inverse_iteration(const SymTridiag& t, double lambda) {
    check_shape(t, "inverse_iteration");
    const std::size_t n = t.diag.size();

    // LU of (T - lambda I) with partial pivoting; bands l (multipliers),
    // d (pivots), u1, u2 (two superdiagonals created by row swaps).
    std::vector<double> d(n), u1(n, 0.0), u2(n, 0.0), l(n, 0.0);
    std::vector<int> swapped(n, 0);
    {
        std::vector<double> a(n), b(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) a[i] = t.diag[i] - lambda;
        for (std::size_t i = 0; i + 1 < n; ++i) b[i] = t.off[i];
        const double tiny = 1e-300;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double sub = t.off[i];  // entry to eliminate in row i+1
            if (std::abs(a[i]) >= std::abs(sub)) {
                double piv = a[i];
                if (std::abs(piv) < tiny) piv = (piv < 0.0 ? -tiny : tiny);
                const double m = sub / piv;
                d[i] = piv;
                u1[i] = b[i];
                u2[i] = 0.0;
                l[i] = m;
                a[i + 1] -= m * b[i];
            } else {
                // swap rows i and i+1; old row i continues as (b[i], 0)
                swapped[i] = 1;
                const double m = a[i] / sub;
                d[i] = sub;
                u1[i] = a[i + 1];
                u2[i] = b[i + 1];
                l[i] = m;
                a[i + 1] = b[i] - m * a[i + 1];
                b[i + 1] = -m * u2[i];
            }
        }
        double last = a[n - 1];
        if (std::abs(last) < tiny) last = (last < 0.0 ? -tiny : tiny);
        d[n - 1] = last;
        u1[n - 1] = 0.0;
    }

    auto solve = [&](std::vector<double>& rhs) {
        // forward substitution with recorded swaps
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= l[i] * rhs[i];
        }
        // back substitution
        for (std::size_t i = n; i-- > 0;) {
            double v = rhs[i];
            if (i + 1 < n) v -= u1[i] * rhs[i + 1];
            if (i + 2 < n) v -= u2[i] * rhs[i + 2];
            rhs[i] = v / d[i];
        }
    };

    std::vector<double> v(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) v[i] += 1e-3 * static_cast<double>((i * 2654435761u) % 97);
    for (int iter = 0; iter < 3; ++iter) {
        solve(v);
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            std::fill(v.begin(), v.end(), 1.0 / std::sqrt(static_cast<double>(n)));
            continue;
        }
        for (double& x : v) x /= norm;
    }
    return v;
}

}  // namespace morsekg
