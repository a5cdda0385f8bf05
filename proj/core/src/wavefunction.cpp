#include "morsekg/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "morsekg/errors.hpp"
#include "morsekg/quadrature.hpp"

namespace morsekg {

namespace {

constexpr double truncation_tol = 1e-9;

// a_{n+2} from row values; zero numerator propagates through a zero
// pivot, anything else with Z = 0 is degenerate.
cplx next_coefficient(const cplx& numerator, const cplx& z_pivot, int pivot_index,
                      bool* ok = nullptr) {
    if (z_pivot != cplx(0.0, 0.0)) {
        if (ok) *ok = true;
        return -numerator / z_pivot;
    }
    if (numerator == cplx(0.0, 0.0)) {
        if (ok) *ok = true;
        return cplx(0.0, 0.0);
    }
    if (ok) {
        *ok = false;
        return cplx(0.0, 0.0);
    }
    throw DegenerateRecurrenceError(pivot_index);
}

}  // namespace

RecurrenceRow recurrence_row(int n, const ReducedParams& rp, cplx L) {
    if (n < 0) throw std::invalid_argument("recurrence_row: n must be >= 0");
    const double dn = n;
    RecurrenceRow row;
    row.index = n;
    row.x = 2.0 * rp.q * (2.0 * dn + L + 1.0) - rp.a3;
    row.y = rp.a2 + rp.p * (4.0 * dn + 2.0 * L + 1.0);
    row.z = 4.0 * dn * (dn + L) + 2.0 * L * L;
    return row;
}

WavefunctionSeries build_series(const ReducedParams& rp, cplx L, int N) {
    if (N < 2) throw std::invalid_argument("build_series: N must be >= 2");

    std::vector<RecurrenceRow> rows;
    rows.reserve(static_cast<std::size_t>(N) + 3);
    for (int k = 0; k <= N + 2; ++k) rows.push_back(recurrence_row(k, rp, L));

    WavefunctionSeries ws;
    ws.p = rp.p;
    ws.q = rp.q;
    ws.L = L;
    ws.truncation_index = N;
    ws.coefficients.resize(static_cast<std::size_t>(N) + 1);
    ws.coefficients[0] = cplx(1.0, 0.0);
    ws.coefficients[1] = next_coefficient(rows[0].y * ws.coefficients[0], rows[1].z, 1);
    for (int n = 0; n + 2 <= N; ++n) {
        const cplx numerator =
            rows[n].x * ws.coefficients[n] + rows[n + 1].y * ws.coefficients[n + 1];
        ws.coefficients[n + 2] = next_coefficient(numerator, rows[n + 2].z, n + 2);
    }

    // Tentatively extend two steps past N for the truncation check.
    bool ok1 = false, ok2 = false;
    const cplx num1 = rows[N - 1].x * ws.coefficients[N - 1] + rows[N].y * ws.coefficients[N];
    const cplx a_next = next_coefficient(num1, rows[N + 1].z, N + 1, &ok1);
    cplx a_next2(0.0, 0.0);
    if (ok1) {
        const cplx num2 = rows[N].x * ws.coefficients[N] + rows[N + 1].y * a_next;
        a_next2 = next_coefficient(num2, rows[N + 2].z, N + 2, &ok2);
    }
    double peak = 0.0;
    for (const cplx& a : ws.coefficients) peak = std::max(peak, std::abs(a));
    ws.truncated_exactly = ok1 && ok2 && std::abs(a_next) < truncation_tol * peak &&
                           std::abs(a_next2) < truncation_tol * peak;
    return ws;
}

double determinant_residual(const ReducedParams& rp, cplx L, int n) {
    if (n < 0) throw std::invalid_argument("determinant_residual: n must be >= 0");

    std::vector<RecurrenceRow> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) rows.push_back(recurrence_row(k, rp, L));

    // Three-term determinant recurrence D_k = Y_k D_{k-1} - X_{k-1} Z_k D_{k-2},
    // carried in row-scaled form so the result is a relative residual.
    cplx dkm2(0.0, 0.0);
    cplx dkm1(1.0, 0.0);  // scaled D_{-1}
    double skm1 = 1.0;
    for (int k = 0; k <= n; ++k) {
        double scale = std::abs(rows[k].y);
        if (k >= 1) scale = std::max(scale, std::abs(rows[k - 1].x));
        if (k < n) scale = std::max(scale, std::abs(rows[k + 1].z));
        if (scale == 0.0) return 0.0;  // an all-zero row annihilates the determinant

        cplx d = (rows[k].y / scale) * dkm1;
        if (k >= 1) d -= (rows[k - 1].x * rows[k].z / (scale * skm1)) * dkm2;
        dkm2 = dkm1;
        dkm1 = d;
        skm1 = scale;
    }
    return std::abs(dkm1);
}

cplx evaluate_phi(const WavefunctionSeries& ws, cplx z) {
    if (z == cplx(0.0, 0.0)) {
        if (ws.L.real() + 0.5 > 0.0) return cplx(0.0, 0.0);
        throw DivergenceError("evaluate_phi: z = 0 with Re(L) + 1/2 <= 0");
    }
    const cplx w = z * z;
    cplx sum(0.0, 0.0);
    for (std::size_t k = ws.coefficients.size(); k-- > 0;)
        sum = sum * w + ws.coefficients[k];
    return std::exp(ws.p * z + 0.5 * ws.q * w) * sum * std::pow(z, ws.L + 0.5);
}

cplx evaluate_psi(const WavefunctionSeries& ws, double x, double beta) {
    if (x < 0.0) throw std::invalid_argument("evaluate_psi: x must be >= 0");
    if (!(beta > 0.0)) throw std::invalid_argument("evaluate_psi: beta must be > 0");
    const double z = std::exp(-beta * x);
    return evaluate_phi(ws, cplx(z, 0.0)) * std::exp(0.5 * beta * x);
}

double normalize_numeric(const WavefunctionSeries& ws, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("normalize_numeric: beta must be > 0");
    if (ws.p.imag() != 0.0 || ws.q.imag() != 0.0 || ws.L.imag() != 0.0)
        throw std::invalid_argument("normalize_numeric: requires a real-valued series");
    for (const cplx& a : ws.coefficients)
        if (a.imag() != 0.0)
            throw std::invalid_argument("normalize_numeric: requires real coefficients");
    if (!(ws.L.real() > 0.0))
        throw DivergenceError("normalize_numeric: Re(L) <= 0, tail not integrable");

    // |psi|^2 dx maps to |phi(z)|^2 / (beta z^2) dz on (0, 1].
    const auto integrand = [&](double z) {
        const double phi = std::abs(evaluate_phi(ws, cplx(z, 0.0)));
        return phi * phi / (beta * z * z);
    };
    const QuadratureResult quad = integrate_adaptive(integrand, 0.0, 1.0, 1e-10, 0.0, 60);
    if (!quad.converged || !std::isfinite(quad.value) || !(quad.value > 0.0))
        throw DivergenceError("normalize_numeric: norm integral did not converge");
    return 1.0 / std::sqrt(quad.value);
}

}  // namespace morsekg
