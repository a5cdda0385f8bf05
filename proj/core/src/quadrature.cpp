#include "morsekg/quadrature.hpp"

#include <cmath>

namespace morsekg {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] and the embedded 7-point
// Gauss weights (even-index Kronrod nodes are the Gauss nodes).
constexpr double kron_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kron_w[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double gauss_w[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    double kronrod;
    double err;
};

PanelEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_x[i]);
        fv[14 - i] = f(c + h * kron_x[i]);
    }
    fv[7] = f(c);

    double kron = kron_w[7] * fv[7];
    double gauss = gauss_w[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kron_w[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += gauss_w[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int depth, int max_depth, QuadratureResult& out) {
    const PanelEstimate est = gauss_kronrod_15(f, a, b);
    if (est.err <= tol || depth >= max_depth) {
        out.value += est.kronrod;
        out.error_estimate += est.err;
        if (depth >= max_depth && est.err > tol) out.converged = false;
        return;
    }
    ++out.subdivisions;
    const double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, out);
    refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol, double abs_tol,
                                    int max_depth) {
    QuadratureResult out;
    out.converged = true;
    const PanelEstimate first = gauss_kronrod_15(f, a, b);
    const double scale = std::max(std::abs(first.kronrod), 1e-300);
    const double tol = std::max(abs_tol, rel_tol * scale);
    if (first.err <= tol) {
        out.value = first.kronrod;
        out.error_estimate = first.err;
        return out;
    }
    refine(f, a, b, tol, 0, max_depth, out);
    return out;
}

}  // namespace morsekg
