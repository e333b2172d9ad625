#pragma once

#include <cmath>
#include <stdexcept>

namespace rmt {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
    long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1] (7-point Gauss embedded).
inline constexpr double kGk15Nodes[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr double kGk15Weights[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr double kGauss7Weights[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error, long& evals) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(mid + half * kGk15Nodes[i]);
        kronrod += kGk15Weights[i] * fx;
        if (i % 2 == 1) gauss += kGauss7Weights[i / 2] * fx;
    }
    evals += 15;
    value = kronrod * half;
    error = std::abs((kronrod - gauss) * half);
}

template <class F>
void integrate_recurse(const F& f, double a, double b, double tol, int depth,
                       QuadratureResult& out) {
    double value = 0.0;
    double error = 0.0;
    gk15(f, a, b, value, error, out.evaluations);
    if (error <= tol || depth <= 0) {
        out.value += value;
        out.error_estimate += error;
        if (error > tol) out.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    integrate_recurse(f, a, mid, 0.5 * tol, depth - 1, out);
    integrate_recurse(f, mid, b, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
/// The tolerance is applied as abs_tol + rel_tol * |first panel estimate|.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double rel_tol = 1e-10,
                                    double abs_tol = 0.0, int max_depth = 48) {
    if (!(a <= b)) throw std::invalid_argument("integrate_adaptive: bad interval");
    QuadratureResult out;
    if (a == b) return out;
    double value = 0.0;
    double error = 0.0;
    detail::gk15(f, a, b, value, error, out.evaluations);
    const double tol = abs_tol + rel_tol * std::abs(value);
    if (error <= tol) {
        out.value = value;
        out.error_estimate = error;
        return out;
    }
    const double mid = 0.5 * (a + b);
    detail::integrate_recurse(f, a, mid, 0.5 * tol, max_depth, out);
    detail::integrate_recurse(f, mid, b, 0.5 * tol, max_depth, out);
    return out;
}

}  // namespace rmt
