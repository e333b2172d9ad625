#include "rmt/kernels.hpp"

namespace rmt::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sumsq_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void rank2_update_scalar(double* row, double a, const double* u, double b, const double* w,
                         std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) row[i] -= a * u[i] + b * w[i];
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", dot_scalar,   sumsq_scalar,
                                 axpy_scalar, scale_scalar, rank2_update_scalar};
    return backend;
}

}  // namespace rmt::kernels
