#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rmt::kernels {

/// One backend of the data-parallel inner loops used by the matrix code.
/// The scalar backend is the reference; vector backends must agree with it up
/// to floating-point reassociation (covered by the equivalence tests).
struct Backend {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sumsq)(const double* a, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    void (*scale)(double alpha, double* x, std::size_t n);
    // row[i] -= a*u[i] + b*w[i]  (fused rank-2 row update of the Householder sweep)
    void (*rank2_update)(double* row, double a, const double* u, double b, const double* w,
                         std::size_t n);
};

const Backend& scalar_backend();

/// Currently active backend. Selected once per process: explicit force_backend()
/// call or RMT_KERNELS environment variable win, otherwise the best backend the
/// CPU supports at runtime.
const Backend& active();

/// Names of every backend compiled into this binary and usable on this CPU.
std::vector<std::string> available_backends();

/// Force a backend by name ("scalar", "avx2", "neon"). Throws on unknown or
/// unsupported names. Intended for tests and benchmarking.
void force_backend(const std::string& name);

inline double dot(const double* a, const double* b, std::size_t n) {
    return active().dot(a, b, n);
}
inline double sumsq(const double* a, std::size_t n) { return active().sumsq(a, n); }
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active().axpy(alpha, x, y, n);
}
inline void scale(double alpha, double* x, std::size_t n) { active().scale(alpha, x, n); }
inline void rank2_update(double* row, double a, const double* u, double b, const double* w,
                         std::size_t n) {
    active().rank2_update(row, a, u, b, w, n);
}

}  // namespace rmt::kernels
