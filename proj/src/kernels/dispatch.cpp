#include "rmt/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace rmt::kernels {

const Backend* avx2_backend_impl();
const Backend* neon_backend_impl();

namespace {

bool cpu_supports_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend* lookup(const std::string& name) {
    if (name == "scalar") return &scalar_backend();
    if (name == "avx2") {
        const Backend* b = avx2_backend_impl();
        if (b != nullptr && cpu_supports_avx2_fma()) return b;
        return nullptr;
    }
    if (name == "neon") return neon_backend_impl();
    return nullptr;
}

const Backend* select_default() {
    if (const char* env = std::getenv("RMT_KERNELS")) {
        if (const Backend* b = lookup(env)) return b;
        // Unknown or unsupported request in the environment falls back to scalar
        // rather than aborting the process.
        return &scalar_backend();
    }
    if (const Backend* b = avx2_backend_impl(); b != nullptr && cpu_supports_avx2_fma()) return b;
    if (const Backend* b = neon_backend_impl()) return b;
    return &scalar_backend();
}

std::atomic<const Backend*> g_active{nullptr};

}  // namespace

const Backend& active() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (b == nullptr) {
        b = select_default();
        const Backend* expected = nullptr;
        if (!g_active.compare_exchange_strong(expected, b, std::memory_order_acq_rel)) {
            b = expected;
        }
    }
    return *b;
}

std::vector<std::string> available_backends() {
    std::vector<std::string> names{"scalar"};
    if (const Backend* b = avx2_backend_impl(); b != nullptr && cpu_supports_avx2_fma()) {
        names.emplace_back(b->name);
    }
    if (const Backend* b = neon_backend_impl()) names.emplace_back(b->name);
    return names;
}

void force_backend(const std::string& name) {
    const Backend* b = lookup(name);
    if (b == nullptr) {
        throw std::invalid_argument("kernel backend not available: " + name);
    }
    g_active.store(b, std::memory_order_release);
}

}  // namespace rmt::kernels
