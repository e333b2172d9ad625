#pragma once

#include <cstdint>

namespace rmt {

/// SplitMix64 stream. Cheap to construct, so the simulation code makes one
/// stream per (seed, replicate) or per (seed, entry) and never shares state
/// across work items; results are then independent of traversal order and
/// thread count.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform on the open interval (0, 1).
    double uniform01() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// Statelessly combines a key with a counter into a fresh stream seed.
inline std::uint64_t mix_seed(std::uint64_t key, std::uint64_t counter) {
    RngStream s(key ^ (0x9e3779b97f4a7c15ull + counter * 0xd1342543de82ef95ull));
    return s.next_u64();
}

}  // namespace rmt
