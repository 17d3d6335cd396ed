#pragma once

#include <cstdint>

namespace noisybisect {

/// Counter-based 64-bit generator (splitmix64).  A stream is derived
/// statelessly from (seed, stream_id), so episode k of a run always sees the
/// same draws no matter which thread executes it or in what order.
class RngStream {
   public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1); 53-bit resolution.
    double uniform01();

    /// Standard normal via the inverse-CDF transform (fully deterministic;
    /// no library distribution is involved).
    double normal();

   private:
    std::uint64_t state_;
};

}  // namespace noisybisect
