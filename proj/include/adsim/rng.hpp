#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace adsim {

/// Deterministic substream addressing: (seed, stream) pairs give independent,
/// reproducible generators regardless of platform (mt19937_64 + our own
/// Box-Muller, so no reliance on libstdc++'s distribution internals).
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

class GaussianRng {
  public:
    explicit GaussianRng(RngStream s)
        : eng_(make_engine(s)) {}

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double uniform01() {
        // 53-bit mantissa uniform in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

  private:
    static std::mt19937_64 make_engine(RngStream s) {
        std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                          static_cast<std::uint32_t>(s.stream), static_cast<std::uint32_t>(s.stream >> 32)};
        return std::mt19937_64(seq);
    }

    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace adsim
