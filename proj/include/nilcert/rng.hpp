#ifndef NILCERT_RNG_HPP
#define NILCERT_RNG_HPP

#include <cstdint>
#include <random>

namespace nilcert {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Per-trial random stream: every trial derives its own engine state from
// (master seed, trial index), so trial t is reproducible in isolation and
// reports do not depend on evaluation order.
class TrialRng {
public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
        : engine_(splitmix64(splitmix64(master_seed) ^
                             splitmix64(trial_index + 0x51ED2701ULL))) {}

    // Uniform-ish integer in [-bound, bound]; the tiny modulo bias is
    // irrelevant here (samples witness universal claims, genericity only
    // needs a nonvanishing-polynomial condition).
    long next_int(long bound) {
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
        return static_cast<long>(engine_() % span) - bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace nilcert

#endif
