#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace oneplane {

/// Thrown when an operation is handed input that violates its preconditions
/// (unknown vertex ids, malformed documents, out-of-range parameters).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Wall-clock budget for the exhaustive solvers. A default-constructed
/// deadline never expires.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_ms(std::int64_t ms) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return d;
    }

    bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Outcome of a complete search under a deadline. `None` means the search
/// space was exhausted, so the negative answer is a proof; `Timeout` means
/// the budget ran out and nothing is known.
enum class Outcome { Found, None, Timeout };

template <typename T>
struct SolveResult {
    Outcome outcome = Outcome::None;
    std::optional<T> value;

    static SolveResult found(T v) { return {Outcome::Found, std::move(v)}; }
    static SolveResult none() { return {Outcome::None, std::nullopt}; }
    static SolveResult timeout() { return {Outcome::Timeout, std::nullopt}; }

    bool ok() const { return outcome == Outcome::Found; }
};

/// Draw a uniform value in [0, n) from a raw 64-bit generator by rejection.
/// std::uniform_int_distribution is not bit-stable across standard library
/// implementations; this is, which keeps generated corpora reproducible.
template <typename Rng>
std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw InputError("rng_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0,1) with 53 random bits.
template <typename Rng>
double rng_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// SplitMix64 step; used to derive independent per-instance seeds.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace oneplane
