#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Ring context: coordinate indices range over 1..n, letters have uniform arity k.
// n is capped at 10 so a repeat-free flattened index sequence packs into a uint64.
struct Context {
    int n = 0;
    int k = 1;
    bool operator==(const Context&) const = default;
};

inline constexpr int max_n = 10;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Deterministic RNG. SplitMix64: fixed algorithm, identical streams on every
// platform (std::uniform_int_distribution is implementation-defined, so it is
// not used anywhere).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); bound > 0
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive ends
        return lo + int(below(std::uint64_t(hi - lo + 1)));
    }

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

  private:
    std::uint64_t state_;
};

}  // namespace hopfcalc
