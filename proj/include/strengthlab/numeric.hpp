#ifndef STRENGTHLAB_NUMERIC_HPP
#define STRENGTHLAB_NUMERIC_HPP

#include "strengthlab/field.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace strengthlab {

// binomial(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long j = 1; j <= k; ++j) {
        r = r * Integer(n - k + j) / Integer(j);
    }
    return r;
}

// binomial(top, k) as the degree-k polynomial top(top-1)...(top-k+1)/k!,
// valid for negative top as well (used by Euler-characteristic identities).
inline Integer binomial_generalized(long long top, unsigned k) {
    Integer num = 1, den = 1;
    for (unsigned j = 0; j < k; ++j) {
        num *= Integer(top) - Integer(j);
        den *= Integer(j + 1);
    }
    if (num % den != 0) throw std::logic_error("binomial_generalized: not integral");
    return num / den;
}

// FNV-1a, used to derive stable per-case seeds from string ids.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/*
 * Deterministic random source. mt19937_64's output sequence is fixed by the
 * standard; values are reduced by plain modulo rather than through
 * std::uniform_int_distribution, whose mapping is implementation-defined.
 * The slight modulo bias is irrelevant here: draws only pick test instances.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi], inclusive.
    long long uniform_int(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("Rng: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
        return lo + static_cast<long long>(next() % span);
    }

    // Rational with numerator and denominator of height <= h, denominator >= 1.
    Rational small_rational(long long h) {
        const long long num = uniform_int(-h, h);
        const long long den = uniform_int(1, h);
        return Rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace strengthlab

#endif // STRENGTHLAB_NUMERIC_HPP
