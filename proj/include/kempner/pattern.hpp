#pragma once

// Base-b digit primitives: minimal-length representations, digit lengths,
// leading-digit extraction and overlapping-window occurrence counting for a
// two-digit pattern.  Everything else in the library builds on these.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kempner {

// A two-digit pattern alpha,beta in a fixed base.  alpha is the more
// significant digit of the pattern.  The repeated-digit case (alpha == beta)
// selects different formulas throughout the library, hence the cached flag.
struct PatternSpec {
    int base;
    int alpha;
    int beta;
    bool same;

    PatternSpec(int base_, int alpha_, int beta_)
        : base(base_), alpha(alpha_), beta(beta_), same(alpha_ == beta_) {
        if (base < 2)
            throw std::invalid_argument("PatternSpec: base must be at least 2");
        if (alpha < 0 || alpha >= base || beta < 0 || beta >= base)
            throw std::invalid_argument("PatternSpec: digits must lie in [0, base)");
    }

    // The pattern read as a two-digit integer, alpha*base + beta.
    std::int64_t pair_value() const {
        return static_cast<std::int64_t>(alpha) * base + beta;
    }

    static int digit_value(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
        if (c >= 'a' && c <= 'z') return c - 'a' + 10;
        return -1;
    }

    static char digit_char(int d) {
        return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('A' + d - 10);
    }

    // Parses a two-character pattern in the 0-9A-Z alphabet (bases up to 36).
    static PatternSpec parse(int base, std::string_view text) {
        if (base < 2 || base > 36)
            throw std::invalid_argument("PatternSpec::parse: base must be in [2, 36]");
        if (text.size() != 2)
            throw std::invalid_argument("PatternSpec::parse: pattern must be exactly two digits");
        int a = digit_value(text[0]);
        int b = digit_value(text[1]);
        if (a < 0 || b < 0 || a >= base || b >= base)
            throw std::invalid_argument("PatternSpec::parse: digit out of range for base");
        return PatternSpec(base, a, b);
    }

    std::string str() const {
        if (alpha >= 36 || beta >= 36)
            throw std::domain_error("PatternSpec::str: no single-character digit beyond base 36");
        return std::string{digit_char(alpha), digit_char(beta)};
    }

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

// Digits most significant first; empty for n = 0.
using DigitVector = std::vector<int>;

inline void require_base(int base) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
}

inline DigitVector to_digits(std::uint64_t n, int base) {
    require_base(base);
    DigitVector d;
    while (n != 0) {
        d.push_back(static_cast<int>(n % static_cast<std::uint64_t>(base)));
        n /= static_cast<std::uint64_t>(base);
    }
    std::reverse(d.begin(), d.end());
    return d;
}

inline std::uint64_t from_digits(const DigitVector& d, int base) {
    require_base(base);
    std::uint64_t n = 0;
    for (int v : d) {
        if (v < 0 || v >= base)
            throw std::invalid_argument("from_digits: digit out of range");
        n = n * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(v);
    }
    return n;
}

// Number of digits of n; zero has length 0.
inline int digit_length(std::uint64_t n, int base) {
    require_base(base);
    int l = 0;
    while (n != 0) {
        ++l;
        n /= static_cast<std::uint64_t>(base);
    }
    return l;
}

// Overlapping windows: "111" contains the pattern "11" twice.
inline int count_occurrences(const DigitVector& d, const PatternSpec& p) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] == p.alpha && d[i + 1] == p.beta) ++c;
    return c;
}

inline int count_occurrences(std::uint64_t n, const PatternSpec& p) {
    if (n == 0)
        throw std::invalid_argument("count_occurrences: n must be positive");
    return count_occurrences(to_digits(n, p.base), p);
}

// The integer formed by the first `keep` digits of m.
inline std::uint64_t leading_value(std::uint64_t m, int keep, int base) {
    require_base(base);
    if (m == 0) throw std::invalid_argument("leading_value: m must be positive");
    int len = digit_length(m, base);
    if (keep < 1 || keep > len)
        throw std::invalid_argument("leading_value: digit count out of range");
    for (int i = 0; i < len - keep; ++i)
        m /= static_cast<std::uint64_t>(base);
    return m;
}

} // namespace kempner
