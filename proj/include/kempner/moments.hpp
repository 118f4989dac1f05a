#pragma once

// Moment sequences u_m, v_m of the string measures, by linear recurrence with
// exact integer coefficients.  Multiplying the recurrences through by b^(m+1)
// (resp. b^(2m+2)) makes every coefficient an integer, so the only rounding
// per term is the final division.
//
// Distinct digits (alpha != beta), pattern value p = alpha*b + beta:
//   (b^(2m+2) - b^(m+2) + 1) u_m = sum_{j=1}^m C(m,j) (b^(m+1) g_j - p^j) u_(m-j)
//   same lead for v_m, with extra + C(m,j) p^j u_(m-j) terms and + u_m,
// where g_j sums d^j over all digits.
//
// Repeated digit (alpha == beta):
//   (b^(2m+2) - (b-1)b^(m+1) - (b-1)) u_m
//       = sum C(m,j) (b^(m+1) g'_j + t'_j) u_(m-j)
//   (b^(3m+3) - (b-1)b^(2m+2) - (b-1)b^(m+1)) v_m
//       = sum C(m,j) ((b^(2m+2) g'_j + b^(m+1) t'_j) v_(m-j) + k'_j u_(m-j))
//         + (b-1) u_m
// where g'_j, t'_j, k'_j sum d^j, (db+alpha)^j, (db^2+alpha*b+alpha)^j over
// digits d != alpha.
//
// Starting values: u_0 = b^2 always; v_0 = b^2 (distinct) or b(b-1) (repeated).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kempner/bigint.hpp"
#include "kempner/counting.hpp"
#include "kempner/pattern.hpp"
#include "kempner/precision.hpp"

namespace kempner {

// Raised when a computed quantity fails a sanity bound that only breaks when
// the working precision (or series length) was insufficient.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PowerSums {
    int base;
    int alpha;
    std::vector<Int> gamma;       // sum of d^j over all digits
    std::vector<Int> gamma_prime; // sum of d^j, d != alpha
    std::vector<Int> theta_prime; // sum of (d*b + alpha)^j, d != alpha
    std::vector<Int> kappa_prime; // sum of (d*b^2 + alpha*b + alpha)^j, d != alpha
};

inline PowerSums compute_power_sums(const PatternSpec& p, int max_index) {
    if (max_index < 0) throw std::invalid_argument("compute_power_sums: max_index must be >= 0");
    int b = p.base;
    PowerSums ps{b, p.alpha, {}, {}, {}, {}};
    std::size_t n = static_cast<std::size_t>(max_index) + 1;
    ps.gamma.reserve(n);
    ps.gamma_prime.reserve(n);
    ps.theta_prime.reserve(n);
    ps.kappa_prime.reserve(n);

    std::vector<Int> dj(static_cast<std::size_t>(b), Int(1));       // d^j
    std::vector<Int> tj(static_cast<std::size_t>(b), Int(1));       // (d*b + alpha)^j
    std::vector<Int> kj(static_cast<std::size_t>(b), Int(1));       // (d*b^2 + alpha*b + alpha)^j
    for (int j = 0; j <= max_index; ++j) {
        Int g(0), gp(0), tp(0), kp(0);
        for (int d = 0; d < b; ++d) {
            auto i = static_cast<std::size_t>(d);
            g += dj[i];
            if (d != p.alpha) {
                gp += dj[i];
                tp += tj[i];
                kp += kj[i];
            }
        }
        ps.gamma.push_back(g);
        ps.gamma_prime.push_back(gp);
        ps.theta_prime.push_back(tp);
        ps.kappa_prime.push_back(kp);
        for (int d = 0; d < b; ++d) {
            auto i = static_cast<std::size_t>(d);
            dj[i] *= d;
            tj[i] *= d * b + p.alpha;
            kj[i] *= Int(d) * b * b + p.alpha * b + p.alpha;
        }
    }
    return ps;
}

template <class Real>
struct MomentTable {
    PatternSpec pattern;
    int max_index;             // largest m stored
    unsigned precision_digits; // decimal digits the entries were computed at
    std::vector<Real> u;
    std::vector<Real> v;
};

// The moments are integrals of x^m against finite positive measures, so they
// must be positive and strictly decreasing; anything else means the working
// precision did not support the requested length.
template <class Real>
inline void validate_moment_table(const MomentTable<Real>& t) {
    for (int m = 0; m <= t.max_index; ++m) {
        auto i = static_cast<std::size_t>(m);
        if (!(t.u[i] > 0) || !(t.v[i] > 0))
            throw precision_error("moment table: nonpositive entry at m=" + std::to_string(m));
        if (m > 0 && (!(t.u[i] < t.u[i - 1]) || !(t.v[i] < t.v[i - 1])))
            throw precision_error("moment table: sequence not strictly decreasing at m=" +
                                  std::to_string(m));
    }
}

template <class Real>
MomentTable<Real> compute_moments(const PatternSpec& p, int max_index, unsigned precision_digits) {
    if (max_index < 0) throw std::invalid_argument("compute_moments: max_index must be >= 0");
    if (precision_digits < 1)
        throw std::invalid_argument("compute_moments: precision_digits must be >= 1");
    ScopedPrecision<Real> scope(precision_digits);

    int b = p.base;
    PowerSums ps = compute_power_sums(p, max_index);
    MomentTable<Real> t{p, max_index, precision_digits, {}, {}};
    t.u.reserve(static_cast<std::size_t>(max_index) + 1);
    t.v.reserve(static_cast<std::size_t>(max_index) + 1);
    t.u.push_back(Real(b * b));
    t.v.push_back(p.same ? Real(b * (b - 1)) : Real(b * b));

    std::vector<Int> binom{Int(1)}; // row m of Pascal's triangle, updated in place
    std::vector<Int> ppow{Int(1)};  // pattern value powers, distinct-digit case
    Int pval(p.pair_value());

    for (int m = 1; m <= max_index; ++m) {
        binom.push_back(Int(1));
        for (int j = m - 1; j >= 1; --j) binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j - 1)];

        Int bm1 = int_pow(Int(b), static_cast<unsigned>(m + 1));
        Real su(0), sv(0);

        if (!p.same) {
            ppow.push_back(ppow.back() * pval);
            Int den = bm1 * bm1 - bm1 * b + 1;
            for (int j = 1; j <= m; ++j) {
                auto ju = static_cast<std::size_t>(j);
                auto mu = static_cast<std::size_t>(m - j);
                Int cu = binom[ju] * (bm1 * ps.gamma[ju] - ppow[ju]);
                su += Real(cu) * t.u[mu];
                sv += Real(cu) * t.v[mu] + Real(binom[ju] * ppow[ju]) * t.u[mu];
            }
            Real denr(den);
            t.u.push_back(Real(su / denr));
            t.v.push_back(Real((sv + t.u.back()) / denr));
        } else {
            Int b2m2 = bm1 * bm1;
            Int denu = b2m2 - (b - 1) * bm1 - (b - 1);
            Int denv = b2m2 * bm1 - (b - 1) * b2m2 - (b - 1) * bm1;
            for (int j = 1; j <= m; ++j) {
                auto ju = static_cast<std::size_t>(j);
                auto mu = static_cast<std::size_t>(m - j);
                Int cu = binom[ju] * (bm1 * ps.gamma_prime[ju] + ps.theta_prime[ju]);
                Int cv = binom[ju] * (b2m2 * ps.gamma_prime[ju] + bm1 * ps.theta_prime[ju]);
                su += Real(cu) * t.u[mu];
                sv += Real(cv) * t.v[mu] + Real(binom[ju] * ps.kappa_prime[ju]) * t.u[mu];
            }
            t.u.push_back(Real(su / Real(denu)));
            t.v.push_back(Real((sv + (b - 1) * t.u.back()) / Real(denv)));
        }
    }

    validate_moment_table(t);
    return t;
}

enum class MomentKind { u_moment, v_moment };

template <class Real>
struct OracleMoment {
    Real value;
    Real trunc_bound; // mass of the strings beyond the enumerated depth
    std::uint64_t strings_visited;
};

namespace detail {

template <class Real>
struct MomentDfs {
    const PatternSpec& p;
    int target_occurrences;
    int m;
    int max_len;
    bool skip_leading_alpha; // repeated-digit case integrates against sigma/tau
    std::vector<Real> inv_pow;
    Real value{0};
    std::uint64_t visited = 0;

    Real x_power(const Real& x) const {
        if (m == 0) return Real(1);
        Real r(1), base(x);
        int e = m;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    void visit(int len, int last_digit, int occ, const Real& x) {
        ++visited;
        if (occ == target_occurrences)
            value += x_power(x) * inv_pow[static_cast<std::size_t>(len)];
        if (len == max_len) return;
        const Real& scale = inv_pow[static_cast<std::size_t>(len) + 1];
        for (int d = 0; d < p.base; ++d) {
            if (len == 0 && skip_leading_alpha && d == p.alpha) continue;
            int occ2 = occ + (len > 0 && last_digit == p.alpha && d == p.beta ? 1 : 0);
            if (occ2 > target_occurrences) continue;
            visit(len + 1, d, occ2, Real(x + d * scale));
        }
    }
};

} // namespace detail

// Independent check of the recurrences: enumerate every admissible string up
// to the given length and sum (n(X)/b^|X|)^m * b^-|X| directly.  The omitted
// strings have total mass equal to the generating-function tail, and x^m < 1,
// so that tail bounds the truncation error.
template <class Real>
OracleMoment<Real> moment_oracle(const PatternSpec& p, MomentKind kind, int m, int max_len) {
    if (m < 0) throw std::invalid_argument("moment_oracle: m must be >= 0");
    if (max_len < 0) throw std::invalid_argument("moment_oracle: max_len must be >= 0");

    detail::MomentDfs<Real> dfs{p,
                                kind == MomentKind::v_moment ? 1 : 0,
                                m,
                                max_len,
                                p.same,
                                {}};
    dfs.inv_pow.reserve(static_cast<std::size_t>(max_len) + 1);
    Real inv_b = Real(1) / Real(p.base);
    Real cur(1);
    for (int l = 0; l <= max_len; ++l) {
        dfs.inv_pow.push_back(cur);
        cur *= inv_b;
    }
    dfs.visit(0, -1, 0, Real(0));

    MeasureKind mk =
        kind == MomentKind::u_moment ? MeasureKind::no_occurrence : MeasureKind::one_occurrence;
    RationalGF support = mass_gf(p, mk);
    if (p.same) support = support - mass_gf(p, mk, p.alpha);
    Rational tail = support.value_at(Rational(1));
    for (const Rational& c : support.coefficients(max_len)) tail -= c;

    return OracleMoment<Real>{dfs.value, Real(tail), dfs.visited};
}

} // namespace kempner
