#pragma once

// Evaluation of the transform values
//   U(n) = u_0/n + sum_{m>=1} (-1)^m u_m / n^(m+1)
//   V(n) = v_0/n + sum_{m>=1} (-1)^m v_m / n^(m+1)
// as truncated alternating series.  The moments decrease strictly, so the
// terms alternate with decreasing magnitude and the first omitted term is a
// rigorous truncation bound.
//
// U(n) equals the sum of 1/m over integers m whose leading digits spell n and
// whose trailing digits avoid the pattern (one-occurrence analogue for V), so
// both satisfy digit-expansion identities, checked here as well:
//   distinct digits, p = alpha*b + beta:
//     U(n) = 1/n + sum_{c<b} U(nb+c) - U(nb^2+p)
//     V(n) = sum_{c<b} V(nb+c) - V(nb^2+p) + U(nb^2+p)
//   repeated digit:
//     U(n) = 1/n + sum_{c != alpha} [ U(nb+c) + U(nb^2+cb+alpha) ]
//     V(n) = sum_{c != alpha} [ V(nb+c) + V(nb^2+cb+alpha)
//                               + U(nb^3+cb^2+alpha*b+alpha) ]

#include <cstdint>
#include <stdexcept>

#include "kempner/moments.hpp"
#include "kempner/precision.hpp"

namespace kempner {

template <class Real>
struct SeriesValue {
    Real value;
    Real trunc_bound; // magnitude of the first omitted series term
    int terms_used;
};

enum class TransformKind { u_transform, v_transform };

namespace detail {

// sum_{m=1}^{M} (-1)^m c_m / n^(m+1), Horner from the innermost term.
template <class Real>
Real alternating_tail(const std::vector<Real>& c, int terms, const Real& n) {
    Real s(0);
    for (int m = terms; m >= 1; --m) s = c[static_cast<std::size_t>(m)] - s / n;
    return Real(-s / (n * n));
}

template <class Real>
void check_series_args(std::uint64_t n, const MomentTable<Real>& t, int terms) {
    if (n == 0) throw std::invalid_argument("series evaluation needs n >= 1");
    if (terms < 0 || terms >= t.max_index)
        throw std::invalid_argument(
            "series evaluation needs terms < table max index (the next moment bounds the tail)");
}

template <class Real>
SeriesValue<Real> evaluate_series(const std::vector<Real>& c, std::uint64_t n,
                                  const MomentTable<Real>& t, int terms) {
    check_series_args(n, t, terms);
    ScopedPrecision<Real> scope(t.precision_digits);
    using std::pow;
    Real nr(n);
    Real value = c[0] / nr + alternating_tail(c, terms, nr);
    Real bound = Real(c[static_cast<std::size_t>(terms) + 1] / pow(nr, terms + 2));
    return SeriesValue<Real>{value, bound, terms + 1};
}

} // namespace detail

template <class Real>
SeriesValue<Real> stieltjes_u(std::uint64_t n, const MomentTable<Real>& t, int terms) {
    return detail::evaluate_series(t.u, n, t, terms);
}

template <class Real>
SeriesValue<Real> stieltjes_v(std::uint64_t n, const MomentTable<Real>& t, int terms) {
    return detail::evaluate_series(t.v, n, t, terms);
}

// U evaluated one digit deeper with the pattern's second digit appended.
template <class Real>
SeriesValue<Real> stieltjes_u_beta(std::uint64_t n, const MomentTable<Real>& t, int terms) {
    if (t.pattern.same)
        throw std::invalid_argument("stieltjes_u_beta: defined for distinct pattern digits only");
    return stieltjes_u(n * static_cast<std::uint64_t>(t.pattern.base) +
                           static_cast<std::uint64_t>(t.pattern.beta),
                       t, terms);
}

template <class Real>
struct IdentityCheck {
    Real residual; // |LHS - RHS| of the digit-expansion identity
    Real bound;    // truncation bounds of every series plus a rounding allowance
};

template <class Real>
IdentityCheck<Real> check_functional_identity(TransformKind kind, std::uint64_t n,
                                              const MomentTable<Real>& t, int terms) {
    detail::check_series_args(n, t, terms);
    ScopedPrecision<Real> scope(t.precision_digits);
    const PatternSpec& p = t.pattern;
    auto b = static_cast<std::uint64_t>(p.base);
    int evals = 0;
    auto eval_u = [&](std::uint64_t k) { ++evals; return stieltjes_u(k, t, terms); };
    auto eval_v = [&](std::uint64_t k) { ++evals; return stieltjes_v(k, t, terms); };

    Real lhs(0), rhs(0), bound(0);
    if (kind == TransformKind::u_transform) {
        auto l = eval_u(n);
        lhs = l.value;
        bound += l.trunc_bound;
        rhs = Real(1) / Real(n);
        if (!p.same) {
            for (std::uint64_t c = 0; c < b; ++c) {
                auto s = eval_u(n * b + c);
                rhs += s.value;
                bound += s.trunc_bound;
            }
            auto s = eval_u(n * b * b + static_cast<std::uint64_t>(p.pair_value()));
            rhs -= s.value;
            bound += s.trunc_bound;
        } else {
            auto a = static_cast<std::uint64_t>(p.alpha);
            for (std::uint64_t c = 0; c < b; ++c) {
                if (c == a) continue;
                auto s1 = eval_u(n * b + c);
                auto s2 = eval_u(n * b * b + c * b + a);
                rhs += s1.value + s2.value;
                bound += s1.trunc_bound + s2.trunc_bound;
            }
        }
    } else {
        auto l = eval_v(n);
        lhs = l.value;
        bound += l.trunc_bound;
        if (!p.same) {
            for (std::uint64_t c = 0; c < b; ++c) {
                auto s = eval_v(n * b + c);
                rhs += s.value;
                bound += s.trunc_bound;
            }
            std::uint64_t deep = n * b * b + static_cast<std::uint64_t>(p.pair_value());
            auto sv = eval_v(deep);
            auto su = eval_u(deep);
            rhs += su.value - sv.value;
            bound += sv.trunc_bound + su.trunc_bound;
        } else {
            auto a = static_cast<std::uint64_t>(p.alpha);
            for (std::uint64_t c = 0; c < b; ++c) {
                if (c == a) continue;
                auto s1 = eval_v(n * b + c);
                auto s2 = eval_v(n * b * b + c * b + a);
                auto s3 = eval_u(n * b * b * b + c * b * b + a * b + a);
                rhs += s1.value + s2.value + s3.value;
                bound += s1.trunc_bound + s2.trunc_bound + s3.trunc_bound;
            }
        }
    }
    // Once the truncation bounds drop below the rounding floor of the working
    // precision, the residual is dominated by accumulated rounding instead.
    // Each evaluation performs a few rounded operations per term, so a safe
    // allowance is (operation count) * (magnitude scale) * 10^(1 - digits).
    using std::abs;
    bound += Real(4 * (evals + 1) * (terms + 2)) * (abs(lhs) + abs(rhs) + Real(1)) *
             pow10<Real>(1 - static_cast<int>(t.precision_digits));
    Real resid = lhs - rhs;
    if (resid < 0) resid = -resid;
    return IdentityCheck<Real>{resid, bound};
}

} // namespace kempner
