#pragma once

// Integer-coefficient polynomials and rational generating functions.  The
// counting layer only ever needs degree <= 4 denominators, but the arithmetic
// here is generic.  Coefficient extraction runs the linear recurrence induced
// by the denominator instead of long division.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kempner/bigint.hpp"

namespace kempner {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const Int& coeff, int power) {
        std::vector<Int> c(static_cast<std::size_t>(power) + 1, Int(0));
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Int& s, const Polynomial& a) {
        std::vector<Int> c(a.c_);
        for (Int& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    Rational eval(const Rational& t) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
        return r;
    }

    // T -> s*T, i.e. coefficient i picks up a factor s^i.
    Polynomial scale_argument(const Int& s) const {
        std::vector<Int> c(c_);
        Int f(1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] *= f;
            f *= s;
        }
        return Polynomial(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_; // c_[i] multiplies T^i
};

struct RationalGF {
    Polynomial num;
    Polynomial den;

    RationalGF(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
        if (den.coeff(0) == 0)
            throw std::invalid_argument("RationalGF: denominator must have nonzero constant term");
    }

    Rational value_at(const Rational& t) const {
        Rational d = den.eval(t);
        if (d == 0) throw std::domain_error("RationalGF::value_at: pole");
        return num.eval(t) / d;
    }

    // Power-series coefficients c_0..c_l_max via den_0 c_l = num_l - sum_{k>=1} den_k c_{l-k}.
    std::vector<Rational> coefficients(int l_max) const {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(l_max) + 1);
        Rational d0(den.coeff(0));
        for (int l = 0; l <= l_max; ++l) {
            Rational acc(num.coeff(l));
            for (int k = 1; k <= den.degree() && k <= l; ++k)
                acc -= Rational(den.coeff(k)) * c[static_cast<std::size_t>(l - k)];
            c.push_back(acc / d0);
        }
        return c;
    }

    RationalGF scale_argument(const Int& s) const {
        return RationalGF(num.scale_argument(s), den.scale_argument(s));
    }

    // Equality as functions, by cross-multiplying (representations may differ).
    bool same_function(const RationalGF& other) const {
        return num * other.den == other.num * den;
    }

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
        if (a.den == b.den) return RationalGF(a.num + b.num, a.den);
        return RationalGF(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
        if (a.den == b.den) return RationalGF(a.num - b.num, a.den);
        return RationalGF(a.num * b.den - b.num * a.den, a.den * b.den);
    }

    friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
        return RationalGF(a.num * b.num, a.den * b.den);
    }
};

} // namespace kempner
