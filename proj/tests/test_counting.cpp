#include <kempner/counting.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using namespace kempner;

namespace {
Rational r(long num, long den = 1) { return Rational(num) / Rational(den); }
} // namespace

TEST_CASE("total string masses at T = 1") {
    PatternSpec de(10, 4, 2);
    PatternSpec dd(2, 0, 0);

    REQUIRE(mass_gf(de, MeasureKind::no_occurrence).value_at(Rational(1)) == r(100));
    REQUIRE(mass_gf(de, MeasureKind::one_occurrence).value_at(Rational(1)) == r(100));
    // Equal-digit patterns: b(b+1) for zero occurrences, b^2 for one.
    REQUIRE(mass_gf(dd, MeasureKind::no_occurrence).value_at(Rational(1)) == r(6));
    REQUIRE(mass_gf(dd, MeasureKind::one_occurrence).value_at(Rational(1)) == r(4));
}

TEST_CASE("mass splits over the leading digit") {
    for (PatternSpec p : {PatternSpec(10, 4, 2), PatternSpec(2, 0, 0), PatternSpec(5, 3, 3),
                          PatternSpec(7, 0, 6)}) {
        for (auto mk : {MeasureKind::no_occurrence, MeasureKind::one_occurrence}) {
            RationalGF total = mass_gf(p, mk);
            RationalGF sum = mass_gf(p, mk, 0);
            for (int d = 1; d < p.base; ++d) sum = sum + mass_gf(p, mk, d);
            if (mk == MeasureKind::no_occurrence) {
                // The empty string carries mass 1 and starts with no digit.
                RationalGF one{Polynomial({Int(1)}), Polynomial({Int(1)})};
                sum = sum + one;
            }
            REQUIRE(total.same_function(sum));
        }
    }
}

TEST_CASE("one-occurrence mass is the square of the beta-led avoiding mass") {
    std::mt19937 rng(7u);
    for (int i = 0; i < 40; ++i) {
        int b = 2 + static_cast<int>(rng() % 35);
        PatternSpec p(b, static_cast<int>(rng() % b), static_cast<int>(rng() % b));
        RationalGF z = mass_gf(p, MeasureKind::one_occurrence);
        RationalGF wb = mass_gf(p, MeasureKind::no_occurrence, p.beta);
        REQUIRE(z.same_function(wb * wb));
    }
}

TEST_CASE("integer counts per digit length") {
    PatternSpec p00(2, 0, 0);
    PatternSpec p42(10, 4, 2);

    auto counts = [](const PatternSpec& p, int occ, int len) {
        return integer_counts(count_per_length(p, occ, all_nonzero_digits(p.base), len));
    };

    REQUIRE(counts(p00, 1, 3) == std::vector<Int>{0, 0, 0, 1});
    // Binary integers avoiding "00": a Fibonacci count per length.
    REQUIRE(counts(p00, 0, 4) == std::vector<Int>{0, 1, 2, 3, 5});
    REQUIRE(counts(p42, 1, 3) == std::vector<Int>{0, 0, 1, 19});
}

TEST_CASE("leading digit subsets add up") {
    PatternSpec p(10, 9, 9);
    auto all = integer_counts(count_per_length(p, 1, all_nonzero_digits(10), 5));
    auto lo = integer_counts(count_per_length(p, 1, {1, 2, 3, 4}, 5));
    auto hi = integer_counts(count_per_length(p, 1, {5, 6, 7, 8, 9}, 5));
    for (std::size_t l = 0; l < all.size(); ++l) REQUIRE(all[l] == lo[l] + hi[l]);

    REQUIRE_THROWS_AS(count_per_length(p, 1, {0, 1}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(count_per_length(p, 1, {}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(count_per_length(p, 2, {1}, 3), std::invalid_argument);
}

TEST_CASE("mass sequences expose string masses, not integer counts") {
    PatternSpec p(10, 4, 2);
    auto mu = mass_sequence(p, MassSequence::Kind::mu_total, 3);
    REQUIRE(mu.values[0] == r(1)); // the empty string
    auto nu = mass_sequence(p, MassSequence::Kind::nu_total, 3);
    REQUIRE(nu.values[0] == r(0));
    REQUIRE(nu.values[2] == r(1, 100)); // only "42" itself
    REQUIRE_THROWS_AS(integer_counts(mu), std::logic_error);
}

TEST_CASE("tail masses") {
    REQUIRE(tail_mass(PatternSpec(2, 0, 0), 1, 0) == r(2));
    REQUIRE(tail_mass(PatternSpec(10, 4, 2), 1, 1) == r(90));

    // Decreasing and positive as the cutoff grows.
    PatternSpec p(3, 2, 1);
    Rational prev = tail_mass(p, 0, 0);
    for (int nn = 1; nn <= 8; ++nn) {
        Rational cur = tail_mass(p, 0, nn);
        REQUIRE(cur > 0);
        REQUIRE(cur < prev);
        prev = cur;
    }
}

TEST_CASE("dominant tail ratios") {
    REQUIRE(dominant_tail_ratio(PatternSpec(2, 0, 0), 0) == Catch::Approx(0.80901699).epsilon(1e-6));
    REQUIRE(dominant_tail_ratio(PatternSpec(2, 0, 0), 1) == Catch::Approx(0.80901699).epsilon(1e-6));
    REQUIRE(dominant_tail_ratio(PatternSpec(2, 1, 0), 0) == Catch::Approx(0.5).epsilon(1e-9));
    REQUIRE(dominant_tail_ratio(PatternSpec(10, 4, 2), 0) == Catch::Approx(0.98990).epsilon(1e-4));
    REQUIRE(dominant_tail_ratio(PatternSpec(10, 9, 9), 0) == Catch::Approx(0.99083).epsilon(1e-4));

    std::mt19937 rng(11u);
    for (int i = 0; i < 30; ++i) {
        int b = 2 + static_cast<int>(rng() % 35);
        PatternSpec p(b, static_cast<int>(rng() % b), static_cast<int>(rng() % b));
        double rho = dominant_tail_ratio(p, static_cast<int>(rng() % 2));
        REQUIRE(rho > 0.0);
        REQUIRE(rho < 1.0);
    }
}

TEST_CASE("per-length masses sum to the value at one as the cutoff grows") {
    PatternSpec p(2, 1, 0);
    RationalGF w1 = mass_gf(p, MeasureKind::no_occurrence, 1);
    auto coeffs = w1.coefficients(40);
    Rational acc(0);
    for (const auto& c : coeffs) acc += c;
    Rational total = w1.value_at(Rational(1));
    REQUIRE(acc < total);
    REQUIRE(total - acc == tail_mass(p, 0, 40));
}
