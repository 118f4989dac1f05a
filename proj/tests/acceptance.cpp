// End-to-end acceptance checks at full scale: reference digit blocks, cross
// validation against independent oracles, statistics, sandwich enclosures,
// counting parity, and identity grids.  One PASS/FAIL line per criterion;
// exits nonzero if any fail.

#include <kempner/kempner.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using kempner::BigFloat;
using kempner::Int;
using kempner::PatternSpec;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& label) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << idx << "] " << label << std::endl;
    if (!ok) ++failures;
}

// Reference values are written with their 5-digit grouping; strip the spaces.
BigFloat ref(const std::string& grouped) {
    std::string s;
    for (char c : grouped)
        if (c != ' ') s += c;
    return BigFloat(s.c_str());
}

BigFloat tol(const char* s) { return BigFloat(s); }

const std::string block42 =
    "230.25882 13214 33508 40478 77627 59267 85873 95858 57341 "
    "57966 44057 49270 12717 79357 21101 87579 14837 04726 00875 18443";
const std::string block35 =
    "230.25886 98636 06045 19996 74060 14171 11117 72617 "
    "37929 58025 46555 85173 41436 96256 50505 60878 23149 34317 80138";
const std::string block00 =
    "230.25778 86509 07954 96301 56932 54264 57777 94887 "
    "61390 55856 69063 45994 61450 04414 55054 51076 76032 63035 62661";
const std::string block99 =
    "230.25941 83393 23881 16119 42823 97032 86550 26076 "
    "61541 81786 98122 41289 02370 29019 23693 24903 93542 26528 80528";

void criterion1() {
    kempner::ScopedPrecision<BigFloat> scope(130);
    auto r = kempner::k1<BigFloat>(PatternSpec(10, 4, 2), 100);
    bool ok = r.error_bound < kempner::pow10<BigFloat>(-100) &&
              abs(r.value - ref(block42)) < tol("2e-100");
    report(1, ok, "k1(10,\"42\") at 100 digits reproduces the 100-digit reference block");
}

void criterion2() {
    kempner::ScopedPrecision<BigFloat> scope(130);
    struct Case {
        const char* pattern;
        const std::string* block;
    };
    bool ok = true;
    for (Case c : {Case{"35", &block35}, Case{"00", &block00}, Case{"99", &block99}}) {
        auto r = kempner::k1<BigFloat>(PatternSpec::parse(10, c.pattern), 100);
        if (!(abs(r.value - ref(*c.block)) < tol("1e-95"))) ok = false;
    }
    report(2, ok, "k1(10,\"35\"/\"00\"/\"99\") reproduce the rounded 95-digit reference blocks");
}

void criterion3() {
    kempner::ScopedPrecision<BigFloat> scope(60);
    auto r00 = kempner::k1<BigFloat>(PatternSpec(2, 0, 0), 40);
    auto r11 = kempner::k1<BigFloat>(PatternSpec(2, 1, 1), 40);
    bool ok = abs(r00.value - ref("2.76332 12517 89026 63341 81008 76565 7")) < tol("1e-31") &&
              abs(r11.value - ref("2.93841 34076 50189 45151 74038 82901 7")) < tol("1e-31") &&
              BigFloat("2.76") < r00.value && r00.value < BigFloat("2.77") &&
              BigFloat("2.93") < r11.value && r11.value < BigFloat("2.94");
    report(3, ok, "k1(2,\"00\") and k1(2,\"11\") match the rounded 31-digit references");
}

void criterion4() {
    kempner::ScopedPrecision<BigFloat> scope(60);
    bool ok = true;
    for (const char* pat : {"10", "01"}) {
        auto t0 = std::chrono::steady_clock::now();
        BigFloat direct = kempner::direct_series_b2<BigFloat>(pat, 60);
        auto r = kempner::k1<BigFloat>(PatternSpec::parse(2, pat), 30);
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (!(abs(direct - r.value) < tol("1e-10")) || secs >= 60) ok = false;
    }
    report(4, ok, "k1(2,\"10\") and k1(2,\"01\") agree with the direct double series");
}

void criterion5() {
    kempner::ScopedPrecision<BigFloat> scope(80);
    auto r = kempner::k0<BigFloat>(PatternSpec(2, 1, 0), 60);
    BigFloat partial = kempner::erdos_borwein_partial<BigFloat>(220);
    BigFloat theta = kempner::erdos_borwein_clausen<BigFloat>(16);
    bool ok = abs(r.value - partial) < tol("1e-50") && abs(r.value - theta) < tol("1e-50");
    report(5, ok, "k0(2,\"10\") equals the classical series for sum 1/(2^n - 1)");
}

void criterion6() {
    auto st = kempner::k1_statistics<BigFloat>(10, 15);
    std::vector<std::string> below;
    for (const auto& p : st.below_reference) below.push_back(p.str());
    bool ok = st.max_abs_deviation > tol("0.02") && st.max_abs_deviation < tol("0.03") &&
              st.max_abs_deviation_distinct < tol("0.0012") &&
              below == std::vector<std::string>{"00", "11", "22", "33"};
    report(6, ok, "base-10 statistics: deviation sizes and the patterns below b^2 log b");
}

void criterion7() {
    bool ok = true;
    struct Case {
        PatternSpec p;
        int occ;
        int len;
    };
    for (Case c : {Case{PatternSpec(2, 0, 0), 1, 24}, Case{PatternSpec(2, 1, 1), 1, 24},
                   Case{PatternSpec(10, 4, 2), 0, 7}, Case{PatternSpec(10, 4, 2), 1, 7},
                   Case{PatternSpec(10, 0, 0), 0, 7}, Case{PatternSpec(10, 0, 0), 1, 7}}) {
        auto sw = kempner::brute_partial<BigFloat>(c.p, c.occ, c.len, 30);
        auto r = c.occ == 0 ? kempner::k0<BigFloat>(c.p, 30) : kempner::k1<BigFloat>(c.p, 30);
        if (!(sw.lower < r.value && r.value < sw.upper)) ok = false;
    }
    report(7, ok, "brute-force sandwiches enclose the computed subsums");
}

void criterion8() {
    std::mt19937 rng(424242u);
    bool ok = true;
    const int bases[3] = {2, 3, 10};
    for (int i = 0; i < 20; ++i) {
        int b = bases[i % 3];
        PatternSpec p(b, static_cast<int>(rng() % b), static_cast<int>(rng() % b));
        int len = b == 10 ? 6 : 14;
        for (int occ = 0; occ <= 1; ++occ) {
            auto counts =
                kempner::integer_counts(kempner::count_per_length(p, occ,
                                                                  kempner::all_nonzero_digits(b),
                                                                  len));
            auto sw = kempner::brute_partial<BigFloat>(p, occ, len, 20);
            for (int l = 0; l <= len; ++l)
                if (counts[static_cast<std::size_t>(l)] != Int(sw.per_length_counts[static_cast<std::size_t>(l)]))
                    ok = false;
        }
    }
    report(8, ok, "random patterns: per-length counts match direct enumeration");
}

void criterion9() {
    bool ok = true;
    std::vector<kempner::MomentTable<BigFloat>> tables;
    for (PatternSpec p : {PatternSpec(10, 4, 2), PatternSpec(10, 9, 9), PatternSpec(2, 0, 1),
                          PatternSpec(2, 0, 0)}) {
        try {
            tables.push_back(kempner::compute_moments<BigFloat>(p, 400, 200));
        } catch (const kempner::precision_error&) {
            ok = false;
        }
    }
    if (ok) {
        for (const auto& t : tables) {
            int top = t.pattern.base == 10 ? 100 : 4;
            for (int n = 1; n <= top; ++n)
                for (auto kind :
                     {kempner::TransformKind::u_transform, kempner::TransformKind::v_transform}) {
                    auto r = kempner::check_functional_identity<BigFloat>(
                        kind, static_cast<std::uint64_t>(n), t, 399);
                    if (!(r.residual <= r.bound)) ok = false;
                }
        }
    }
    std::mt19937 rng(99u);
    for (int i = 0; i < 50; ++i) {
        int b = 2 + static_cast<int>(rng() % 35);
        PatternSpec p(b, static_cast<int>(rng() % b), static_cast<int>(rng() % b));
        auto z = kempner::mass_gf(p, kempner::MeasureKind::one_occurrence);
        auto wb = kempner::mass_gf(p, kempner::MeasureKind::no_occurrence, p.beta);
        if (!z.same_function(wb * wb)) ok = false;
    }
    report(9, ok, "deep moment tables validate; identity grids and square law hold");
}

void criterion10() {
    std::mt19937 rng(90210u);
    const int bases[5] = {2, 3, 5, 7, 10};
    bool ok = true;
    for (int b : bases) {
        PatternSpec p(b, static_cast<int>(rng() % b), static_cast<int>(rng() % b));
        auto lo = kempner::k1<BigFloat>(p, 50);
        auto hi = kempner::k1<BigFloat>(p, 200);
        kempner::ScopedPrecision<BigFloat> scope(210);
        if (!(abs(lo.value - hi.value) < tol("1e-50"))) ok = false;
        if (!(lo.error_bound < kempner::pow10<BigFloat>(-50))) ok = false;
        if (!(hi.error_bound < kempner::pow10<BigFloat>(-200))) ok = false;
    }
    report(10, ok, "random patterns: 50-digit and 200-digit runs agree to 50 digits");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
