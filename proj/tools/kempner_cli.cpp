// Command-line front end: k0/k1 evaluation, moment dumps, occurrence counts,
// brute-force sandwiches, whole-base statistics, and a self-check suite.
//
// Exit codes: 0 ok, 1 verification/computation failure, 2 usage error.

#include <kempner/kempner.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

using kempner::BigFloat;
using kempner::Int;
using kempner::PatternSpec;
using ordered_json = nlohmann::ordered_json;

namespace {

unsigned env_default_digits() {
    if (const char* s = std::getenv("KEMPNER_DIGITS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != nullptr && *end == '\0' && v >= 1 && v <= 1000000)
            return static_cast<unsigned>(v);
    }
    return 50;
}

// Fixed-point digit string, fractional part grouped in fives to line up with
// the published digit blocks.
std::string grouped(const std::string& fixed) {
    auto dot = fixed.find('.');
    if (dot == std::string::npos) return fixed;
    std::string out = fixed.substr(0, dot + 1);
    std::string frac = fixed.substr(dot + 1);
    for (std::size_t i = 0; i < frac.size(); i += 5) {
        if (i != 0) out += ' ';
        out += frac.substr(i, 5);
    }
    return out;
}

std::string fixed_str(const BigFloat& x, unsigned digits) {
    return x.str(digits, std::ios_base::fixed);
}

std::string bound_str(const BigFloat& x) { return x.str(3); }

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

ordered_json request_echo(const PatternSpec& p, const char* which, unsigned digits) {
    ordered_json j;
    j["base"] = p.base;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["which"] = which;
    j["digits"] = digits;
    return j;
}

void push_count(ordered_json& arr, const Int& c) {
    static const Int max64(std::numeric_limits<std::uint64_t>::max());
    if (c <= max64)
        arr.push_back(c.convert_to<std::uint64_t>());
    else
        arr.push_back(c.str());
}

int run_k(kempner::KIndex which, int base, const std::string& pattern, unsigned digits,
          bool json_out) {
    PatternSpec p = PatternSpec::parse(base, pattern);
    const char* name = which == kempner::KIndex::k0 ? "k0" : "k1";
    auto t0 = std::chrono::steady_clock::now();
    auto res = kempner::compute_k<BigFloat>(kempner::KRequest(p, which, digits));
    long long ms = elapsed_ms(t0);
    std::string val = fixed_str(res.value, digits);
    if (json_out) {
        ordered_json j;
        j["request"] = request_echo(p, name, digits);
        j["value"] = val;
        j["error_bound"] = bound_str(res.error_bound);
        j["M_used"] = res.moment_terms;
        j["precision_used"] = res.precision_digits;
        j["wall_time_ms"] = ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (which == kempner::KIndex::k0 ? "K0" : "K1") << "(" << base << "; \""
                  << p.str() << "\") = " << grouped(val) << "\n"
                  << "error bound <= " << bound_str(res.error_bound) << "\n"
                  << "M = " << res.moment_terms << ", working precision = "
                  << res.precision_digits << " digits\n";
    }
    return 0;
}

int run_moments(int base, const std::string& pattern, int max_m, unsigned digits,
                bool json_out) {
    PatternSpec p = PatternSpec::parse(base, pattern);
    auto t = kempner::compute_moments<BigFloat>(p, max_m, digits);
    if (json_out) {
        ordered_json j;
        j["request"] = request_echo(p, "moments", digits);
        j["request"]["max_m"] = max_m;
        ordered_json u = ordered_json::array();
        ordered_json v = ordered_json::array();
        for (const auto& x : t.u) u.push_back(x.str(digits));
        for (const auto& x : t.v) v.push_back(x.str(digits));
        j["u"] = u;
        j["v"] = v;
        std::cout << j.dump(2) << "\n";
    } else {
        for (int m = 0; m <= t.max_index; ++m)
            std::cout << "u[" << m << "] = " << t.u[m].str(digits) << "\n"
                      << "v[" << m << "] = " << t.v[m].str(digits) << "\n";
    }
    return 0;
}

int run_count(int base, const std::string& pattern, int occurrences, int max_len) {
    PatternSpec p = PatternSpec::parse(base, pattern);
    auto seq = kempner::count_per_length(p, occurrences, kempner::all_nonzero_digits(base),
                                         max_len);
    ordered_json arr = ordered_json::array();
    for (const Int& c : kempner::integer_counts(seq)) push_count(arr, c);
    std::cout << arr.dump() << "\n";
    return 0;
}

int run_bruteforce(int base, const std::string& pattern, int occurrences, int max_len,
                   unsigned digits, bool json_out) {
    PatternSpec p = PatternSpec::parse(base, pattern);
    auto t0 = std::chrono::steady_clock::now();
    auto sw = kempner::brute_partial<BigFloat>(p, occurrences, max_len, digits);
    long long ms = elapsed_ms(t0);
    if (json_out) {
        ordered_json j;
        j["request"] = request_echo(p, occurrences == 0 ? "k0" : "k1", digits);
        j["request"]["max_len"] = max_len;
        j["partial_sum"] = fixed_str(sw.partial_sum, digits);
        j["tail_mass"] = sw.tail.str();
        j["lower"] = fixed_str(sw.lower, digits);
        j["upper"] = fixed_str(sw.upper, digits);
        j["heuristic"] = fixed_str(sw.heuristic, digits);
        j["terms"] = sw.terms_counted;
        ordered_json counts = ordered_json::array();
        for (auto c : sw.per_length_counts) counts.push_back(c);
        j["per_length_counts"] = counts;
        j["wall_time_ms"] = ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "terms <= " << max_len << " digits: " << sw.terms_counted << " integers\n"
                  << "partial sum = " << grouped(fixed_str(sw.partial_sum, digits)) << "\n"
                  << "tail mass   = " << sw.tail.str() << "\n"
                  << "lower       = " << grouped(fixed_str(sw.lower, digits)) << "\n"
                  << "upper       = " << grouped(fixed_str(sw.upper, digits)) << "\n"
                  << "heuristic   = " << grouped(fixed_str(sw.heuristic, digits)) << "\n";
    }
    return 0;
}

int run_stats(int base, unsigned digits, bool force, bool json_out) {
    if (base > 16 && !force) {
        std::cerr << "stats: base " << base
                  << " exceeds the default guard (16); pass --force to run anyway\n";
        return 2;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto st = kempner::k1_statistics<BigFloat>(base, digits);
    long long ms = elapsed_ms(t0);
    if (json_out) {
        ordered_json j;
        j["request"] = ordered_json{{"base", base}, {"which", "stats"}, {"digits", digits}};
        j["reference"] = fixed_str(st.reference, digits);
        j["max_abs_deviation"] = fixed_str(st.max_abs_deviation, digits);
        j["max_abs_deviation_distinct"] = fixed_str(st.max_abs_deviation_distinct, digits);
        ordered_json below = ordered_json::array();
        for (const auto& p : st.below_reference) below.push_back(p.str());
        j["below_reference"] = below;
        ordered_json entries = ordered_json::array();
        for (const auto& e : st.entries) {
            ordered_json row;
            row["pattern"] = e.pattern.str();
            row["value"] = fixed_str(e.value, digits);
            row["deviation"] = fixed_str(e.deviation, digits);
            entries.push_back(row);
        }
        j["entries"] = entries;
        j["wall_time_ms"] = ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reference b^2 log b = " << fixed_str(st.reference, digits) << "\n";
        for (const auto& e : st.entries)
            std::cout << e.pattern.str() << "  " << fixed_str(e.value, digits) << "  "
                      << (e.deviation < 0 ? "-" : "+") << "\n";
        std::cout << "max |K1 - ref|            = " << fixed_str(st.max_abs_deviation, digits)
                  << "\n"
                  << "max |K1 - ref| (distinct) = "
                  << fixed_str(st.max_abs_deviation_distinct, digits) << "\n"
                  << "below reference:";
        for (const auto& p : st.below_reference) std::cout << " " << p.str();
        std::cout << "\n";
    }
    return 0;
}

// Self-check suite: moment tables, functional identities, generating-function
// identities, count parity against enumeration, sandwich containment, and the
// independent oracles.  Fails loudly and exits 1.
int run_verify() {
    int failures = 0;
    auto check = [&failures](bool ok, const std::string& label) {
        std::cout << (ok ? "ok:   " : "FAIL: ") << label << "\n";
        if (!ok) ++failures;
    };

    using kempner::MeasureKind;
    using kempner::TransformKind;

    // Moment tables (positivity and monotone decrease are enforced on build).
    struct Case {
        PatternSpec p;
        int M;
        unsigned digits;
    };
    std::vector<Case> cases = {{PatternSpec(10, 4, 2), 60, 60},
                               {PatternSpec(10, 9, 9), 60, 60},
                               {PatternSpec(2, 1, 0), 140, 45},
                               {PatternSpec(2, 0, 0), 140, 45}};
    std::vector<kempner::MomentTable<BigFloat>> tables;
    for (const auto& c : cases) {
        bool ok = true;
        try {
            tables.push_back(kempner::compute_moments<BigFloat>(c.p, c.M, c.digits));
        } catch (const kempner::precision_error&) {
            ok = false;
        }
        check(ok, "moment table " + std::to_string(c.p.base) + "/" + c.p.str());
    }
    if (failures) return 1;

    // Functional identities: residual within the truncation bound.
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto& t = tables[i];
        int terms = t.pattern.base == 2 ? 120 : 40;
        std::vector<std::uint64_t> ns =
            t.pattern.base == 2 ? std::vector<std::uint64_t>{1, 2, 3}
                                : std::vector<std::uint64_t>{1, 2, 3, 7};
        bool ok = true;
        for (auto n : ns)
            for (auto kind : {TransformKind::u_transform, TransformKind::v_transform}) {
                auto r = kempner::check_functional_identity(kind, n, t, terms);
                if (!(r.residual <= r.bound)) ok = false;
            }
        check(ok, "functional identities " + std::to_string(t.pattern.base) + "/" +
                      t.pattern.str());
    }

    // Generating-function identities per base: the one-occurrence function is
    // the square of the no-occurrence beta-restricted one, and the total splits
    // over the leading digit.
    {
        std::mt19937 rng(20260823u);
        bool ok = true;
        for (int b = 2; b <= 16; ++b) {
            PatternSpec p(b, static_cast<int>(rng() % b), static_cast<int>(rng() % b));
            auto z = kempner::mass_gf(p, MeasureKind::one_occurrence);
            auto wb = kempner::mass_gf(p, MeasureKind::no_occurrence, p.beta);
            if (!z.same_function(wb * wb)) ok = false;
            auto w = kempner::mass_gf(p, MeasureKind::no_occurrence);
            kempner::RationalGF sum{kempner::Polynomial({Int(1)}), kempner::Polynomial({Int(1)})};
            kempner::RationalGF zsum{kempner::Polynomial({Int(0)}), kempner::Polynomial({Int(1)})};
            for (int d = 0; d < b; ++d) {
                sum = sum + kempner::mass_gf(p, MeasureKind::no_occurrence, d);
                zsum = zsum + kempner::mass_gf(p, MeasureKind::one_occurrence, d);
            }
            if (!w.same_function(sum)) ok = false;
            if (!z.same_function(zsum)) ok = false;
        }
        check(ok, "generating-function identities, bases 2..16");
    }

    // Count parity: coefficients against direct enumeration.
    {
        bool ok = true;
        struct CC {
            PatternSpec p;
            int len;
        };
        for (const auto& cc : {CC{PatternSpec(2, 0, 0), 12}, CC{PatternSpec(3, 2, 1), 8},
                               CC{PatternSpec(10, 4, 2), 5}}) {
            for (int occ = 0; occ <= 1; ++occ) {
                auto seq = kempner::count_per_length(cc.p, occ,
                                                     kempner::all_nonzero_digits(cc.p.base),
                                                     cc.len);
                auto counts = kempner::integer_counts(seq);
                auto sw = kempner::brute_partial<BigFloat>(cc.p, occ, cc.len, 20);
                for (int l = 0; l <= cc.len; ++l)
                    if (counts[l] != Int(sw.per_length_counts[l])) ok = false;
            }
        }
        check(ok, "per-length counts match enumeration");
    }

    // Sandwich containment: the computed constants sit inside the rigorous
    // brute-force brackets.
    {
        struct SW {
            PatternSpec p;
            int occ;
            int len;
        };
        for (const auto& s : {SW{PatternSpec(2, 0, 0), 1, 20}, SW{PatternSpec(2, 1, 1), 1, 20},
                              SW{PatternSpec(10, 4, 2), 1, 6}, SW{PatternSpec(10, 0, 0), 0, 6}}) {
            auto sw = kempner::brute_partial<BigFloat>(s.p, s.occ, s.len, 25);
            auto r = s.occ == 0 ? kempner::k0<BigFloat>(s.p, 25) : kempner::k1<BigFloat>(s.p, 25);
            bool ok = sw.lower < r.value && r.value < sw.upper;
            check(ok, "sandwich " + std::to_string(s.p.base) + "/" + s.p.str() + " occurrences " +
                          std::to_string(s.occ));
        }
    }

    // Independent oracles.
    {
        kempner::ScopedPrecision<BigFloat> scope(60);
        auto r = kempner::k0<BigFloat>(PatternSpec(2, 1, 0), 40);
        BigFloat eb = kempner::erdos_borwein_clausen<BigFloat>(14);
        using std::abs;
        check(abs(r.value - eb) < BigFloat("1e-39"), "k0(2,\"10\") equals the Erdos-Borwein constant");

        // The single-level rearrangement is evaluated down to n = 1, where the
        // series converges slowly; agreement is asserted within its own bound.
        auto t = kempner::compute_moments<BigFloat>(PatternSpec(10, 4, 2), 40, 40);
        auto lvl1 = kempner::k1_level1<BigFloat>(t, 39);
        auto full = kempner::k1<BigFloat>(PatternSpec(10, 4, 2), 20);
        check(abs(lvl1.value - full.value) < lvl1.trunc_bound + BigFloat("1e-10"),
              "k1(10,\"42\") level-1 identity agrees within its truncation bound");

        BigFloat d10 = kempner::direct_series_b2<BigFloat>("10", 50);
        BigFloat d01 = kempner::direct_series_b2<BigFloat>("01", 50);
        auto k10 = kempner::k1<BigFloat>(PatternSpec(2, 1, 0), 20);
        auto k01 = kempner::k1<BigFloat>(PatternSpec(2, 0, 1), 20);
        check(abs(d10 - k10.value) < BigFloat("1e-9"), "k1(2,\"10\") matches the direct double series");
        check(abs(d01 - k01.value) < BigFloat("1e-9"), "k1(2,\"01\") matches the direct double series");
    }

    std::cout << (failures == 0 ? "verify: all checks passed\n"
                                : "verify: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic subsums over digit-pattern occurrence counts"};
    app.require_subcommand(1);

    int base = 10;
    std::string pattern;
    unsigned digits = env_default_digits();
    bool json_out = false;
    int occurrences = 0;
    int max_len = 1;
    int max_m = 20;
    bool force = false;

    auto add_common = [&](CLI::App* sub, bool need_pattern) {
        sub->add_option("--base", base, "Number base, 2..36")->capture_default_str();
        if (need_pattern)
            sub->add_option("--pattern", pattern, "Two digit characters in the base alphabet")
                ->required();
        sub->add_option("--digits", digits,
                        "Decimal digits (env KEMPNER_DIGITS overrides the default)")
            ->capture_default_str();
        sub->add_flag("--json", json_out, "Emit a JSON record");
    };

    CLI::App* sub_k0 = app.add_subcommand("k0", "Harmonic subsum over integers avoiding the pattern");
    add_common(sub_k0, true);
    CLI::App* sub_k1 =
        app.add_subcommand("k1", "Harmonic subsum over integers with exactly one occurrence");
    add_common(sub_k1, true);

    CLI::App* sub_moments = app.add_subcommand("moments", "Dump the moment sequences u_m, v_m");
    add_common(sub_moments, true);
    sub_moments->add_option("--max-m", max_m, "Largest moment index")->capture_default_str();

    CLI::App* sub_count = app.add_subcommand("count", "Integers per digit length with the given occurrence count");
    sub_count->add_option("--base", base, "Number base, 2..36")->capture_default_str();
    sub_count->add_option("--pattern", pattern, "Two digit characters")->required();
    sub_count->add_option("--occurrences", occurrences, "0 or 1")->required();
    sub_count->add_option("--max-len", max_len, "Largest digit length")->required();

    CLI::App* sub_brute = app.add_subcommand("bruteforce", "Enumerate and bracket the subsum");
    add_common(sub_brute, true);
    sub_brute->add_option("--occurrences", occurrences, "0 or 1")->required();
    sub_brute->add_option("--max-len", max_len, "Largest digit length enumerated")->required();

    CLI::App* sub_stats = app.add_subcommand("stats", "K1 across all patterns of a base");
    sub_stats->add_option("--base", base, "Number base, 2..16 by default")->capture_default_str();
    sub_stats->add_option("--digits", digits, "Decimal digits")->capture_default_str();
    sub_stats->add_flag("--json", json_out, "Emit a JSON record");
    sub_stats->add_flag("--force", force, "Lift the base guard");

    CLI::App* sub_verify = app.add_subcommand("verify", "Run the self-check suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub_k0->parsed()) return run_k(kempner::KIndex::k0, base, pattern, digits, json_out);
        if (sub_k1->parsed()) return run_k(kempner::KIndex::k1, base, pattern, digits, json_out);
        if (sub_moments->parsed()) return run_moments(base, pattern, max_m, digits, json_out);
        if (sub_count->parsed()) return run_count(base, pattern, occurrences, max_len);
        if (sub_brute->parsed())
            return run_bruteforce(base, pattern, occurrences, max_len, digits, json_out);
        if (sub_stats->parsed()) return run_stats(base, digits, force, json_out);
        if (sub_verify->parsed()) return run_verify();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
