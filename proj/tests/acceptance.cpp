// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden_io.hpp"
#include "oracle.hpp"
#include "ribbonmod/errors.hpp"
#include "ribbonmod/moduli.hpp"
#include "ribbonmod/report.hpp"
#include "ribbonmod/stability.hpp"

using namespace ribbonmod;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        std::vector<std::string> fields;
        std::stringstream ls(line);
        for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(fields);
    }
    return rows;
}

// The two rank-3 tables written out as sets of half-integers: a value v
// stands for v/2, and d1 matches when 2*d1 == v.
std::string rank3_reference(Int delta, Int d0, Int d1) {
    const Int t = 2 * d1;
    bool stable = false;
    if (delta >= 3) {
        bool open = (d0 - 3 * delta + 3) < t && t < (d0 - 3);
        std::set<Int> points{d0 - 3 * delta + 2, d0 - delta - 2};
        stable = open || points.count(t);
    } else if (delta == 2) {
        std::set<Int> points{d0 - 2 * delta, d0 + 2 - 2 * delta};
        stable = points.count(t) > 0;
    }
    if (stable) return "Stable";

    std::map<Int, std::set<Int>> semistable{
        {0, {d0}},
        {1, {d0 - 2 - 1, d0 - 2 + 2}},
        {2, {d0 - 4 - 2, d0 - 4 + 1, d0 - 4 + 4}},
    };
    std::set<Int> ss = delta >= 3 ? std::set<Int>{d0 - 3 * delta, d0 - 3 * delta + 3, d0 - 3, d0}
                                  : (semistable.count(delta) ? semistable[delta] : std::set<Int>{});
    return ss.count(t) ? "StrictlySemistable" : "NoSemistable";
}

Outcome criterion1() {
    auto t0 = Clock::now();
    Outcome o;
    std::size_t checked = 0, mismatches = 0, overlap = 0, low_stable = 0;
    for (Int delta = 0; delta <= 6; ++delta) {
        auto r = golden::run({"rank3", "--delta", std::to_string(delta), "--d0-min", "-12", "--d0-max", "12",
                              "--d1-min", "-20", "--d1-max", "20", "--all", "--format", "csv"});
        if (r.code != 0) return {false, "rank3 exited with " + std::to_string(r.code) + ": " + r.err};
        auto rows = parse_csv(r.out);
        std::set<std::pair<Int, Int>> stable, semistable, seen;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            Int d0 = std::stoll(rows[i][0]), d1 = std::stoll(rows[i][1]);
            const auto& v = rows[i][2];
            seen.insert({d0, d1});
            if (v == "Stable") stable.insert({d0, d1});
            if (v == "StrictlySemistable") semistable.insert({d0, d1});
            ++checked;
            if (v != rank3_reference(delta, d0, d1)) ++mismatches;
        }
        if (seen.size() != 25 * 41) {
            o.pass = false;
            o.detail = "grid incomplete at delta=" + std::to_string(delta);
        }
        for (const auto& x : stable)
            if (semistable.count(x)) ++overlap;
        if (delta <= 1) low_stable += stable.size();
    }
    double secs = seconds_since(t0);
    o.pass = o.pass && mismatches == 0 && overlap == 0 && low_stable == 0 && secs < 1.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu cells, %zu mismatches, %zu overlaps, %zu stable at delta<=1, %.3fs", checked,
                  mismatches, overlap, low_stable, secs);
    if (o.detail.empty()) o.detail = buf;
    return o;
}

// Independent instances: integer ranks and slopes with denominator 6, signs
// checked by cross-multiplication.
std::uint64_t independent_slope_check(std::mt19937_64& rng, int n, SlopeVariant v) {
    std::uniform_int_distribution<Int> rank(1, 5), slope(-12, 12);
    std::uint64_t bad = 0;
    for (int i = 0; i < n;) {
        Int r2 = rank(rng), r3 = rank(rng), r5 = rank(rng), r6 = rank(rng);
        Int s2 = slope(rng), s3 = slope(rng), s5 = slope(rng), s6 = slope(rng); // slopes s/6
        auto d = LemmaSlopeData::from_summands(Fraction(r2), Fraction(r2 * s2, 6), Fraction(r3), Fraction(r3 * s3, 6),
                                               Fraction(r5), Fraction(r5 * s5, 6), Fraction(r6), Fraction(r6 * s6, 6));
        bool first = v == SlopeVariant::Mu2Ge3 ? s2 >= s3 : s5 >= s6;
        // R4/R1 >= R6/R3.
        bool hyp = first && s6 >= s3 && s5 >= s2 && (r5 + r6) * r3 >= r6 * (r2 + r3);
        if (hyp != lemma_slope_hypotheses(d, v)) ++bad;
        if (!hyp) continue;
        ++i;
        // 6 (mu4 - mu1) R1 R4 = (r5 s5 + r6 s6) R1 - (r2 s2 + r3 s3) R4.
        Int diff = (r5 * s5 + r6 * s6) * (r2 + r3) - (r2 * s2 + r3 * s3) * (r5 + r6);
        if (diff < 0) ++bad;
        if (lemma_slope_strict_certified(d, v) && diff <= 0) ++bad;
    }
    return bad;
}

std::uint64_t independent_weight_check(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<Int> step(1, 4), base(0, 4), q(-6, 6);
    std::uint64_t bad = 0;
    for (int i = 0; i < n;) {
        std::array<Int, 3> m, mp;
        m[2] = base(rng), m[1] = m[2] + step(rng), m[0] = m[1] + step(rng);
        mp[2] = base(rng), mp[1] = mp[2] + step(rng), mp[0] = mp[1] + step(rng);
        std::array<Int, 3> a{q(rng), q(rng), q(rng)}, b{q(rng), q(rng), q(rng)};
        bool hyp = a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2] && b[0] <= b[1] && b[2] <= b[1] &&
                   m[0] * mp[2] <= mp[0] * m[2] && m[1] * mp[0] <= mp[1] * m[0];
        LemmaWeightData d(m, mp, {Fraction(a[0]), Fraction(a[1]), Fraction(a[2])},
                          {Fraction(b[0]), Fraction(b[1]), Fraction(b[2])});
        auto c = lemma_weight_check(d);
        if (hyp != c.hypotheses) ++bad;
        if (!hyp) continue;
        ++i;
        Int w = m[2] * a[0] + (m[1] - m[2]) * a[1] + (m[0] - m[1]) * a[2];
        Int wp = mp[2] * b[0] + (mp[1] - mp[2]) * b[1] + (mp[0] - mp[1]) * b[2];
        Int diff = wp * m[0] - w * mp[0];
        if (diff < 0) ++bad;
        if (c.strict_certified && diff <= 0) ++bad;
    }
    return bad;
}

Outcome criterion2() {
    auto t0 = Clock::now();
    constexpr std::uint64_t n = 100'000;
    auto a = sample_slope_lemma(n, 7, SlopeVariant::Mu2Ge3);
    auto b = sample_slope_lemma(n, 7, SlopeVariant::Mu5Ge6);
    auto w = sample_weight_lemma(n, 7);
    std::mt19937_64 rng(2024);
    std::uint64_t indep = independent_slope_check(rng, 20'000, SlopeVariant::Mu2Ge3) +
                          independent_slope_check(rng, 20'000, SlopeVariant::Mu5Ge6) +
                          independent_weight_check(rng, 20'000);
    double secs = seconds_since(t0);
    auto bad = [](const LemmaSampleReport& r) { return r.violations + r.strict_violations + r.generator_rejects; };
    std::uint64_t total = bad(a) + bad(b) + bad(w);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "3 x %llu samples, %llu violations (strict cases %llu/%llu/%llu), %llu independent "
                  "discrepancies, %.2fs",
                  static_cast<unsigned long long>(n), static_cast<unsigned long long>(total),
                  static_cast<unsigned long long>(a.strict_cases), static_cast<unsigned long long>(b.strict_cases),
                  static_cast<unsigned long long>(w.strict_cases), static_cast<unsigned long long>(indep), secs);
    return {total == 0 && indep == 0 && secs < 10.0, buf};
}

Outcome criterion3() {
    std::size_t checks = 0, failures = 0, guarded = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++failures;
    };
    for (Int g = 0; g <= 20; ++g)
        for (Int delta = -5; delta <= 40; ++delta) {
            RibbonParams p(g, delta);
            for (Int a = 1; a <= 200; ++a) {
                Int qa = oracle::qlf_dim(a + 1, a, g, delta);
                expect(dim_rigid_locus(a, p) == qa);
                expect(dim_qlf_locus({a + 1, a, 0, 0}, p) == qa);
                Int qr = oracle::qlf_dim(a, a, g, delta);
                expect(dim_qlf_locus({a, a, 0, 0}, p) == qr);
                expect(formula::gvb(a, p) == qr);
                if (delta > 0) {
                    expect(dim_gvb_locus(a, p) == qr);
                } else {
                    bool threw = false;
                    try {
                        (void)dim_gvb_locus(a, p);
                    } catch (const DomainError&) {
                        threw = true;
                    }
                    expect(threw);
                    ++guarded;
                }
            }
        }
    for (Int g = 0; g <= 20; ++g)
        for (Int delta = 2; delta <= 40; ++delta)
            for (Int b = 1; b < delta; ++b)
                for (Int n = 1; n <= 20; ++n) {
                    RibbonParams p(g, delta);
                    Int expected = dim_qlf_locus({n + 1, 1, 0, 0}, blowup(p, b));
                    expect(expected == oracle::qlf_dim(n + 1, 1, g, delta - b));
                    expect(formula::L_locus(n, b, p) == expected);
                    if (g >= 2) {
                        expect(dim_L_locus(n, b, p) == expected);
                    } else {
                        bool threw = false;
                        try {
                            (void)dim_L_locus(n, b, p);
                        } catch (const DomainError&) {
                            threw = true;
                        }
                        expect(threw);
                        ++guarded;
                    }
                }
    return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures (" +
                               std::to_string(guarded) + " outside the checked domain use the raw formula)"};
}

Outcome criterion4() {
    std::size_t pairs = 0, strict = 0, equal = 0, reversed = 0;
    std::string first_equal;
    for (Int g = 2; g <= 10; ++g)
        for (Int delta = 1; delta <= 2 * g - 2; ++delta)
            for (Int R = 1; R <= 20; ++R)
                for (Int s1 = 0; 2 * s1 < R; ++s1)
                    for (Int r1 = 0; r1 < s1; ++r1) {
                        // r0 + r1 = s0 + s1 with s1 < s0 < r0.
                        RibbonParams p(g, delta);
                        Int big = dim_qlf_locus({R - r1, r1, 0, 0}, p);
                        Int small = dim_qlf_locus({R - s1, s1, 0, 0}, p);
                        ++pairs;
                        if (big > small) {
                            ++strict;
                        } else if (big == small) {
                            if (first_equal.empty())
                                first_equal = "gbar=" + std::to_string(g) + " delta=" + std::to_string(delta) +
                                              " (" + std::to_string(R - r1) + "," + std::to_string(r1) + ") vs (" +
                                              std::to_string(R - s1) + "," + std::to_string(s1) + ") both " +
                                              std::to_string(big);
                            ++equal;
                        } else {
                            ++reversed;
                        }
                    }
    std::string detail = std::to_string(pairs) + " pairs: " + std::to_string(strict) + " strict, " +
                         std::to_string(equal) + " equal, " + std::to_string(reversed) + " reversed";
    if (equal) detail += "; equality exactly at delta = 2gbar-2, e.g. " + first_equal;
    return {equal == 0 && reversed == 0, detail};
}

Outcome criterion5() {
    auto t0 = Clock::now();
    std::size_t queries = 0, rows = 0, discrepancies = 0;
    for (Int g = 2; g <= 3; ++g)
        for (Int delta = 1; delta <= 6; ++delta)
            for (Int R = 1; R <= 6; ++R)
                for (Int D = -6; D <= 6; ++D) {
                    RibbonParams p(g, delta);
                    auto cs = enumerate_components(p, R, D);
                    ++queries;
                    rows += cs.size();
                    std::vector<oracle::Row> got;
                    std::set<std::tuple<int, Int, Int, Int, Int, Int>> seen;
                    for (const auto& c : cs) {
                        got.push_back({std::string(short_name(c.kind)), c.type.r0, c.type.r1, c.type.d0, c.type.d1,
                                       c.index, c.dimension});
                        if (!(invariants_of(c.type) == Invariants(R, D))) ++discrepancies;
                        if (!seen.insert({static_cast<int>(c.kind), c.type.r0, c.type.r1, c.type.d0, c.type.d1,
                                          c.index.value_or(-1)})
                                 .second)
                            ++discrepancies;
                        bool ok = false;
                        switch (c.kind) {
                        case ComponentKind::QlfCompleteType:
                            ok = c.type.r1 == 0 ? c.existence.stable_exists
                                                : ss_qlf_exists(c.type, p).stable_exists;
                            break;
                        case ComponentKind::GeneralizedVectorBundle:
                            ok = gvb_ss_exists(c.type.r0, *c.index, p).stable_exists;
                            break;
                        case ComponentKind::RigidType:
                            ok = rigid_locus_nonempty(c.type.r1, c.type.d0, c.type.d1, p);
                            break;
                        case ComponentKind::VectorBundleOnReduced: ok = false; break;
                        }
                        if (!ok) ++discrepancies;
                    }
                    std::sort(got.begin(), got.end());
                    if (got != oracle::components(g, delta, R, D)) ++discrepancies;
                }
    double secs = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu queries, %zu components, %zu discrepancies, %.2fs", queries, rows,
                  discrepancies, secs);
    return {discrepancies == 0 && secs < 30.0, buf};
}

Outcome criterion6() {
    std::size_t checks = 0, mismatches = 0;
    for (Int g = 2; g <= 3; ++g)
        for (Int delta = 0; delta <= 6; ++delta)
            for (Int a = 1; a <= 10; ++a)
                for (Int d0 = -30; d0 <= 30; ++d0)
                    for (Int d1 = -30; d1 <= 30; ++d1) {
                        RibbonParams p(g, delta);
                        ++checks;
                        if (rigid_locus_nonempty(a, d0, d1, p) != ss_qlf_exists({a + 1, a, d0, d1}, p).stable_exists)
                            ++mismatches;
                    }
    return {mismatches == 0, std::to_string(checks) + " cases, " + std::to_string(mismatches) + " discrepancies"};
}

// Golden files must reproduce byte for byte, and their content must agree
// with the brute-force enumerator and the rank-3 reference tables.
Outcome criterion7() {
    std::size_t files = 0, diffs = 0, content = 0;
    for (const auto& c : golden::cases())
        for (const auto& [fmt, ext] : golden::formats()) {
            auto args = c.args;
            args.insert(args.end(), {"--format", fmt});
            auto r = golden::run(args);
            ++files;
            if (r.code != 0 || r.out != golden::read(c.stem + "." + ext) || golden::run(args).out != r.out) ++diffs;
        }

    const struct {
        const char* stem;
        Int delta, R;
    } comps[] = {{"components_g2_d2_r3_D0", 2, 3}, {"components_g2_d4_r3_D0", 4, 3}, {"components_g2_d1_r2_D0", 1, 2}};
    for (const auto& q : comps) {
        auto j = Json::parse(golden::read(std::string(q.stem) + ".json"));
        if (j["status"] != "conjectural") ++content;
        std::vector<oracle::Row> rows;
        for (const auto& c : j["components"])
            rows.push_back({c["kind"].get<std::string>(), c["r0"].get<Int>(), c["r1"].get<Int>(), c["d0"].get<Int>(),
                            c["d1"].get<Int>(),
                            c["index"].is_null() ? std::nullopt : std::optional<Int>(c["index"].get<Int>()),
                            c["dimension"].get<Int>()});
        std::sort(rows.begin(), rows.end());
        if (rows != oracle::components(2, q.delta, q.R, 0)) ++content;
    }
    auto rank3 = parse_csv(golden::read("rank3_d3_d0_0.csv"));
    std::size_t listed = 0;
    for (std::size_t i = 1; i < rank3.size(); ++i) {
        ++listed;
        if (rank3[i][2] != rank3_reference(3, std::stoll(rank3[i][0]), std::stoll(rank3[i][1]))) ++content;
    }
    // The table lists d1 = -3, -2 and 0 and nothing else.
    if (listed != 3) ++content;

    return {diffs == 0 && content == 0, std::to_string(files) + " golden files, " + std::to_string(diffs) +
                                            " byte differences, " + std::to_string(content) + " content mismatches"};
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expected_fail;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            expected_fail.insert(std::stoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: acceptance [--expect-fail N]...\n");
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"rank-3 rational tables", criterion1},
        {"lemma samplers", criterion2},
        {"dimension formula identities", criterion3},
        {"dominance of larger reduced rank (strict)", criterion4},
        {"enumerator soundness vs brute force", criterion5},
        {"rigid locus vs strict quasi locally free range", criterion6},
        {"CLI golden outputs", criterion7},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        int id = static_cast<int>(i) + 1;
        if (!o.pass) failed.insert(id);
        std::printf("criterion %d: %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (!expected_fail.empty()) {
        std::printf("expected failures:");
        for (int id : expected_fail) std::printf(" %d", id);
        std::printf(" (%s)\n", failed == expected_fail ? "as expected" : "MISMATCH");
    }
    return failed == expected_fail ? 0 : 1;
}
