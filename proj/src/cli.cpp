#include "ribbonmod/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ribbonmod/errors.hpp"
#include "ribbonmod/report.hpp"

namespace ribbonmod::cli {

namespace {

constexpr std::uint64_t kMaxLemmaSamples = 10'000'000;
constexpr Int kMaxRank3Rows = 1'000'000;
constexpr std::uint64_t kMaxStrataRows = 100'000;
constexpr std::uint64_t kDefaultSeed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RibbonOpts {
    std::optional<Int> gbar;
    std::optional<Int> delta;
    std::optional<Int> deg_n;

    void attach(CLI::App* app, bool with_gbar = true) {
        if (with_gbar) app->add_option("--gbar", gbar, "genus of the reduced curve");
        auto* d = app->add_option("--delta", delta, "delta = -deg(N)");
        auto* n = app->add_option("--deg-n", deg_n, "degree of the nilradical N (sets delta = -deg-n)");
        d->excludes(n);
    }

    Int resolved_delta() const {
        if (delta) return *delta;
        if (deg_n) return checked::neg(*deg_n);
        throw UsageError("one of --delta or --deg-n is required");
    }

    RibbonParams params(std::optional<Int> default_gbar = std::nullopt) const {
        auto g = gbar ? gbar : default_gbar;
        if (!g) throw UsageError("--gbar is required");
        return {*g, resolved_delta()};
    }

    void echo(Json& q, const RibbonParams& p) const {
        q["gbar"] = p.gbar;
        q["delta"] = p.delta;
    }
};

struct FormatOpt {
    std::string name = "text";

    void attach(CLI::App* app) {
        app->add_option("--format", name, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    }

    ReportFormat value() const {
        if (name == "json") return ReportFormat::Json;
        if (name == "csv") return ReportFormat::Csv;
        return ReportFormat::Text;
    }
};

Int need(const std::optional<Int>& v, const char* flag) {
    if (!v) throw UsageError(std::string(flag) + " is required");
    return *v;
}

Cell verdict_cell(bool b) { return Cell{b}; }

std::vector<Int> parse_parts(const std::string& text) {
    std::vector<Int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw UsageError("bad partition part '" + item + "'");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad partition part '" + item + "'");
        }
    }
    return parts;
}

std::string join_parts(const PartitionSpec& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "+" : "") + std::to_string(p.parts()[i]);
    return s;
}

// --- invariants -------------------------------------------------------------

struct InvariantsCmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> r0, r1, d0, d1, gvb_rank, degree, index;
    Int polarization = 1;
    Int torsion = 0;

    void attach(CLI::App* app) {
        ribbon.attach(app);
        format.attach(app);
        app->add_option("--r0", r0);
        app->add_option("--r1", r1);
        app->add_option("--d0", d0);
        app->add_option("--d1", d1);
        app->add_option("--gvb-rank", gvb_rank, "r for a generalized vector bundle of generalized rank 2r");
        app->add_option("--degree", degree, "generalized degree (with --gvb-rank)");
        app->add_option("--index", index, "index (with --gvb-rank)");
        app->add_option("--polarization", polarization, "degree of the polarization on the reduced curve");
        app->add_option("--torsion", torsion, "h^0 of the torsion subsheaf, for the dual");
    }

    Report run() const {
        auto p = ribbon.params();
        Json q;
        ribbon.echo(q, p);
        CompleteType ct;
        if (gvb_rank) {
            q["gvb_rank"] = *gvb_rank;
            q["degree"] = need(degree, "--degree");
            q["index"] = need(index, "--index");
            ct = gvb_complete_type(*gvb_rank, *degree, *index, p);
        } else {
            ct = CompleteType(need(r0, "--r0"), need(r1, "--r1"), need(d0, "--d0"), need(d1, "--d1"));
            q["r0"] = ct.r0;
            q["r1"] = ct.r1;
            q["d0"] = ct.d0;
            q["d1"] = ct.d1;
        }
        q["polarization"] = polarization;
        q["torsion"] = torsion;

        auto inv = invariants_of(ct);
        auto hp = hilbert_polynomial(inv, p, polarization);
        auto cl = classical_invariants(inv, p);
        auto dual = dual_invariants(inv, p, torsion);
        auto lt = rank_pair_to_local_type(ct.r0, ct.r1);

        Report r;
        r.command = "invariants";
        r.query = std::move(q);
        r.columns = {"quantity", "value"};
        auto add = [&](const char* name, Cell v) { r.rows.push_back({std::string(name), std::move(v)}); };
        add("r0", ct.r0);
        add("r1", ct.r1);
        add("d0", ct.d0);
        add("d1", ct.d1);
        add("R", inv.R);
        add("D", inv.D);
        add("slope", slope(inv).to_string());
        add("euler_characteristic", euler_characteristic(inv, p));
        add("hilbert_constant", hp.constant);
        add("hilbert_linear", hp.linear);
        add("classical_rank", cl.rank.to_string());
        add("classical_degree", cl.degree.to_string());
        add("dual_R", dual.R);
        add("dual_D", dual.D);
        add("local_type_a", lt.a);
        add("local_type_b", lt.b);
        add("ribbon_genus", ribbon_genus(p));
        add("vb_parity_ok", vb_parity_ok(inv, p));
        return r;
    }
};

// --- exists -----------------------------------------------------------------

struct ExistsCmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> r0, r1, d0, d1, a, r, index, n, rank, degree;
    bool cross_check = false;
    CLI::App* qlf = nullptr;
    CLI::App* rigid = nullptr;
    CLI::App* gvb = nullptr;
    CLI::App* L = nullptr;
    CLI::App* vb = nullptr;
    CLI::App* deform = nullptr;

    void attach(CLI::App* app) {
        app->require_subcommand(1);
        auto common = [&](CLI::App* sub) {
            ribbon.attach(sub);
            format.attach(sub);
        };
        qlf = app->add_subcommand("qlf", "quasi locally free sheaves of a complete type");
        common(qlf);
        qlf->add_option("--r0", r0);
        qlf->add_option("--r1", r1);
        qlf->add_option("--d0", d0);
        qlf->add_option("--d1", d1);

        rigid = app->add_subcommand("rigid", "rigid-type locus N(a, d0, d1)");
        common(rigid);
        rigid->add_option("--a", a);
        rigid->add_option("--d0", d0);
        rigid->add_option("--d1", d1);

        gvb = app->add_subcommand("gvb", "generalized vector bundles of rank 2r and index b");
        common(gvb);
        gvb->add_option("--r", r);
        gvb->add_option("--index", index);

        L = app->add_subcommand("L", "sheaves of type (n,1) with index b");
        common(L);
        L->add_option("--n", n);
        L->add_option("--index", index);
        L->add_option("--d0", d0);
        L->add_option("--d1", d1);
        L->add_flag("--cross-check", cross_check, "compare with the blow-up transported ranges");

        vb = app->add_subcommand("vb", "stable vector bundles on the ribbon");
        common(vb);
        vb->add_option("--rank", rank, "rank r (generalized rank 2r)");
        vb->add_option("--degree", degree, "generalized degree");

        deform = app->add_subcommand("deform", "deformation of bundles on the reduced curve to the ribbon");
        common(deform);
        deform->add_option("--rank", rank);
        deform->add_option("--degree", degree, "degree on the reduced curve");
    }

    Report run() const {
        auto p = ribbon.params();
        Report rep;
        rep.command = "exists";
        Json q;
        ribbon.echo(q, p);
        auto verdict_table = [&](const ExistenceVerdict& v) {
            rep.columns = {"semistable", "stable"};
            rep.rows.push_back({verdict_cell(v.semistable_exists), verdict_cell(v.stable_exists)});
        };
        if (qlf->parsed()) {
            q["kind"] = "qlf";
            CompleteType ct(need(r0, "--r0"), need(r1, "--r1"), need(d0, "--d0"), need(d1, "--d1"));
            q["r0"] = ct.r0;
            q["r1"] = ct.r1;
            q["d0"] = ct.d0;
            q["d1"] = ct.d1;
            verdict_table(ss_qlf_exists(ct, p));
        } else if (rigid->parsed()) {
            q["kind"] = "rigid";
            q["a"] = need(a, "--a");
            q["d0"] = need(d0, "--d0");
            q["d1"] = need(d1, "--d1");
            rep.columns = {"nonempty"};
            rep.rows.push_back({verdict_cell(rigid_locus_nonempty(*a, *d0, *d1, p))});
        } else if (gvb->parsed()) {
            q["kind"] = "gvb";
            q["r"] = need(r, "--r");
            q["index"] = need(index, "--index");
            verdict_table(gvb_ss_exists(*r, *index, p));
        } else if (L->parsed()) {
            q["kind"] = "L";
            q["n"] = need(n, "--n");
            q["index"] = need(index, "--index");
            q["d0"] = need(d0, "--d0");
            q["d1"] = need(d1, "--d1");
            if (cross_check) {
                auto cc = L_locus_cross_check(*n, *index, *d0, *d1, p);
                rep.columns = {"nonempty", "blowup_same_degrees", "blowup_shifted_degrees", "agree"};
                rep.rows.push_back({cc.verbatim, cc.blowup_same_degrees, cc.blowup_shifted_degrees, cc.agree()});
                if (!cc.agree()) rep.notes.push_back("note: the transported ranges disagree with the stated one");
            } else {
                rep.columns = {"nonempty"};
                rep.rows.push_back({verdict_cell(L_locus_nonempty(*n, *index, *d0, *d1, p))});
            }
        } else if (vb->parsed()) {
            q["kind"] = "vb";
            q["rank"] = need(rank, "--rank");
            q["degree"] = need(degree, "--degree");
            auto v = dim_vb_locus(*rank, *degree, p);
            rep.columns = {"nonempty", "dimension"};
            rep.rows.push_back({v.nonempty, v.dimension});
        } else {
            q["kind"] = "deform";
            q["rank"] = need(rank, "--rank");
            q["degree"] = need(degree, "--degree");
            rep.columns = {"verdict"};
            rep.rows.push_back({std::string(to_string(vb_deforms_to_ribbon(*rank, *degree, p)))});
        }
        rep.query = std::move(q);
        return rep;
    }
};

// --- dim --------------------------------------------------------------------

struct DimCmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> r0, r1, a, r, rank, degree, n, index;
    std::string parts;
    CLI::App *qlf = nullptr, *rigid = nullptr, *vb = nullptr, *gvb = nullptr, *L = nullptr, *stratum = nullptr;

    void attach(CLI::App* app) {
        app->require_subcommand(1);
        auto common = [&](CLI::App* sub) {
            ribbon.attach(sub);
            format.attach(sub);
        };
        qlf = app->add_subcommand("qlf", "quasi locally free sheaves with rank pair (r0, r1)");
        common(qlf);
        qlf->add_option("--r0", r0);
        qlf->add_option("--r1", r1);
        rigid = app->add_subcommand("rigid", "rigid type of parameter a");
        common(rigid);
        rigid->add_option("--a", a);
        vb = app->add_subcommand("vb", "stable vector bundles on the ribbon");
        common(vb);
        vb->add_option("--rank", rank);
        vb->add_option("--degree", degree);
        gvb = app->add_subcommand("gvb", "generalized vector bundles of rank 2r, fixed index");
        common(gvb);
        gvb->add_option("--r", r);
        L = app->add_subcommand("L", "sheaves of type (n,1) with index b");
        common(L);
        L->add_option("--n", n);
        L->add_option("--index", index);
        stratum = app->add_subcommand("stratum", "type (n,1) with a fixed local index sequence");
        common(stratum);
        stratum->add_option("--n", n);
        stratum->add_option("--parts", parts, "comma-separated local indices, e.g. 2,1");
    }

    Report run() const {
        auto p = ribbon.params();
        Json q;
        ribbon.echo(q, p);
        Report rep;
        rep.command = "dim";
        rep.columns = {"dimension"};
        Int dim = 0;
        if (qlf->parsed()) {
            q["kind"] = "qlf";
            q["r0"] = need(r0, "--r0");
            q["r1"] = need(r1, "--r1");
            dim = dim_qlf_locus(CompleteType(*r0, *r1, 0, 0), p);
        } else if (rigid->parsed()) {
            q["kind"] = "rigid";
            q["a"] = need(a, "--a");
            dim = dim_rigid_locus(*a, p);
        } else if (vb->parsed()) {
            q["kind"] = "vb";
            q["rank"] = need(rank, "--rank");
            q["degree"] = need(degree, "--degree");
            auto v = dim_vb_locus(*rank, *degree, p);
            rep.columns = {"nonempty", "dimension"};
            rep.rows.push_back({v.nonempty, v.dimension});
            rep.query = std::move(q);
            return rep;
        } else if (gvb->parsed()) {
            q["kind"] = "gvb";
            q["r"] = need(r, "--r");
            dim = dim_gvb_locus(*r, p);
        } else if (L->parsed()) {
            q["kind"] = "L";
            q["n"] = need(n, "--n");
            q["index"] = need(index, "--index");
            dim = dim_L_locus(*n, *index, p);
        } else {
            q["kind"] = "stratum";
            q["n"] = need(n, "--n");
            if (parts.empty()) throw UsageError("--parts is required");
            PartitionSpec spec(parse_parts(parts));
            q["parts"] = spec.parts();
            dim = dim_L_stratum(*n, spec, p);
        }
        rep.rows.push_back({dim});
        rep.query = std::move(q);
        return rep;
    }
};

// --- components -------------------------------------------------------------

struct ComponentsCmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> rank, degree;
    bool index_zero = false;
    bool possible_exception = false;
    unsigned jobs = 1;
    std::uint64_t max_components = EnumerateOptions{}.max_components;

    void attach(CLI::App* app) {
        ribbon.attach(app);
        format.attach(app);
        app->add_option("--rank", rank, "generalized rank R");
        app->add_option("--degree", degree, "generalized degree D");
        app->add_flag("--include-index-zero", index_zero, "also list index-0 generalized vector bundles");
        app->add_flag("--include-possible-exception", possible_exception,
                      "also list rank-3 bundles on the reduced curve in the unresolved deformation case");
        app->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
        app->add_option("--max-components", max_components, "refuse queries producing more rows");
    }

    Report run() const {
        auto p = ribbon.params();
        Json q;
        ribbon.echo(q, p);
        q["rank"] = need(rank, "--rank");
        q["degree"] = need(degree, "--degree");
        if (index_zero) q["include_index_zero"] = true;
        if (possible_exception) q["include_possible_exception"] = true;
        EnumerateOptions opt;
        opt.include_index_zero = index_zero;
        opt.include_possible_exception = possible_exception;
        opt.jobs = jobs;
        opt.max_components = max_components;
        return components_report(std::move(q), enumerate_components(p, *rank, *degree, opt));
    }
};

// --- rank3 ------------------------------------------------------------------

struct Rank3Cmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> d0, d0_min, d0_max, d1_min, d1_max;
    bool all = false;

    void attach(CLI::App* app) {
        ribbon.attach(app, false);
        format.attach(app);
        auto* single = app->add_option("--d0", d0, "single d0 value");
        app->add_option("--d0-min", d0_min)->excludes(single);
        app->add_option("--d0-max", d0_max)->excludes(single);
        app->add_option("--d1-min", d1_min, "default: just below every table entry");
        app->add_option("--d1-max", d1_max);
        app->add_flag("--all", all, "also list NoSemistable rows");
    }

    Report run() const {
        RibbonParams p(0, ribbon.resolved_delta());
        Int lo = d0 ? *d0 : need(d0_min, "--d0 or --d0-min");
        Int hi = d0 ? *d0 : need(d0_max, "--d0-max");
        if (hi < lo) throw UsageError("--d0-max is below --d0-min");
        Json q;
        q["gbar"] = 0;
        q["delta"] = p.delta;
        q["d0_min"] = lo;
        q["d0_max"] = hi;
        if (d1_min) q["d1_min"] = *d1_min;
        if (d1_max) q["d1_max"] = *d1_max;
        if (all) q["all"] = true;

        Report rep;
        rep.command = "rank3";
        rep.query = std::move(q);
        rep.anchor = "generalized rank 3 over a rational reduced curve, complete type ((2,1),(d0,d1))";
        rep.columns = {"d0", "d1", "verdict"};
        Int emitted = 0;
        for (Int x = lo;; ++x) {
            // Every table entry has (d0 - 3 delta - 3)/2 <= d1 <= d0/2 + 1.
            Int delta_floor = std::max<Int>(p.delta, 0);
            Int a = d1_min ? *d1_min : floor_div(checked::sub(checked::sub(x, checked::mul(3, delta_floor)), 4), 2);
            Int b = d1_max ? *d1_max : checked::add(ceil_div(x, 2), 2);
            for (Int y = a; y <= b; ++y) {
                auto v = rank3_rational_classify(x, y, p);
                if (v != Rank3Verdict::NoSemistable || all) {
                    if (++emitted > kMaxRank3Rows) throw DomainError("rank3 table too large");
                    rep.rows.push_back({x, y, std::string(to_string(v))});
                }
                if (y == b) break;
            }
            if (x == hi) break;
        }
        return rep;
    }
};

// --- blowup / strata --------------------------------------------------------

struct BlowupCmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> index;

    void attach(CLI::App* app) {
        ribbon.attach(app);
        format.attach(app);
        app->add_option("--index", index, "length b of the blown-up divisor");
    }

    Report run() const {
        auto p = ribbon.params();
        Json q;
        ribbon.echo(q, p);
        q["index"] = need(index, "--index");
        auto blown = blowup(p, *index);
        Report rep;
        rep.command = "blowup";
        rep.query = std::move(q);
        rep.columns = {"ribbon", "gbar", "delta", "deg_n", "genus"};
        rep.rows.push_back({std::string("original"), p.gbar, p.delta, p.deg_n(), p.genus()});
        rep.rows.push_back({std::string("blown_up"), blown.gbar, blown.delta, blown.deg_n(), blown.genus()});
        return rep;
    }
};

struct StrataCmd {
    RibbonOpts ribbon;
    FormatOpt format;
    std::optional<Int> n, index;

    void attach(CLI::App* app) {
        ribbon.attach(app);
        format.attach(app);
        app->add_option("--n", n, "type (n,1)");
        app->add_option("--index", index, "total index b");
    }

    Report run() const {
        auto p = ribbon.params();
        Json q;
        ribbon.echo(q, p);
        q["n"] = need(n, "--n");
        q["index"] = need(index, "--index");
        Int locus = dim_L_locus(*n, *index, p);
        if (*index > kMaxPartitionArg || partition_count(*index) > kMaxStrataRows)
            throw DomainError("index " + std::to_string(*index) + " has too many partitions to list (max " +
                              std::to_string(kMaxStrataRows) + " rows)");
        Report rep;
        rep.command = "strata";
        rep.query = std::move(q);
        rep.columns = {"partition", "length", "dimension"};
        for (const auto& part : partitions(*index))
            rep.rows.push_back({join_parts(part), part.length(), dim_L_stratum(*n, part, p)});
        rep.notes.push_back("locus dimension: " + std::to_string(locus));
        if (!(*index < p.delta)) rep.notes.push_back("note: index >= delta, the locus is empty");
        return rep;
    }
};

// --- verify-lemmas ----------------------------------------------------------

struct VerifyCmd {
    FormatOpt format;
    std::uint64_t samples = 100'000;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* app) {
        format.attach(app);
        app->add_option("--samples", samples, "instances per lemma and variant")
            ->check(CLI::Range(std::uint64_t{1}, kMaxLemmaSamples));
        app->add_option("--seed", seed, "sampler seed (default: $RIBBONMOD_SEED, else 1)");
    }

    std::uint64_t resolved_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("RIBBONMOD_SEED")) {
            try {
                std::size_t used = 0;
                auto v = std::stoull(env, &used);
                if (used == std::string(env).size()) return v;
            } catch (const std::logic_error&) {
            }
            throw UsageError(std::string("RIBBONMOD_SEED is not an unsigned integer: ") + env);
        }
        return kDefaultSeed;
    }

    std::pair<Report, bool> run() const {
        std::uint64_t s = resolved_seed();
        Report rep;
        rep.command = "verify-lemmas";
        rep.query["samples"] = samples;
        rep.query["seed"] = s;
        rep.columns = {"lemma", "variant", "samples", "violations", "strict_violations", "strict_cases"};
        std::vector<std::string> examples;
        std::uint64_t failures = 0;
        auto add = [&](const char* lemma, std::string variant, const LemmaSampleReport& r) {
            rep.rows.push_back({std::string(lemma), std::move(variant), static_cast<Int>(r.samples),
                                static_cast<Int>(r.violations), static_cast<Int>(r.strict_violations),
                                static_cast<Int>(r.strict_cases)});
            failures += r.violations + r.strict_violations + r.generator_rejects;
            for (const auto& c : r.counterexamples) examples.push_back(c);
        };
        add("slope", "Mu2Ge3", sample_slope_lemma(samples, s, SlopeVariant::Mu2Ge3));
        add("slope", "Mu5Ge6", sample_slope_lemma(samples, s, SlopeVariant::Mu5Ge6));
        add("weight", "-", sample_weight_lemma(samples, s));
        rep.notes.push_back(std::to_string(failures) + " counterexamples");
        for (const auto& e : examples) rep.notes.push_back("counterexample: " + e);
        return {rep, failures == 0};
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical invariants, existence and dimensions of sheaves on ribbons", "ribbonmod"};
    app.require_subcommand(1);

    InvariantsCmd invariants;
    ExistsCmd exists;
    DimCmd dim;
    ComponentsCmd components;
    Rank3Cmd rank3;
    BlowupCmd blow;
    StrataCmd strata;
    VerifyCmd verify;

    auto* c_inv = app.add_subcommand("invariants", "R, D, slope, chi and Hilbert polynomial of a complete type");
    invariants.attach(c_inv);
    auto* c_exists = app.add_subcommand("exists", "existence of (semi)stable sheaves");
    exists.attach(c_exists);
    auto* c_dim = app.add_subcommand("dim", "dimension of a locus");
    dim.attach(c_dim);
    auto* c_comp = app.add_subcommand("components", "conjectural irreducible components for (R, D)");
    components.attach(c_comp);
    auto* c_rank3 = app.add_subcommand("rank3", "rank-3 classification over a rational reduced curve");
    rank3.attach(c_rank3);
    auto* c_blow = app.add_subcommand("blowup", "ribbon parameters after blowing up a divisor of length b");
    blow.attach(c_blow);
    auto* c_strata = app.add_subcommand("strata", "per-partition stratum dimensions of the type (n,1) locus");
    strata.attach(c_strata);
    auto* c_verify = app.add_subcommand("verify-lemmas", "random check of the slope and weighted-average lemmas");
    verify.attach(c_verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        Report rep;
        ReportFormat fmt = ReportFormat::Text;
        int code = kOk;
        if (c_inv->parsed()) {
            rep = invariants.run();
            fmt = invariants.format.value();
        } else if (c_exists->parsed()) {
            rep = exists.run();
            fmt = exists.format.value();
        } else if (c_dim->parsed()) {
            rep = dim.run();
            fmt = dim.format.value();
        } else if (c_comp->parsed()) {
            rep = components.run();
            fmt = components.format.value();
        } else if (c_rank3->parsed()) {
            rep = rank3.run();
            fmt = rank3.format.value();
        } else if (c_blow->parsed()) {
            rep = blow.run();
            fmt = blow.format.value();
        } else if (c_strata->parsed()) {
            rep = strata.run();
            fmt = strata.format.value();
        } else {
            auto [r, ok] = verify.run();
            rep = std::move(r);
            fmt = verify.format.value();
            code = ok ? kOk : kLemmaFailure;
        }
        out << format_report(rep, fmt);
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const IntegralityError& e) {
        err << "integrality error: " << e.what() << "\n";
        return kIntegrality;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

} // namespace ribbonmod::cli
