#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crosscalc/crossings.hpp"
#include "crosscalc/error.hpp"
#include "crosscalc/generate.hpp"
#include "crosscalc/numeric.hpp"
#include "crosscalc/oracles.hpp"
#include "crosscalc/path_io.hpp"
#include "crosscalc/report.hpp"
#include "crosscalc/sweep.hpp"
#include "crosscalc/truncation.hpp"
#include "crosscalc/variation.hpp"

namespace crosscalc::cli {

namespace {

struct Options {
    std::string in;
    std::string gen;
    std::string out;
    std::optional<double> s;
    std::optional<double> t;
    std::optional<double> tol;
    int jobs = 0;

    std::optional<double> level;
    std::optional<double> corridor;
    double width = 0.0;

    std::string identity;
    std::string f = "poly:1";
    std::uint64_t sweep = 0;
    std::uint64_t seed = 1;

    std::string kind;
    std::int64_t points = 10000;
    int rounds = 0;
    std::string side = "left";
    std::string variant = "signed";
    std::string base = "full";
    std::string selector = "up";
    std::int64_t samples = 100000;

    std::string family = "zigzag";
    std::int64_t n = 1;
    double amplitude = 1.0;
};

double tolerance(const Options& o) {
    if (o.tol) return *o.tol;
    if (const char* env = std::getenv("CROSSCALC_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (*env == '\0' || *end != '\0' || !(v >= 0.0)) {
            throw Error(Errc::InvalidSpec, "CROSSCALC_TOL must be a nonnegative number");
        }
        return v;
    }
    return 1e-9;
}

CadlagPath input_path(const Options& o) {
    if (!o.in.empty() && !o.gen.empty()) throw Error(Errc::InvalidSpec, "give either --in or --gen, not both");
    if (!o.in.empty()) return load_path(o.in);
    if (!o.gen.empty()) return generate(parse_generator(o.gen));
    throw Error(Errc::InvalidSpec, "an input path is required (--in FILE or --gen family:n[:seed[:amp]])");
}

std::pair<double, double> window(const Options& o, const CadlagPath& p) {
    return {o.s.value_or(0.0), o.t.value_or(p.horizon())};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << text)) throw Error(Errc::ParseError, "cannot write '" + o.out + "'");
}

void emit_path(const Options& o, std::ostream& out, const CadlagPath& p) {
    if (o.out.empty()) {
        out << write_path_csv(p);
    } else {
        save_path(p, o.out);
    }
}

template <class E>
E pick(const std::string& value, std::initializer_list<std::pair<const char*, E>> table, const char* what) {
    for (const auto& [name, e] : table) {
        if (value == name) return e;
    }
    throw Error(Errc::InvalidSpec, std::string("unknown ") + what + " '" + value + "'");
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Identity id = parse_identity(o.identity);
    const double tol = tolerance(o);
    const TestFunction g = parse_test_function(o.f);

    if (o.sweep == 0) {
        if (id == Identity::Tanaka && !o.level) throw Error(Errc::InvalidSpec, "tanaka needs --level");
        const CadlagPath p = input_path(o);
        const IdentityReport r = verify_identity(p, g, o.t.value_or(p.horizon()), id, o.level.value_or(0.0), tol);
        emit(o, out, to_json(r) + "\n");
        return r.pass ? kOk : kVerifyFailed;
    }

    const std::uint64_t seed = o.seed;
    const auto instance = [&](std::uint64_t k) {
        const CadlagPath p = sweep_path(seed, k);
        // Without --level, tanaka draws one level per instance.
        double z = o.level.value_or(0.0);
        if (id == Identity::Tanaka && !o.level) z = SplitMix64(seed + k).uniform(-1.0, 1.0);
        return verify_identity(p, g, p.horizon(), id, z, tol);
    };
    const auto outcomes = identity_sweep_parallel(o.sweep, instance, o.jobs);
    const SweepSummary s = summarize(outcomes);
    std::string ids = "[";
    for (std::size_t k = 0; k < s.failing_ids.size(); ++k) {
        if (k) ids += ',';
        ids += std::to_string(s.failing_ids[k]);
    }
    ids += ']';
    std::string errors = "[";
    bool first = true;
    for (const SweepOutcome& oc : outcomes) {
        if (oc.report) continue;
        if (!first) errors += ',';
        first = false;
        errors += JsonObject{}.add("id", static_cast<std::int64_t>(oc.id)).add("error", oc.error).str();
    }
    errors += ']';
    const std::string text = JsonObject{}
                                 .add("identity", to_string(id))
                                 .add("f", o.f)
                                 .add("seed", static_cast<std::int64_t>(seed))
                                 .add("instances", static_cast<std::int64_t>(s.instances))
                                 .add("passed", static_cast<std::int64_t>(s.passed))
                                 .add("failed", static_cast<std::int64_t>(s.failed))
                                 .add("errors", static_cast<std::int64_t>(s.errors))
                                 .add("max_relative_residual", s.max_relative_residual)
                                 .add("tolerance", tol)
                                 .add_raw("failing_ids", ids)
                                 .add_raw("error_details", errors)
                                 .str();
    emit(o, out, text + "\n");
    return s.failed == 0 && s.errors == 0 ? kOk : kVerifyFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const CadlagPath p = input_path(o);
    const auto [s, t] = window(o, p);
    if (o.kind == "crossings") {
        if (!o.level || !o.corridor) throw Error(Errc::InvalidSpec, "oracle crossings needs --level and --corridor");
        const CorridorCount exact = corridor_crossings(p, *o.level, *o.corridor, s, t);
        const GridCrossings grid = grid_crossing_oracle(p, *o.level, *o.corridor, s, t, {o.points, o.rounds});
        emit(o, out,
             JsonObject{}
                     .add("kind", "crossings")
                     .add("y", *o.level)
                     .add("c", *o.corridor)
                     .add("grid_cells", (o.points - 1) << o.rounds)
                     .add_raw("exact", JsonObject{}.add("up", exact.up).add("down", exact.down).str())
                     .add_raw("oracle", JsonObject{}.add("up", grid.up).add("down", grid.down).str())
                     .str() +
                 "\n");
        return kOk;
    }
    const TestFunction g = parse_test_function(o.f);
    if (o.kind == "stieltjes") {
        const StieltjesQuery q{
            pick<Side>(o.side, {{"left", Side::Left}, {"right", Side::Right}}, "side"),
            pick<Variant>(o.variant,
                          {{"signed", Variant::Signed}, {"plus", Variant::Plus}, {"minus", Variant::Minus},
                           {"abs", Variant::Abs}},
                          "variant"),
            pick<Base>(o.base, {{"full", Base::Full}, {"continuous", Base::Continuous}}, "base")};
        const double exact = stieltjes_integral(p, g, q);
        const double approx = riemann_stieltjes_oracle(p, g, q, o.points);
        emit(o, out,
             JsonObject{}
                     .add("kind", "stieltjes")
                     .add("f", o.f)
                     .add("side", o.side)
                     .add("variant", o.variant)
                     .add("base", o.base)
                     .add("partition_points", o.points)
                     .add("exact", exact)
                     .add("oracle", approx)
                     .add("difference", exact - approx)
                     .str() +
                 "\n");
        return kOk;
    }
    if (o.kind == "levelint") {
        const Selector sel = pick<Selector>(o.selector,
                                            {{"up", Selector::Up},
                                             {"down", Selector::Down},
                                             {"updown", Selector::UpMinusDown},
                                             {"total", Selector::Total}},
                                            "selector");
        const double exact = level_integral(crossing_profile(p, 0.0, p.horizon()), g, sel);
        const double approx = sampled_level_integral_oracle(p, g, sel, o.samples);
        emit(o, out,
             JsonObject{}
                     .add("kind", "levelint")
                     .add("f", o.f)
                     .add("selector", o.selector)
                     .add("z_samples", o.samples)
                     .add("exact", exact)
                     .add("oracle", approx)
                     .add("difference", exact - approx)
                     .str() +
                 "\n");
        return kOk;
    }
    throw Error(Errc::InvalidSpec, "unknown oracle kind '" + o.kind + "' (crossings|stieltjes|levelint)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Crossing counts, variation and occupation identities for cadlag paths", "crosscalc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--in", o.in, "input path (.csv or .json)");
    app.add_option("--gen", o.gen, "generated input: family:n[:seed[:amplitude]]");
    app.add_option("--out", o.out, "write the result to this file");
    app.add_option("--s", o.s, "window start (default 0)");
    app.add_option("--t", o.t, "window end / horizon (default: last node)");
    app.add_option("--tol", o.tol, "relative tolerance (default $CROSSCALC_TOL or 1e-9)");
    app.add_option("--jobs", o.jobs, "worker threads for sweeps (0 = default)");

    auto* tv = app.add_subcommand("tv", "total, upward and downward variation");
    auto* cr = app.add_subcommand("crossings", "level or corridor crossing counts");
    cr->add_option("--level", o.level, "level z / corridor centre y")->required();
    cr->add_option("--corridor", o.corridor, "corridor width c");
    auto* prof = app.add_subcommand("profile", "crossing profile as CSV bands");
    auto* st = app.add_subcommand("stats", "level statistics on [0, t]");
    st->add_option("--level", o.level, "level z")->required();
    auto* tr = app.add_subcommand("truncate", "piecewise-monotone truncation at width c");
    tr->add_option("--c", o.width, "corridor width")->required();
    auto* ve = app.add_subcommand("verify", "evaluate an identity and report residuals");
    ve->add_option("--identity", o.identity,
                   "banind1|banind1-1|banind1-11|banind1-2|ito|itomeyer|tm1|tm2|tanaka")
        ->required();
    ve->add_option("--f", o.f, "test function: poly:c0,c1,...|sign|step:a|sqrtplus");
    ve->add_option("--level", o.level, "level for tanaka");
    ve->add_option("--sweep", o.sweep, "run N seeded random instances instead of one path");
    ve->add_option("--seed", o.seed, "seed for --sweep");
    auto* orc = app.add_subcommand("oracle", "compare exact values with a brute-force oracle");
    orc->add_option("--kind", o.kind, "crossings|stieltjes|levelint")->required();
    orc->add_option("--level", o.level, "corridor centre (crossings)");
    orc->add_option("--corridor", o.corridor, "corridor width (crossings)");
    orc->add_option("--points", o.points, "grid points / partition cells");
    orc->add_option("--rounds", o.rounds, "grid refinement rounds (crossings)");
    orc->add_option("--f", o.f, "test function");
    orc->add_option("--side", o.side, "left|right (stieltjes)");
    orc->add_option("--variant", o.variant, "signed|plus|minus|abs (stieltjes)");
    orc->add_option("--base", o.base, "full|continuous (stieltjes)");
    orc->add_option("--selector", o.selector, "up|down|updown|total (levelint)");
    orc->add_option("--samples", o.samples, "level samples (levelint)");
    auto* gen = app.add_subcommand("gen", "generate a path and write it as CSV/JSON");
    gen->add_option("--family", o.family, "step_random|zigzag|sawtooth|mixed_jump_linear|counterexample")
        ->required();
    gen->add_option("--n", o.n, "size")->required();
    gen->add_option("--seed", o.seed, "seed");
    gen->add_option("--amplitude", o.amplitude, "amplitude");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (tv->parsed()) {
            const CadlagPath p = input_path(o);
            const auto [s, t] = window(o, p);
            emit(o, out, to_json(variation_summary(p, s, t)) + "\n");
        } else if (cr->parsed()) {
            const CadlagPath p = input_path(o);
            const auto [s, t] = window(o, p);
            emit(o, out,
                 (o.corridor ? to_json(corridor_crossings(p, *o.level, *o.corridor, s, t))
                             : to_json(level_crossings(p, *o.level, s, t))) +
                     "\n");
        } else if (prof->parsed()) {
            const CadlagPath p = input_path(o);
            const auto [s, t] = window(o, p);
            emit(o, out, profile_csv(crossing_profile(p, s, t)));
        } else if (st->parsed()) {
            const CadlagPath p = input_path(o);
            emit(o, out, to_json(level_statistics(p, *o.level, o.t.value_or(p.horizon()))) + "\n");
        } else if (tr->parsed()) {
            emit_path(o, out, truncate(input_path(o), o.width).result);
        } else if (ve->parsed()) {
            return cmd_verify(o, out);
        } else if (orc->parsed()) {
            return cmd_oracle(o, out);
        } else if (gen->parsed()) {
            emit_path(o, out, generate({parse_family(o.family), o.n, o.seed, o.amplitude}));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace crosscalc::cli
