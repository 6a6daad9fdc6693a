#include "hrl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hrl/errors.hpp"
#include "hrl/euclid.hpp"
#include "hrl/hkernel.hpp"
#include "hrl/lemma.hpp"
#include "hrl/partition.hpp"
#include "hrl/ramsey.hpp"
#include "hrl/sampling.hpp"
#include "hrl/svg.hpp"

namespace hrl::cli {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
constexpr double kClosureTol = 1e-6;

// Beyond this depth the hyperbolic closure of the nine-cycle drowns in
// floating-point noise (coordinate rounding amplified by e^depth), so only the
// Euclidean closure is enforced there.
constexpr double kDeepDepth = 18.0;

// A problem with the command line or its referenced inputs; exits with 2.
struct UsageError {
    std::string message;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string jpoint(const HPoint& p) { return "[" + fmt(p.x) + "," + fmt(p.y) + "]"; }
std::string jpoint(const euclid::EPoint& p) { return "[" + fmt(p.x) + "," + fmt(p.y) + "]"; }

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
            out += ch;
        } else if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
            out += buf;
        } else {
            out += ch;
        }
    }
    return out;
}

double parse_double(const std::string& text, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw UsageError{std::string(what) + ": '" + text + "' is not a number"};
    return value;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_double(text.substr(pos, end - pos), what));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw UsageError{std::string(what) + ": empty list"};
    return out;
}

std::uint64_t parse_seed_text(const std::string& text) {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
}

// --seed beats HRL_SEED beats the built-in default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("HRL_SEED")) {
        try {
            return parse_seed_text(env);
        } catch (const std::exception&) {
            throw UsageError{std::string("HRL_SEED: '") + env + "' is not a 64-bit seed"};
        }
    }
    return kDefaultSeed;
}

HPoint parse_hpoint(const std::string& text, const char* what) {
    std::vector<double> xy = parse_double_list(text, what);
    if (xy.size() != 2) throw UsageError{std::string(what) + ": expected 'x,y'"};
    try {
        return {xy[0], xy[1]};
    } catch (const OutOfDiskPrecision&) {
        throw UsageError{std::string(what) + ": point must lie inside the unit disk"};
    }
}

std::vector<double> parse_R_schedule(const std::string& text) {
    std::vector<double> Rs = parse_double_list(text, "--R");
    for (double R : Rs)
        if (!(R > 1.0)) throw UsageError{"--R: every bound must exceed 1"};
    return Rs;
}

std::vector<double> parse_r_schedule(const std::string& text) {
    if (text == "auto") return ramsey::canonical_r_schedule();
    std::vector<double> rs = parse_double_list(text, "--r");
    for (double r : rs)
        if (!(r > 0.0 && r < 1.0)) throw UsageError{"--r: every radius must lie in (0, 1)"};
    return rs;
}

// ---- lemma ----

struct LemmaOpts {
    double tol = 1e-12;
    bool json = false;
};

void print_point(std::ostream& out, const char* name, const HPoint& p) {
    out << name << " = (" << fmt(p.x) << ", " << fmt(p.y) << ")\n";
}

int cmd_lemma_solve(const LemmaOpts& o, std::ostream& out) {
    lemma::TriangleSolution sol = lemma::solve_lemma(o.tol);
    if (o.json) {
        out << "{\"t\":" << fmt(sol.t) << ",\"phi\":" << fmt(sol.phi) << ",\"t0\":" << fmt(sol.t0)
            << ",\"A\":" << jpoint(sol.A) << ",\"B\":" << jpoint(sol.B) << ",\"C\":"
            << jpoint(sol.C) << ",\"O\":" << jpoint(sol.O) << "}\n";
        return 0;
    }
    out << "t   = " << fmt(sol.t) << "\n";
    out << "t0  = " << fmt(sol.t0) << "\n";
    out << "phi = " << fmt(sol.phi) << "\n";
    print_point(out, "A  ", sol.A);
    print_point(out, "B  ", sol.B);
    print_point(out, "C  ", sol.C);
    print_point(out, "O  ", sol.O);
    return 0;
}

int cmd_lemma_trace(const LemmaOpts& o, std::ostream& out) {
    lemma::TriangleSolution sol = lemma::solve_lemma(o.tol);
    lemma::LemmaConstructionTrace tr = lemma::geometric_crosscheck(sol);
    double gap = distance(sol.O, *tr.O_geom);
    double spread = distance(tr.X, tr.Xp);
    if (o.json) {
        out << "{\"t\":" << fmt(sol.t) << ",\"M\":" << jpoint(tr.M) << ",\"P\":" << jpoint(tr.P)
            << ",\"X\":" << jpoint(tr.X) << ",\"Xp\":" << jpoint(tr.Xp) << ",\"l\":["
            << fmt(tr.l.u.theta) << "," << fmt(tr.l.v.theta) << "],\"p\":[" << fmt(tr.p.u.theta)
            << "," << fmt(tr.p.v.theta) << "],\"O\":" << jpoint(sol.O) << ",\"O_geom\":"
            << jpoint(*tr.O_geom) << ",\"center_gap\":" << fmt(gap) << ",\"dXXp\":"
            << fmt(spread) << ",\"bound_4t\":" << fmt(4 * sol.t) << "}\n";
    } else {
        print_point(out, "M      ", tr.M);
        print_point(out, "P      ", tr.P);
        print_point(out, "X      ", tr.X);
        print_point(out, "X'     ", tr.Xp);
        out << "l       = geodesic(" << fmt(tr.l.u.theta) << ", " << fmt(tr.l.v.theta) << ")\n";
        out << "p       = geodesic(" << fmt(tr.p.u.theta) << ", " << fmt(tr.p.v.theta) << ")\n";
        print_point(out, "O      ", sol.O);
        print_point(out, "O_geom ", *tr.O_geom);
        out << "center_gap = " << fmt(gap) << "\n";
        out << "d(X, X')   = " << fmt(spread) << " (bound 4t = " << fmt(4 * sol.t) << ")\n";
    }
    return gap <= 1e-6 && spread < 4 * sol.t ? 0 : 1;
}

// ---- cycle verify ----

struct CycleOpts {
    long count = 100;
    double depth = 25.0;
    std::optional<std::uint64_t> seed;
};

int cmd_cycle_verify(const CycleOpts& o, std::ostream& out) {
    if (o.count <= 0) throw UsageError{"--count must be positive"};
    if (!(o.depth > 0.0) || o.depth > 25.0) throw UsageError{"--depth must lie in (0, 25]"};

    ramsey::CenterTriple triple = ramsey::canonical_center_triple();
    Rng rng(resolve_seed(o.seed));
    long violations = 0;
    double max_ce = 0.0;
    double max_ch = 0.0;
    for (long i = 0; i < o.count; ++i) {
        double depth = o.depth * rng.unit();
        HPoint x0 = from_complex(std::tanh(depth / 2) * std::polar(1.0, rng.angle()));
        ramsey::CycleTrace trace = ramsey::nine_cycle(triple, x0);
        double ce = trace.closure_euclidean();
        double ch = trace.closure_hyperbolic();
        bool ok = ce <= kClosureTol && (depth > kDeepDepth || ch <= kClosureTol);
        if (!ok) ++violations;
        max_ce = std::max(max_ce, ce);
        max_ch = std::max(max_ch, ch);
        out << "{\"index\":" << i << ",\"depth\":" << fmt(depth) << ",\"closure_euclidean\":"
            << fmt(ce) << ",\"closure_hyperbolic\":" << fmt(ch) << ",\"ok\":"
            << (ok ? "true" : "false") << "}\n";
    }
    out << "{\"checked\":" << o.count << ",\"violations\":" << violations
        << ",\"max_closure_euclidean\":" << fmt(max_ce) << ",\"max_closure_hyperbolic\":"
        << fmt(max_ch) << "}\n";
    return violations == 0 ? 0 : 1;
}

// ---- hunt ----

struct HuntOpts {
    std::string partition;
    std::string R = "2,4,8,16,32,64";
    std::string r = "auto";
    std::optional<std::uint64_t> seed;
};

int cmd_hunt(const HuntOpts& o, std::ostream& out) {
    Partition part = load_partition_file(o.partition);
    std::vector<double> Rs = parse_R_schedule(o.R);
    std::vector<double> rs = parse_r_schedule(o.r);

    ramsey::CenterSource source;
    if (part.cells.size() == 2)
        source = ramsey::canonical_center_triple();
    else
        source = ramsey::central_candidate_set(static_cast<int>(part.cells.size()));

    ramsey::HuntReport rep = ramsey::hunt(part, source, Rs, rs, resolve_seed(o.seed));
    out << ramsey::to_ndjson(rep);
    for (std::size_t i = 0; i < rep.clusters.size(); ++i) {
        const ramsey::ClusterSummary& cl = rep.clusters[i];
        out << "{\"cluster\":" << i << ",\"representative\":" << jpoint(cl.representative)
            << ",\"count\":" << cl.count << ",\"max_R\":" << fmt(cl.max_R) << ",\"source_index\":"
            << cl.source_index << ",\"source_distance\":" << fmt(cl.source_distance) << "}\n";
    }
    return 0;
}

// ---- probe ----

struct ProbeOpts {
    std::string partition;
    double R = 4.0;
    long samples = 100000;
    std::string centers = "triple";
    int m = 3;
    std::vector<std::string> extra_centers;
    std::optional<std::uint64_t> seed;
};

int cmd_probe(const ProbeOpts& o, std::ostream& out) {
    Partition part = load_partition_file(o.partition);
    if (o.samples <= 0) throw UsageError{"--samples must be positive"};

    std::vector<HPoint> centers;
    if (o.centers == "triple") {
        ramsey::CenterTriple triple = ramsey::canonical_center_triple();
        centers = {triple.c0, triple.c1, triple.c2};
    } else if (o.centers == "candidates") {
        centers = ramsey::central_candidate_set(o.m).centers;
    } else if (o.centers != "custom") {
        throw UsageError{"--centers must be 'triple', 'candidates', or 'custom'"};
    }
    for (const std::string& text : o.extra_centers)
        centers.push_back(parse_hpoint(text, "--center"));
    if (centers.empty()) throw UsageError{"--centers custom requires at least one --center"};

    ramsey::ProbeReport rep =
        ramsey::boundedness_probe(part, centers, o.R, o.samples, resolve_seed(o.seed));
    out << ramsey::to_ndjson(rep);
    out << "{\"regime\":\"probe\",\"R\":" << fmt(rep.R) << ",\"centers\":" << rep.centers.size()
        << ",\"checked\":" << rep.checked << ",\"hits\":" << rep.hits.size() << "}\n";
    return rep.hits.empty() ? 0 : 1;
}

// ---- partition validate ----

struct ValidateOpts {
    std::string partition;
    long samples = 100000;
    std::optional<std::uint64_t> seed;
};

int cmd_partition_validate(const ValidateOpts& o, std::ostream& out) {
    Partition part = load_partition_file(o.partition);
    if (o.samples <= 0) throw UsageError{"--samples must be positive"};
    ValidationReport rep = validate(part, o.samples, resolve_seed(o.seed));
    out << "{\"label\":\"" << json_escape(part.label) << "\",\"cells\":" << part.cells.size()
        << ",\"valid\":" << (rep.valid ? "true" : "false") << ",\"checked\":" << rep.checked;
    if (!rep.valid) {
        out << ",\"witness\":" << jpoint(*rep.witness) << ",\"kind\":\"" << rep.kind
            << "\",\"cell_a\":" << rep.cell_a << ",\"cell_b\":" << rep.cell_b;
    }
    out << "}\n";
    return rep.valid ? 0 : 1;
}

// ---- render ----

struct RenderOpts {
    std::string partition;
    bool lemma_trace = false;
    std::string out_path;
    double tol = 1e-12;
};

svg::Scene lemma_trace_scene(double tol) {
    lemma::TriangleSolution sol = lemma::solve_lemma(tol);
    lemma::LemmaConstructionTrace tr = lemma::geometric_crosscheck(sol);
    svg::Scene scene;
    scene.geodesics.push_back({geodesic_through(sol.A, sol.B), ""});
    scene.geodesics.push_back({geodesic_through(sol.C, tr.M), ""});
    scene.geodesics.push_back({tr.l, "l"});
    scene.geodesics.push_back({tr.p, "p"});
    scene.segments.push_back({tr.X, tr.Xp});
    scene.points = {{sol.A, "A"}, {sol.B, "B"}, {sol.C, "C"},        {tr.M, "M"},
                    {tr.P, "P"}, {tr.X, "X"},  {tr.Xp, "X′"},  {sol.O, "O"}};
    return scene;
}

int cmd_render(const RenderOpts& o, std::ostream&) {
    bool have_partition = !o.partition.empty();
    if (have_partition == o.lemma_trace)
        throw UsageError{"render requires exactly one of --partition or --lemma-trace"};

    svg::Scene scene;
    if (have_partition)
        scene.partition = load_partition_file(o.partition);
    else
        scene = lemma_trace_scene(o.tol);

    try {
        svg::render_svg(scene, o.out_path);
    } catch (const Error& e) {
        throw UsageError{e.what()};  // IO problems are input errors, with path context
    }
    return 0;
}

// ---- euclid probe ----

struct EuclidProbeOpts {
    double cx = 0.0;
    double cy = 0.0;
    std::string radius = "auto";
    long samples = 100000;
    std::optional<std::uint64_t> seed;
};

int cmd_euclid_probe(const EuclidProbeOpts& o, std::ostream& out) {
    if (o.samples <= 0) throw UsageError{"--samples must be positive"};
    euclid::EWedgePartition part = euclid::e_sector_partition();
    euclid::EPoint c{o.cx, o.cy};
    double radius = o.radius == "auto" ? euclid::symmetric_overlap_bound(part, c) + 0.5
                                       : parse_double(o.radius, "--radius");
    euclid::EProbeReport rep =
        euclid::e_bounded_symmetry_probe(part, c, radius, o.samples, resolve_seed(o.seed));
    for (const euclid::EProbeHit& hit : rep.hits) {
        out << "{\"regime\":\"euclid_probe\",\"x\":" << jpoint(hit.x) << ",\"image\":"
            << jpoint(hit.image) << ",\"cell\":" << hit.cell << "}\n";
    }
    out << "{\"regime\":\"euclid_probe\",\"center\":" << jpoint(c) << ",\"radius\":"
        << fmt(rep.radius) << ",\"bound\":" << fmt(rep.bound) << ",\"checked\":" << rep.checked
        << ",\"hits\":" << rep.hits.size() << "}\n";
    return rep.hits.empty() ? 0 : 1;
}

// ---- euclid contrast ----

struct ContrastOpts {
    int m = 3;
    int cell = -1;  // -1 = every cell
    std::string out_path;
};

int cmd_euclid_contrast(const ContrastOpts& o, std::ostream& out) {
    std::vector<int> cells;
    if (o.cell < 0)
        for (int k = 0; k < o.m; ++k) cells.push_back(k);
    else
        cells.push_back(o.cell);

    svg::Scene scene;
    for (int k : cells) {
        Geodesic g = euclid::h_sector_geodesic_witness(o.m, k);
        out << "{\"m\":" << o.m << ",\"cell\":" << k << ",\"u\":" << fmt(g.u.theta) << ",\"v\":"
            << fmt(g.v.theta) << "}\n";
        scene.geodesics.push_back({g, "g" + std::to_string(k)});
    }
    if (!o.out_path.empty()) {
        scene.partition = sector_partition(o.m, kPi / 2);
        try {
            svg::render_svg(scene, o.out_path);
        } catch (const Error& e) {
            throw UsageError{e.what()};
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperbolic-plane partition laboratory: triangle solver, witness hunts, "
                 "boundedness probes, and figure rendering",
                 "hrl"};
    app.require_subcommand(1);

    LemmaOpts solve_opts;
    LemmaOpts trace_opts;
    CLI::App* lemma_cmd =
        app.add_subcommand("lemma", "Equilateral-triangle symmetry composition");
    lemma_cmd->require_subcommand(1);
    CLI::App* lemma_solve =
        lemma_cmd->add_subcommand("solve", "Find the side whose composition angle is 2*pi/3");
    lemma_solve->add_option("--tol", solve_opts.tol, "Composition-angle tolerance")
        ->check(CLI::PositiveNumber);
    lemma_solve->add_flag("--json", solve_opts.json, "Emit a single JSON object");
    CLI::App* lemma_trace_cmd = lemma_cmd->add_subcommand(
        "trace", "Solve, then run the geometric midpoint construction crosscheck");
    lemma_trace_cmd->add_option("--tol", trace_opts.tol, "Composition-angle tolerance")
        ->check(CLI::PositiveNumber);
    lemma_trace_cmd->add_flag("--json", trace_opts.json, "Emit a single JSON object");

    CycleOpts cycle_opts;
    CLI::App* cycle_cmd = app.add_subcommand("cycle", "Nine-step symmetry cycle checks");
    cycle_cmd->require_subcommand(1);
    CLI::App* cycle_verify =
        cycle_cmd->add_subcommand("verify", "Verify nine-cycle closure on seeded points");
    cycle_verify->add_option("--count", cycle_opts.count, "Number of seeded start points");
    cycle_verify->add_option("--depth", cycle_opts.depth,
                             "Maximum hyperbolic distance of start points from the origin");
    cycle_verify->add_option("--seed", cycle_opts.seed, "RNG seed (beats HRL_SEED)");

    HuntOpts hunt_opts;
    CLI::App* hunt_cmd =
        app.add_subcommand("hunt", "Run witness searches across R (and r) schedules");
    hunt_cmd->add_option("--partition", hunt_opts.partition, "Partition JSON file")->required();
    hunt_cmd->add_option("--R", hunt_opts.R, "Comma-separated exclusion bounds (each > 1)");
    hunt_cmd->add_option("--r", hunt_opts.r, "Comma-separated radii in (0,1), or 'auto'");
    hunt_cmd->add_option("--seed", hunt_opts.seed, "RNG seed (beats HRL_SEED)");

    ProbeOpts probe_opts;
    CLI::App* probe_cmd = app.add_subcommand(
        "probe", "Sample for monochromatic symmetric pairs outside an exclusion disk");
    probe_cmd->add_option("--partition", probe_opts.partition, "Partition JSON file")->required();
    probe_cmd->add_option("--R", probe_opts.R, "Exclusion bound (> 1)");
    probe_cmd->add_option("--samples", probe_opts.samples, "Sample count");
    probe_cmd->add_option("--centers", probe_opts.centers,
                          "Symmetry centers: 'triple', 'candidates', or 'custom'");
    probe_cmd->add_option("--m", probe_opts.m, "Candidate-set size parameter");
    probe_cmd->add_option("--center", probe_opts.extra_centers,
                          "Extra center 'x,y' (repeatable)");
    probe_cmd->add_option("--seed", probe_opts.seed, "RNG seed (beats HRL_SEED)");

    ValidateOpts validate_opts;
    CLI::App* partition_cmd = app.add_subcommand("partition", "Partition file utilities");
    partition_cmd->require_subcommand(1);
    CLI::App* partition_validate = partition_cmd->add_subcommand(
        "validate", "Check disjoint-and-covering on seeded samples");
    partition_validate->add_option("--partition", validate_opts.partition, "Partition JSON file")
        ->required();
    partition_validate->add_option("--samples", validate_opts.samples, "Sample count");
    partition_validate->add_option("--seed", validate_opts.seed, "RNG seed (beats HRL_SEED)");

    RenderOpts render_opts;
    CLI::App* render_cmd = app.add_subcommand("render", "Write an SVG figure");
    render_cmd->add_option("--partition", render_opts.partition, "Partition JSON file to draw");
    render_cmd->add_flag("--lemma-trace", render_opts.lemma_trace,
                         "Draw the lemma construction figure instead of a partition");
    render_cmd->add_option("--out", render_opts.out_path, "Output SVG path")->required();
    render_cmd->add_option("--tol", render_opts.tol, "Solver tolerance for --lemma-trace")
        ->check(CLI::PositiveNumber);

    EuclidProbeOpts eprobe_opts;
    ContrastOpts contrast_opts;
    CLI::App* euclid_cmd =
        app.add_subcommand("euclid", "Euclidean comparator and hyperbolic contrast");
    euclid_cmd->require_subcommand(1);
    CLI::App* euclid_probe = euclid_cmd->add_subcommand(
        "probe", "Sample the three-wedge plane for symmetric pairs outside a radius");
    euclid_probe->add_option("--cx", eprobe_opts.cx, "Symmetry center x");
    euclid_probe->add_option("--cy", eprobe_opts.cy, "Symmetry center y");
    euclid_probe->add_option("--radius", eprobe_opts.radius,
                             "Exclusion radius, or 'auto' (= derived bound + 0.5)");
    euclid_probe->add_option("--samples", eprobe_opts.samples, "Sample count");
    euclid_probe->add_option("--seed", eprobe_opts.seed, "RNG seed (beats HRL_SEED)");
    CLI::App* euclid_contrast = euclid_cmd->add_subcommand(
        "contrast", "Verified in-cell geodesics for the hyperbolic sector partition");
    euclid_contrast->add_option("--m", contrast_opts.m, "Number of sector cells");
    euclid_contrast->add_option("--cell", contrast_opts.cell, "Single cell index (default: all)");
    euclid_contrast->add_option("--out", contrast_opts.out_path, "Optional SVG output path");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("hrl");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (lemma_solve->parsed()) return cmd_lemma_solve(solve_opts, out);
        if (lemma_trace_cmd->parsed()) return cmd_lemma_trace(trace_opts, out);
        if (cycle_verify->parsed()) return cmd_cycle_verify(cycle_opts, out);
        if (hunt_cmd->parsed()) return cmd_hunt(hunt_opts, out);
        if (probe_cmd->parsed()) return cmd_probe(probe_opts, out);
        if (partition_validate->parsed()) return cmd_partition_validate(validate_opts, out);
        if (render_cmd->parsed()) return cmd_render(render_opts, out);
        if (euclid_probe->parsed()) return cmd_euclid_probe(eprobe_opts, out);
        if (euclid_contrast->parsed()) return cmd_euclid_contrast(contrast_opts, out);
        err << "no command selected\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.message << "\n";
        return 2;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidBound& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RadiusInsideBound& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RadiusBelowBound& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptySampleRegion& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidPartitionFile& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace hrl::cli
