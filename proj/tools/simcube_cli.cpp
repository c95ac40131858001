// simcube: construct and verify large origin-centered regular simplices in the
// unit cube, print the associated bound tables, and dump Hadamard matrices.
//
// Exit codes: 0 success, 1 I/O or usage failure, 2 verification failure,
// 3 requested Hadamard order not covered by the registry.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simcube/bounds.hpp"
#include "simcube/io.hpp"
#include "simcube/planner.hpp"

using namespace simcube;

namespace {

constexpr std::uint64_t kDefaultSeed = 20110114;

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("SIMCUBE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed SIMCUBE_SEED\n";
        }
    }
    return kDefaultSeed;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

struct CommonOpts {
    std::string format = "json";
    std::string out_path;
    std::string pivot = "heuristic";
    std::size_t exhaustive_limit = 128;
    bool phase_grid = false;
    std::uint64_t seed = seed_from_env();
};

PlannerConfig planner_config(const CommonOpts& opts, const std::string& strategy = "auto") {
    PlannerConfig cfg;
    cfg.pivot_mode = opts.pivot == "exhaustive" ? PivotMode::exhaustive : PivotMode::heuristic;
    cfg.exhaustive_limit = opts.exhaustive_limit;
    cfg.phase_grid = opts.phase_grid;
    if (strategy != "auto") cfg.force_strategy = strategy;
    return cfg;
}

int cmd_construct(std::size_t dim, const std::string& strategy, const CommonOpts& opts) {
    const OrderRegistry registry;
    Planner planner(registry, planner_config(opts, strategy));
    ConstructionPlan plan = planner.plan(dim);
    OhatMatrix mat = planner.replay(plan);
    SimplexEmbedding emb = extract(mat);
    VerificationReport report = verify(emb);
    if (!report.pass) {
        std::cerr << "internal verification failed: spread=" << report.regularity_spread
                  << " barycenter=" << report.barycenter_norm
                  << " margin=" << report.containment_margin
                  << " circumradius=" << report.circumradius_error << "\n";
        return 2;
    }
    if (!opts.out_path.empty()) {
        std::string payload;
        if (opts.format == "csv") {
            payload = io::embedding_to_csv(emb);
        } else {
            io::json j = io::embedding_to_json(emb);
            j["plan"] = io::plan_to_json(plan);
            j["seed"] = opts.seed;
            payload = j.dump(2) + "\n";
        }
        if (!write_file(opts.out_path, payload)) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            return 1;
        }
    }
    std::cout << "n=" << dim << " edge=" << io::format_full(emb.edge_length)
              << " ratio=" << io::format_full(edge_ratio(emb))
              << " upper=" << io::format_full(bounds::upper_bound(dim))
              << " strategy=" << plan.strategy << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const VerifyTolerances& tol) {
    SimplexEmbedding emb = io::load_embedding(path);
    VerificationReport r = verify(emb, tol);
    std::cout << "regularity_spread=" << io::format_full(r.regularity_spread) << "\n"
              << "barycenter_norm=" << io::format_full(r.barycenter_norm) << "\n"
              << "containment_margin=" << io::format_full(r.containment_margin) << "\n"
              << "circumradius_error=" << io::format_full(r.circumradius_error) << "\n"
              << "pass=" << (r.pass ? "true" : "false") << "\n";
    return r.pass ? 0 : 2;
}

int cmd_bounds(std::size_t from, std::size_t to, const CommonOpts& opts) {
    const OrderRegistry registry;
    std::string body;
    const bool csv = opts.format == "csv";
    if (csv) body = io::report_csv_header() + "\n";
    io::json rows = io::json::array();
    for (std::size_t n = from; n <= to; ++n) {
        const bounds::BoundReport r = bounds::bound_report(n, registry);
        if (csv)
            body += io::report_to_csv_row(r) + "\n";
        else
            rows.push_back(io::report_to_json(r));
    }
    if (!csv) body = rows.dump(2) + "\n";
    std::cout << "ratio_floor=" << io::format_full(bounds::ratio_floor())
              << "  # (sqrt(336)-4-sqrt(2))/sqrt(664)\n";
    if (!opts.out_path.empty()) {
        if (!write_file(opts.out_path, body)) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            return 1;
        }
    } else {
        std::cout << body;
    }
    return 0;
}

int cmd_hadamard(int order, const CommonOpts& opts) {
    const OrderRegistry registry;
    const auto recipe = registry.best_recipe(order);
    if (!recipe) {
        std::cerr << "order " << order << " unavailable: no recipe in the registry\n";
        return 3;
    }
    const HadamardMatrix h = registry.generate(order);
    std::cout << "order=" << order << " recipe=" << recipe->to_string() << "\n";
    const std::string payload = opts.format == "text"
                                    ? io::hadamard_to_text(h)
                                    : io::hadamard_to_json(h, recipe->to_string()).dump(2) + "\n";
    if (!opts.out_path.empty()) {
        if (!write_file(opts.out_path, payload)) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            return 1;
        }
    } else {
        std::cout << payload;
    }
    return 0;
}

int cmd_sweep(std::size_t from, std::size_t to, const CommonOpts& opts) {
    const OrderRegistry registry;
    Planner planner(registry, planner_config(opts));
    const std::vector<SweepRow> rows = planner.sweep(from, to);
    std::string body;
    if (opts.format == "json") {
        io::json arr = io::json::array();
        for (const SweepRow& r : rows) arr.push_back(io::sweep_row_to_json(r));
        body = arr.dump(2) + "\n";
    } else {
        body = io::sweep_csv_header() + "\n";
        for (const SweepRow& r : rows) body += io::sweep_row_to_csv(r) + "\n";
    }
    if (!opts.out_path.empty()) {
        if (!write_file(opts.out_path, body)) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            return 1;
        }
    } else {
        std::cout << body;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Large origin-centered regular simplices in the unit cube"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--seed", opts.seed,
                   "Seed for randomized extensions (default 20110114, or SIMCUBE_SEED)");

    auto* construct = app.add_subcommand("construct", "Build a simplex for one dimension");
    std::size_t dim = 1;
    std::string strategy = "auto";
    construct->add_option("--dim", dim, "Target dimension n")->required();
    construct->add_option("--strategy", strategy, "auto|hadamard|fourier|reduce|double")
        ->check(CLI::IsMember({"auto", "hadamard", "fourier", "reduce", "double"}));
    construct->add_option("--pivot", opts.pivot, "heuristic|exhaustive")
        ->check(CLI::IsMember({"heuristic", "exhaustive"}));
    construct->add_option("--exhaustive-limit", opts.exhaustive_limit,
                          "Largest matrix size scanned exhaustively (default 128)");
    construct->add_flag("--phase-grid", opts.phase_grid, "Per-column phase grid search");
    construct->add_option("--format", opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    construct->add_option("--out", opts.out_path, "Output file path");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a stored simplex embedding");
    std::string input_path;
    VerifyTolerances tol;
    verify_cmd->add_option("--input", input_path, "Embedding file (JSON or CSV)")->required();
    verify_cmd->add_option("--tol-regularity", tol.regularity, "Relative edge tolerance");
    verify_cmd->add_option("--tol-contain", tol.containment, "Containment tolerance");
    verify_cmd->add_option("--tol-barycenter", tol.barycenter, "Barycenter tolerance");
    verify_cmd->add_option("--tol-circumradius", tol.circumradius, "Circumradius tolerance");

    auto* bounds_cmd = app.add_subcommand("bounds", "Print bound reports");
    std::size_t bdim = 0, bfrom = 0, bto = 0;
    bounds_cmd->add_option("--dim", bdim, "Single dimension");
    bounds_cmd->add_option("--from", bfrom, "Range start");
    bounds_cmd->add_option("--to", bto, "Range end");
    bounds_cmd->add_option("--format", opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bounds_cmd->add_option("--out", opts.out_path, "Output file path");

    auto* hadamard_cmd = app.add_subcommand("hadamard", "Dump a Hadamard matrix");
    int order = 0;
    hadamard_cmd->add_option("--order", order, "Matrix order")->required();
    hadamard_cmd->add_option("--format", opts.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    hadamard_cmd->add_option("--out", opts.out_path, "Output file path");

    auto* sweep_cmd = app.add_subcommand("sweep", "Construct a range of dimensions");
    std::size_t sfrom = 1, sto = 1;
    sweep_cmd->add_option("--from", sfrom, "Range start")->required();
    sweep_cmd->add_option("--to", sto, "Range end")->required();
    sweep_cmd->add_option("--pivot", opts.pivot, "heuristic|exhaustive")
        ->check(CLI::IsMember({"heuristic", "exhaustive"}));
    sweep_cmd->add_option("--exhaustive-limit", opts.exhaustive_limit,
                          "Largest matrix size scanned exhaustively (default 128)");
    sweep_cmd->add_option("--format", opts.format, "csv|json")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--out", opts.out_path, "Output file path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(dim, strategy, opts);
        if (verify_cmd->parsed()) return cmd_verify(input_path, tol);
        if (bounds_cmd->parsed()) {
            if (bdim > 0) return cmd_bounds(bdim, bdim, opts);
            if (bfrom >= 1 && bto >= bfrom) return cmd_bounds(bfrom, bto, opts);
            std::cerr << "bounds: give --dim or --from/--to\n";
            return 1;
        }
        if (hadamard_cmd->parsed()) return cmd_hadamard(order, opts);
        if (sweep_cmd->parsed()) return cmd_sweep(sfrom, sto, opts);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_order_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
