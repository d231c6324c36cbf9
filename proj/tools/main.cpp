// Command-line front end: consistency checking, MIC diagnosis, input
// reduction, benchmark generation, and format export for influence graphs.
//
// Exit codes: 0 success (and `check` consistent), 1 `check` inconsistent,
// 2 usage/parse error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scm/diagnose.hpp"
#include "scm/gen.hpp"
#include "scm/io.hpp"
#include "scm/reduce.hpp"
#include "scm/solver.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadFlags {
    bool guess = false;
    bool no_reduce = false;
};

struct Loaded {
    scm::Instance original; // after optional input guessing
    scm::Instance working;  // after optional reduction
    scm::ReductionReport reduction;
};

Loaded load(const std::string& path, const LoadFlags& flags) {
    Loaded out;
    out.original = scm::parse_instance(read_file(path));
    if (flags.guess) out.original = scm::guess_inputs(out.original);
    if (flags.no_reduce)
        out.working = out.original;
    else
        std::tie(out.working, out.reduction) = scm::reduce_inputs(out.original);
    return out;
}

void print_witness(const scm::Instance& inst, const scm::Witness& w) {
    for (int v = 0; v < inst.vertex_count(); ++v)
        std::cout << "obs " << inst.name(v) << ' '
                  << scm::sign_char(w.vertex_signs[static_cast<size_t>(v)]) << '\n';
    for (int e = 0; e < inst.edge_count(); ++e) {
        const auto& ed = inst.edge(e);
        std::cout << "edge " << inst.name(ed.src) << ' ' << inst.name(ed.dst) << ' '
                  << scm::sign_char(w.edge_signs[static_cast<size_t>(e)]) << '\n';
    }
}

int run_check(const std::string& path, const LoadFlags& flags, bool witness,
              std::uint64_t max_decisions) {
    Loaded in = load(path, flags);
    scm::Budget budget;
    budget.max_decisions = max_decisions;
    scm::SolveResult res = scm::check_consistency(in.working, budget);
    switch (res.status) {
    case scm::Status::consistent:
        std::cout << "CONSISTENT\n";
        if (witness) {
            scm::repair_witness(in.original, in.reduction, *res.witness);
            print_witness(in.original, *res.witness);
        }
        return exit_ok;
    case scm::Status::inconsistent:
        std::cout << "INCONSISTENT\n";
        return exit_inconsistent;
    case scm::Status::budget_exceeded:
        std::cout << "UNKNOWN\n";
        std::cerr << "decision budget exceeded\n";
        return exit_budget;
    }
    return exit_usage;
}

std::string mode_name(scm::DiagnosisMode mode) {
    switch (mode) {
    case scm::DiagnosisMode::one: return "one";
    case scm::DiagnosisMode::all: return "all";
    case scm::DiagnosisMode::approx: return "approx";
    }
    return "?";
}

nlohmann::json report_json(const scm::Instance& inst, const scm::DiagnosisReport& report) {
    nlohmann::json mics = nlohmann::json::array();
    for (const auto& mic : report.mics) {
        nlohmann::json members = nlohmann::json::array();
        for (int v : mic.members) members.push_back(inst.name(v));
        mics.push_back({{"members", members}});
    }
    return {{"mode", mode_name(report.mode)},
            {"mics", mics},
            {"complete", report.complete},
            {"budget_exceeded", report.budget_exceeded},
            {"order_dependent", report.order_dependent},
            {"stats",
             {{"solver_calls", report.stats.solver_calls},
              {"candidates", report.stats.candidates},
              {"decisions", report.stats.solve.decisions},
              {"propagations", report.stats.solve.propagations},
              {"backtracks", report.stats.solve.backtracks}}}};
}

int run_diagnose(const std::string& path, const LoadFlags& flags, const std::string& mode,
                 const scm::DiagnoseOptions& opts, const std::string& dot_path,
                 const std::string& json_path) {
    Loaded in = load(path, flags);

    scm::DiagnosisReport report;
    if (mode == "one")
        report = scm::find_one_mic(in.working, opts);
    else if (mode == "approx")
        report = scm::approximate_all_mics(in.working, opts);
    else
        report = scm::find_all_mics(in.working, opts);

    for (const auto& mic : report.mics) {
        for (size_t i = 0; i < mic.members.size(); ++i)
            std::cout << (i ? " " : "") << in.working.name(mic.members[i]);
        std::cout << '\n';
    }
    if (mode == "all") std::cout << "complete: " << (report.complete ? "true" : "false") << '\n';

    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + dot_path + "'");
        out << scm::export_dot(in.original, report.mics);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + json_path + "'");
        out << report_json(in.working, report).dump(2) << '\n';
    }
    if (report.budget_exceeded) {
        std::cerr << "solver-call budget exceeded; results are partial\n";
        return exit_budget;
    }
    return exit_ok;
}

int run_reduce(const std::string& path) {
    Loaded in = load(path, {});
    std::cout << scm::write_instance(in.working);
    for (const auto& step : in.reduction.added)
        std::cout << "# added " << in.working.name(step.vertex) << ' ' << step.condition
                  << " iteration " << step.iteration << '\n';
    return exit_ok;
}

int run_generate(const scm::GenParams& params) {
    std::cout << scm::write_instance(scm::generate(params));
    return exit_ok;
}

int run_export(const std::string& path, const std::string& format) {
    LoadFlags flags;
    flags.no_reduce = true;
    Loaded in = load(path, flags);
    if (format == "asp")
        std::cout << scm::export_asp_facts(in.original);
    else
        std::cout << scm::export_dot(in.original, {});
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign consistency checking and minimal-inconsistent-core "
                 "diagnosis for influence graphs"};
    app.require_subcommand(1);

    std::string path;
    LoadFlags flags;
    bool witness = false;
    std::uint64_t decision_budget = 0;

    auto* check = app.add_subcommand("check", "Decide profile/graph consistency");
    check->add_option("instance", path, "instance file")->required();
    check->add_flag("--witness", witness, "print a consistent total labeling");
    check->add_flag("--guess-inputs", flags.guess, "declare predecessor-free vertices as inputs");
    check->add_flag("--no-reduce", flags.no_reduce, "skip input reduction");
    check->add_option("--budget", decision_budget, "max solver decisions (0 = unlimited)");

    std::string mode = "all";
    scm::DiagnoseOptions diag_opts;
    std::string dot_path;
    std::string json_path;

    auto* diagnose = app.add_subcommand("diagnose", "Enumerate minimal inconsistent cores");
    diagnose->add_option("instance", path, "instance file")->required();
    diagnose->add_option("--mode", mode, "one|all|approx (default all)")
        ->check(CLI::IsMember({"one", "all", "approx"}));
    diagnose->add_option("--max-card", diag_opts.max_cardinality,
                         "largest core cardinality searched")
        ->check(CLI::PositiveNumber);
    diagnose->add_option("--budget", diag_opts.max_solver_calls, "max restricted solver calls");
    diagnose->add_flag("--scc-precheck", diag_opts.scc_precheck,
                       "reject candidates by per-candidate SCC connectivity before solving");
    diagnose->add_option("--dot", dot_path, "write merged-core DOT graph to this file");
    diagnose->add_option("--json", json_path, "write machine-readable report to this file");
    diagnose->add_flag("--guess-inputs", flags.guess,
                       "declare predecessor-free vertices as inputs");
    diagnose->add_flag("--no-reduce", flags.no_reduce, "skip input reduction");

    auto* reduce = app.add_subcommand("reduce", "Apply input reduction and print the result");
    reduce->add_option("instance", path, "instance file")->required();

    scm::GenParams params;
    std::int64_t edge_override = -1;
    auto* generate = app.add_subcommand("generate", "Emit a random benchmark instance");
    generate->add_option("--alpha", params.alpha, "vertex count")->required();
    generate->add_option("--beta", params.beta, "average total degree (default 2.5)");
    generate->add_option("--gamma", params.gamma, "observed fraction (default 0.1)");
    generate->add_option("--seed", params.seed, "RNG seed (default 0)");
    generate->add_option("--edges", edge_override, "explicit edge count, overrides beta")
        ->check(CLI::NonNegativeNumber);

    std::string format;
    auto* exp = app.add_subcommand("export", "Convert an instance to ASP facts or DOT");
    exp->add_option("instance", path, "instance file")->required();
    exp->add_option("--format", format, "asp|dot")
        ->required()
        ->check(CLI::IsMember({"asp", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (check->parsed()) return run_check(path, flags, witness, decision_budget);
        if (diagnose->parsed())
            return run_diagnose(path, flags, mode, diag_opts, dot_path, json_path);
        if (reduce->parsed()) return run_reduce(path);
        if (generate->parsed()) {
            if (edge_override >= 0) params.edges = edge_override;
            return run_generate(params);
        }
        if (exp->parsed()) return run_export(path, format);
    } catch (const scm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const scm::ValidationError& e) {
        std::cerr << "invalid instance: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
