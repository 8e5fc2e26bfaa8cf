// Command line surface: build graphs, compute invariants, run the claim
// registry, export artifacts.  Output on stdout is byte-stable for
// identical invocations; the canonical config line goes to stderr.
//
// Exit codes: 0 success, 2 ring spec parse error, 3 cap exceeded,
// 4 unknown invariant or empty claim filter.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdg/build.hpp"
#include "tdg/claims.hpp"
#include "tdg/graph.hpp"
#include "tdg/invariants.hpp"
#include "tdg/planarity.hpp"
#include "tdg/ring.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 4;

struct BuildArgs {
    std::string spec;
    unsigned n = 1;
    std::string variant = "td";
    std::string format = "dot";
    std::uint64_t cap = tdg::Limits{}.build_vertex_cap;
    std::string output;
};

tdg::Graph build_variant(const BuildArgs& args) {
    tdg::Ring ring = tdg::Ring::parse(args.spec);
    tdg::Limits lim;
    lim.build_vertex_cap = args.cap;
    if (args.variant == "td") return tdg::build_td(ring, args.n, lim);
    if (args.variant == "tdbar") return tdg::build_td_closed(ring, args.n, lim);
    return tdg::build_zdg(ring, lim);  // zdg: n is ignored
}

std::string render_graph(const tdg::Graph& g, const std::string& format) {
    if (format == "dot") return tdg::to_dot(g);
    if (format == "json") return tdg::to_json(g);
    return tdg::to_table(g);
}

void emit(const std::string& payload, const std::string& output) {
    if (output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(output, std::ios::binary);
        out << payload;
    }
}

void config_line(const std::string& text) { std::cerr << "config: " << text << "\n"; }

std::string invariant_json(const std::string& name, std::int64_t value,
                           const std::vector<std::string>& witness, std::int64_t runtime_ms) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["value"] = value;
    j["witness"] = witness;
    j["runtime_ms"] = runtime_ms;
    return j.dump() + "\n";
}

std::vector<std::string> labels_of(const tdg::Graph& g, const std::vector<std::uint32_t>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (auto v : ids) out.push_back(g.label(v));
    return out;
}

int run_invariant(const BuildArgs& args, const std::string& name) {
    tdg::Graph g = build_variant(args);
    auto start = std::chrono::steady_clock::now();
    std::int64_t value = 0;
    std::vector<std::string> witness;
    if (name == "degrees") {
        auto s = tdg::degree_sequence(g);
        value = s.max;
        std::map<std::uint32_t, std::uint32_t, std::greater<>> hist;
        for (auto d : s.per_vertex) ++hist[d];
        for (auto [deg, count] : hist)
            witness.push_back(std::to_string(count) + "x" + std::to_string(deg));
    } else if (name == "components") {
        auto comps = tdg::connected_components(g);
        value = static_cast<std::int64_t>(comps.size());
        for (const auto& c : comps) {
            if (c.complete)
                witness.push_back("K_" + std::to_string(c.vertices.size()));
            else if (c.bipartite)
                witness.push_back("K_{" + std::to_string(c.bipartite->first) + "," +
                                  std::to_string(c.bipartite->second) + "}");
            else
                witness.push_back("other(" + std::to_string(c.vertices.size()) + ")");
        }
    } else if (name == "domination") {
        auto res = tdg::domination_number(g);
        value = res.value;
        witness = labels_of(g, res.witness);
    } else if (name == "clique") {
        auto res = tdg::clique_number(g);
        value = res.value;
        witness = labels_of(g, res.witness);
    } else if (name == "independence") {
        auto res = tdg::independence_number(g);
        value = res.value;
        witness = labels_of(g, res.witness);
    } else if (name == "clique-loop") {
        auto res = tdg::clique_loop_number(g);
        value = res.value;
        witness = labels_of(g, res.witness);
    } else if (name == "diameter") {
        auto d = tdg::diameter(g);
        value = d ? static_cast<std::int64_t>(*d) : -1;  // -1 = infinite
    } else if (name == "girth") {
        auto d = tdg::girth(g);
        value = d ? static_cast<std::int64_t>(*d) : -1;
    } else if (name == "planar") {
        auto res = tdg::is_planar(g);
        value = res.planar ? 1 : 0;
        if (!res.planar) {
            witness.push_back(res.kind == tdg::KuratowskiKind::k5 ? "K5" : "K33");
            for (auto [u, v] : res.kuratowski_edges)
                witness.push_back(g.label(u) + "--" + g.label(v));
        }
    } else {
        std::cerr << "error: unknown invariant '" << name << "'\n";
        return kExitUsage;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << invariant_json(name, value, witness, ms);
    return 0;
}

std::string report_table_line(const tdg::CheckReport& r) {
    std::string status = tdg::status_name(r.status);
    if (r.status == tdg::CheckStatus::refuted && r.erratum_candidate) status = "refuted-expected";
    std::string line = r.claim + " | " + r.params + " | " + status;
    if (!r.observed.empty()) line += " | observed " + r.observed + " | expected " + r.expected;
    if (!r.reason.empty()) line += " | " + r.reason;
    return line;
}

int run_verify(const std::string& filter, const std::string& budget_name,
               const std::string& format) {
    if (tdg::count_matching_claims(filter) == 0) {
        std::cerr << "error: no claim matches filter '" << filter << "'\n";
        return kExitUsage;
    }
    tdg::Budget budget;
    budget.full = budget_name == "full";
    auto reports = tdg::run_claims(filter, budget);
    auto summary = tdg::summarize(reports);
    if (format == "table") {
        for (const auto& r : reports) std::cout << report_table_line(r) << "\n";
        std::cout << "summary: confirmed=" << summary.confirmed
                  << " refuted-expected=" << summary.refuted_expected
                  << " refuted-unexpected=" << summary.refuted_unexpected
                  << " skipped=" << summary.skipped << "\n";
    } else {
        nlohmann::ordered_json cfg;
        cfg["config"]["filter"] = filter;
        cfg["config"]["budget"] = budget.full ? "full" : "default";
        std::cout << cfg.dump() << "\n";
        for (const auto& r : reports) std::cout << tdg::report_json_line(r) << "\n";
        std::cout << tdg::summary_json_line(summary) << "\n";
    }
    return summary.refuted_unexpected == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total dot product graphs over finite commutative rings"};
    app.require_subcommand(1);

    BuildArgs args;
    std::string invariant_name;
    std::string filter = "*";
    std::string filter_flag;
    std::string budget = "default";
    std::string verify_format = "jsonl";

    auto add_graph_options = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("spec", args.spec, "ring spec, e.g. Z6 or Z2xGF(4)")->required();
        cmd->add_option("n", args.n, "number of coordinates")->required();
        cmd->add_option("variant", args.variant, "graph variant")
            ->check(CLI::IsMember({"td", "tdbar", "zdg"}))
            ->required();
        if (with_format)
            cmd->add_option("--format", args.format, "output format")
                ->check(CLI::IsMember({"dot", "json", "table"}));
        cmd->add_option("--cap", args.cap, "vertex cap override");
    };

    auto* build = app.add_subcommand("build", "construct a graph and print it");
    add_graph_options(build, true);
    build->add_option("-o,--output", args.output, "write to file instead of stdout");

    auto* exp = app.add_subcommand("export", "construct a graph and write it to a file");
    add_graph_options(exp, true);
    exp->add_option("-o,--output", args.output, "output file")->required();

    auto* inv = app.add_subcommand("invariant", "compute one graph invariant");
    add_graph_options(inv, false);
    inv->add_option("name", invariant_name,
                    "degrees|components|domination|clique|independence|clique-loop|diameter|girth|planar")
        ->required();

    auto* verify = app.add_subcommand("verify", "run the claim registry");
    verify->add_option("pattern", filter, "glob over claim ids (default '*')");
    verify->add_option("--filter", filter_flag, "glob over claim ids");
    verify->add_option("--budget", budget, "default|full")
        ->check(CLI::IsMember({"default", "full"}));
    verify->add_option("--format", verify_format, "jsonl|table")
        ->check(CLI::IsMember({"jsonl", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed() || exp->parsed()) {
            config_line("cmd=" + std::string(build->parsed() ? "build" : "export") +
                        " spec=" + args.spec + " n=" + std::to_string(args.n) +
                        " variant=" + args.variant + " format=" + args.format +
                        " cap=" + std::to_string(args.cap));
            emit(render_graph(build_variant(args), args.format), args.output);
            return 0;
        }
        if (inv->parsed()) {
            config_line("cmd=invariant spec=" + args.spec + " n=" + std::to_string(args.n) +
                        " variant=" + args.variant + " invariant=" + invariant_name +
                        " cap=" + std::to_string(args.cap));
            return run_invariant(args, invariant_name);
        }
        if (!filter_flag.empty()) filter = filter_flag;
        config_line("cmd=verify filter=" + filter + " budget=" + budget +
                    " format=" + verify_format);
        return run_verify(filter, budget, verify_format);
    } catch (const tdg::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const tdg::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
