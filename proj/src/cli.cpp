#include "igraphs/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "igraphs/analysis.hpp"
#include "igraphs/domination.hpp"
#include "igraphs/errors.hpp"
#include "igraphs/families.hpp"
#include "igraphs/graph.hpp"
#include "igraphs/reconfig.hpp"

namespace igraphs::cli {

namespace {

struct Target {
    enum class Kind { path, cycle, bracelet, lattice, file };
    Kind kind = Kind::file;
    std::size_t param = 0;
    std::string file;
};

Target parse_target(const std::string& text) {
    static const std::map<std::string, Target::Kind> kinds = {
        {"path", Target::Kind::path},
        {"cycle", Target::Kind::cycle},
        {"bracelet", Target::Kind::bracelet},
        {"lattice", Target::Kind::lattice},
    };
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const auto it = kinds.find(text.substr(0, colon));
        if (it != kinds.end()) {
            const std::string param = text.substr(colon + 1);
            std::size_t parsed = 0, used = 0;
            try {
                parsed = std::stoull(param, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("target \"" + text + "\": parameter must be a positive integer");
            }
            if (used != param.size())
                throw std::invalid_argument("target \"" + text + "\": parameter must be a positive integer");
            return Target{it->second, parsed, ""};
        }
    }
    return Target{Target::Kind::file, 0, text};
}

Graph load_seed(const Target& target) {
    switch (target.kind) {
        case Target::Kind::path: return path(target.param);
        case Target::Kind::cycle: return cycle(target.param);
        case Target::Kind::file: {
            std::ifstream in(target.file);
            if (!in) throw std::invalid_argument("cannot open \"" + target.file + "\"");
            std::stringstream buffer;
            buffer << in.rdbuf();
            return from_json(buffer.str());
        }
        default:
            throw std::invalid_argument("target must be a seed graph (path:N, cycle:N, or a JSON file)");
    }
}

int report_usage_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
}

void relabel(Graph& g, std::vector<std::string> labels) { g.set_labels(std::move(labels)); }

std::vector<std::string> index_labels(std::size_t count) {
    std::vector<std::string> labels(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = std::to_string(i);
    return labels;
}

std::string iset_text(const Graph& seed, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ",";
        out += seed.label_or_index(v);
        first = false;
    }
    return out + "}";
}

}  // namespace

int cmd_build(const std::string& target_text, std::ostream& out, std::ostream& err) {
    try {
        const Target target = parse_target(target_text);
        const Graph seed = load_seed(target);
        const IGraph ig = build_igraph(seed);
        out << to_json(ig) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        return report_usage_error(err, e);
    }
}

int cmd_export(const std::string& target_text, const ExportOptions& options, std::ostream& out,
               std::ostream& err) {
    try {
        if (options.format != "dot" && options.format != "json")
            throw std::invalid_argument("unknown format \"" + options.format + "\" (expected dot or json)");
        const Target target = parse_target(target_text);
        Graph graph;
        std::string labels = options.labels;
        if (target.kind == Target::Kind::bracelet || target.kind == Target::Kind::lattice) {
            graph = target.kind == Target::Kind::bracelet ? bracelet(target.param)
                                                          : worn_lattice(target.param);
            if (labels == "auto") labels = "pairs";
            if (labels == "indices") relabel(graph, index_labels(graph.order()));
            else if (labels == "isets") {
                if (target.kind != Target::Kind::bracelet)
                    throw std::invalid_argument("--labels isets is not defined for lattice targets");
                const std::size_t n = 3 * target.param + 1;
                const Graph seed = cycle(n);
                const auto pair_labels = all_cycle_labels(n);
                std::vector<std::string> texts;
                texts.reserve(pair_labels.size());
                for (auto l : pair_labels) texts.push_back(iset_text(seed, label_to_iset(n, l)));
                relabel(graph, std::move(texts));
            } else if (labels != "pairs") {
                throw std::invalid_argument("unknown label mode \"" + labels + "\"");
            }
        } else {
            const Graph seed = load_seed(target);
            IGraph ig = build_igraph(seed);
            graph = std::move(ig.graph);
            if (labels == "auto" || labels == "isets") {
                // build_igraph already labels vertices with i-set member lists
            } else if (labels == "indices") {
                relabel(graph, index_labels(graph.order()));
            } else if (labels == "pairs") {
                if (target.kind != Target::Kind::cycle || target.param % 3 != 1)
                    throw std::invalid_argument("--labels pairs requires a cycle:N target with N = 1 (mod 3)");
                std::vector<std::string> texts;
                texts.reserve(ig.isets.size());
                for (const auto& s : ig.isets)
                    texts.push_back(cycle_label_text(cycle_iset_label(target.param, s)));
                relabel(graph, std::move(texts));
            } else {
                throw std::invalid_argument("unknown label mode \"" + labels + "\"");
            }
        }
        if (options.format == "dot") out << to_dot(graph);
        else out << to_json(graph) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        return report_usage_error(err, e);
    }
}

namespace {

bool prediction_agrees(PredictedClass predicted, const HamiltonReport& report) {
    switch (predicted) {
        case PredictedClass::hamiltonian: return report.status == HamiltonStatus::hamiltonian;
        case PredictedClass::traceable_only: return report.status == HamiltonStatus::traceable_only;
        case PredictedClass::neither: return report.status == HamiltonStatus::neither;
        case PredictedClass::disconnected:
            return report.status == HamiltonStatus::neither && !report.connected;
    }
    return false;
}

}  // namespace

int cmd_hamilton(const std::string& target_text, std::uint64_t budget, std::ostream& out,
                 std::ostream& err) {
    try {
        const Target target = parse_target(target_text);
        Graph graph;
        IGraph ig;
        const bool igraph_target =
            target.kind != Target::Kind::bracelet && target.kind != Target::Kind::lattice;
        if (igraph_target) {
            ig = build_igraph(load_seed(target));
            graph = ig.graph;
        } else {
            graph = target.kind == Target::Kind::bracelet ? bracelet(target.param)
                                                          : worn_lattice(target.param);
        }

        HamiltonReport report;
        const bool constructible = target.kind == Target::Kind::cycle && target.param % 6 == 1 &&
                                   target.param >= 19;
        if (constructible) {
            report = hamiltonian_cycle(graph, budget);
            if (report.status == HamiltonStatus::neither && report.connected &&
                !report.bipartite_obstruction) {
                const auto labels = construct_hamilton_path_6k1((target.param - 1) / 6);
                std::vector<int> witness;
                witness.reserve(labels.size());
                for (auto l : labels)
                    witness.push_back(ig.vertex_of(label_to_iset(target.param, l)));
                report.status = HamiltonStatus::traceable_only;
                report.witness = std::move(witness);
                report.witness_is_cycle = false;
            }
        } else {
            report = classify_hamiltonicity(graph, budget);
        }

        nlohmann::ordered_json doc;
        doc["target"] = target_text;
        const auto body = nlohmann::ordered_json::parse(to_json(report));
        for (const auto& [key, value] : body.items()) doc[key] = value;
        int code = report.status == HamiltonStatus::unknown ? exit_inconclusive : exit_ok;
        if (target.kind == Target::Kind::cycle) {
            const auto predicted = predicted_cycle_classification(target.param);
            const bool agrees = prediction_agrees(predicted, report);
            doc["predicted"] = predicted_class_name(predicted);
            doc["agrees"] = agrees;
            if (report.status != HamiltonStatus::unknown && !agrees) code = exit_failure;
        }
        out << doc.dump() << "\n";
        return code;
    } catch (const std::exception& e) {
        return report_usage_error(err, e);
    }
}

namespace {

struct VerifyRow {
    std::string family;
    std::size_t n = 0;
    std::uint64_t closed = 0;
    std::uint64_t enumerated = 0;
    std::uint64_t oracle = 0;
    std::uint64_t gf = 0;
    bool has_gf = false;
    bool isomorphic = false;
    double ms = 0.0;
    bool pass = false;
};

VerifyRow verify_one(const std::string& family, std::size_t n) {
    const auto start = std::chrono::steady_clock::now();
    VerifyRow row;
    row.family = family;
    row.n = n;
    const bool is_path = family == "path";
    const Graph seed = is_path ? path(n) : cycle(n);
    row.closed = is_path ? count_path_isets(n) : count_cycle_isets(n);
    if (!is_path) {
        const std::size_t k = n / 3;
        const std::size_t t = n % 3 == 0 ? k + 1 : k + 2;
        const std::size_t r = n % 3 == 2 ? 2 * k + 1 : 2 * k;
        row.gf = gf_cycle_coefficient(t, r);
        row.has_gf = true;
    }
    const IGraph ig = build_igraph(seed);
    row.enumerated = ig.isets.size();
    row.oracle = oracle_count_isets(seed);
    const Graph predicted = is_path ? predicted_path_igraph(n) : predicted_cycle_igraph(n);
    row.isomorphic = are_isomorphic(ig.graph, predicted).has_value();
    row.pass = row.closed == row.enumerated && row.closed == row.oracle && row.isomorphic &&
               (!row.has_gf || row.gf == row.closed);
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    try {
        if (options.paths_max < 1) throw std::invalid_argument("--paths-max must be >= 1");
        if (options.cycles_max < 3) throw std::invalid_argument("--cycles-max must be >= 3 (cycles start at 3)");
        if (!options.force && (options.paths_max > 22 || options.cycles_max > 22))
            throw std::invalid_argument("sweep guard: limits above 22 require --force");

        std::vector<VerifyRow> rows;
        for (std::size_t n = 1; n <= options.paths_max; ++n) rows.push_back(verify_one("path", n));
        for (std::size_t n = 3; n <= options.cycles_max; ++n) rows.push_back(verify_one("cycle", n));

        out << std::left << std::setw(7) << "family" << std::right << std::setw(4) << "n"
            << std::setw(9) << "closed" << std::setw(9) << "enum" << std::setw(9) << "oracle"
            << std::setw(9) << "gf" << std::setw(6) << "iso" << std::setw(9) << "ms"
            << "  status\n";
        std::size_t passed = 0;
        for (const auto& row : rows) {
            out << std::left << std::setw(7) << row.family << std::right << std::setw(4) << row.n
                << std::setw(9) << row.closed << std::setw(9) << row.enumerated << std::setw(9)
                << row.oracle << std::setw(9) << (row.has_gf ? std::to_string(row.gf) : std::string("-"))
                << std::setw(6) << (row.isomorphic ? "yes" : "NO") << std::setw(9) << std::fixed
                << std::setprecision(1) << row.ms << "  " << (row.pass ? "pass" : "FAIL") << "\n";
            if (row.pass) ++passed;
        }
        out << passed << "/" << rows.size() << " rows pass\n";

        if (!options.json_path.empty()) {
            nlohmann::ordered_json doc;
            auto arr = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json r;
                r["family"] = row.family;
                r["n"] = row.n;
                r["closed_form"] = row.closed;
                r["enumerated"] = row.enumerated;
                r["oracle"] = row.oracle;
                if (row.has_gf) r["gf"] = row.gf;
                r["isomorphic"] = row.isomorphic;
                r["pass"] = row.pass;
                arr.push_back(std::move(r));
            }
            doc["rows"] = std::move(arr);
            doc["summary"] = {{"total", rows.size()}, {"passed", passed}, {"failed", rows.size() - passed}};
            doc["pass"] = passed == rows.size();
            if (options.json_path == "-") {
                out << doc.dump() << "\n";
            } else {
                std::ofstream file(options.json_path);
                if (!file) throw std::invalid_argument("cannot write \"" + options.json_path + "\"");
                file << doc.dump() << "\n";
            }
        }
        return passed == rows.size() ? exit_ok : exit_failure;
    } catch (const std::invalid_argument& e) {
        return report_usage_error(err, e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"i-graph toolkit: token-slide reconfiguration graphs of minimum independent dominating sets"};
    app.require_subcommand(1);

    std::string build_target;
    auto* build = app.add_subcommand("build", "Construct the i-graph of a seed graph; JSON on stdout");
    build->add_option("target", build_target, "path:N, cycle:N, or a graph JSON file")->required();

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Sweep paths and cycles: counts vs oracle, built vs predicted i-graph");
    verify->add_option("--paths-max", vopts.paths_max, "Largest path length (default 21)");
    verify->add_option("--cycles-max", vopts.cycles_max, "Largest cycle length (default 22)");
    verify->add_flag("--force", vopts.force, "Lift the n <= 22 sweep guard");
    verify->add_option("--json", vopts.json_path, "Write the report as JSON to a file, or - for stdout");

    std::string hamilton_target;
    std::uint64_t budget = 100000000ULL;
    auto* hamilton = app.add_subcommand("hamilton", "Hamiltonicity classification of an i-graph");
    hamilton->add_option("target", hamilton_target, "path:N, cycle:N, bracelet:K, lattice:K, or a JSON file")
        ->required();
    hamilton->add_option("--budget", budget, "Search step budget (default 1e8)");

    std::string export_target;
    ExportOptions eopts;
    auto* exporter = app.add_subcommand("export", "Emit a graph as DOT or JSON");
    exporter->add_option("target", export_target, "path:N, cycle:N, bracelet:K, lattice:K, or a JSON file")
        ->required();
    exporter->add_option("--format", eopts.format, "dot or json (default dot)");
    exporter->add_option("--labels", eopts.labels, "auto, isets, pairs, or indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (build->parsed()) return cmd_build(build_target, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(vopts, std::cout, std::cerr);
    if (hamilton->parsed()) return cmd_hamilton(hamilton_target, budget, std::cout, std::cerr);
    if (exporter->parsed()) return cmd_export(export_target, eopts, std::cout, std::cerr);
    return exit_usage;
}

}  // namespace igraphs::cli
