#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qaut/analysis.hpp"
#include "qaut/paper_constructions.hpp"

namespace {

using namespace qaut;

struct CommonOptions {
    std::string format = "table";
    std::string out_path;
    std::int64_t bound = -1;
    int aut_cap = 64;
    bool full_verify = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", opt.out_path, "write the report to this path instead of stdout");
}

void add_analysis_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--bound", opt.bound, "override the 6^phi(k) order bound");
    cmd->add_option("--aut-cap", opt.aut_cap, "vertex-count cap for the automorphism search");
    cmd->add_flag("--full-verify", opt.full_verify,
                  "force the full n^2-pair swap verification at any size");
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot open output path: " + opt.out_path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_circulant_spec(const std::string& s) {
    return s.size() >= 2 && (s[0] == 'C' || s[0] == 'c') && std::isdigit(static_cast<unsigned char>(s[1]));
}

/// Dispatch on syntax: Cn(...) spec, prism:Cn, or a file path (edge list vs
/// adjacency decided by content).
Graph parse_graph_input(const std::string& source, std::string& label) {
    label = source;
    if (looks_like_circulant_spec(source))
        return from_circulant_spec(parse_circulant_string(source));
    if (source.rfind("prism:", 0) == 0) {
        std::string inner = source.substr(6);
        if (!looks_like_circulant_spec(inner))
            throw std::runtime_error("prism argument must be a circulant spec, got '" + inner + "'");
        return cartesian_product_with_edge(from_circulant_spec(parse_circulant_string(inner)));
    }
    const std::string body = read_file(source);
    // adjacency rows are unbroken 0/1 strings; an edge list starts with "n m"
    const std::string first_line = body.substr(0, body.find('\n'));
    const bool adjacency = first_line.find(' ') == std::string::npos &&
                           first_line.find_first_not_of("01\r") == std::string::npos &&
                           !first_line.empty();
    try {
        if (adjacency) return parse_adjacency(body);
        return parse_edge_list(body);
    } catch (const std::exception& e) {
        throw std::runtime_error("file '" + source + "' parsed as " +
                                 (adjacency ? "adjacency matrix" : "edge list") +
                                 " failed: " + e.what());
    }
}

AnalysisOptions to_analysis_options(const CommonOptions& opt) {
    AnalysisOptions a;
    a.bound_override = opt.bound;
    a.aut_cap = opt.aut_cap;
    a.full_verify = opt.full_verify;
    return a;
}

int exit_code_for(const Verdict& v) {
    return v.kind == VerdictKind::Inconclusive ? 2 : 0;
}

std::shared_ptr<const OrbitalStructure> orbitals_for(const Graph& g, int aut_cap) {
    if (g.is_circulant() && is_prime(g.size()) && !g.is_complete() && !g.is_empty_graph())
        return std::make_shared<const OrbitalStructure>(
            circulant_orbitals(circulant_type_data(g.size(), g.symbol_set())));
    return std::make_shared<const OrbitalStructure>(orbitals(g, automorphism_group(g, aut_cap)));
}

int run_analyze(const std::string& source, const CommonOptions& opt, bool certify) {
    std::string label;
    Graph g = parse_graph_input(source, label);
    auto report = analyze(g, label, to_analysis_options(opt));
    if (certify)
        emit(opt, report.certificate.is_null() ? std::string("{}\n")
                                               : report.certificate.dump(2) + "\n");
    else
        emit(opt, opt.format == "json" ? report.to_json().dump(2) + "\n" : report.to_table());
    return exit_code_for(report.verdict);
}

int run_orbitals(const std::string& source, const CommonOptions& opt) {
    std::string label;
    Graph g = parse_graph_input(source, label);
    auto orb = orbitals_for(g, opt.aut_cap);
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < orb->n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int s = 0; s <= orb->r; ++s) row.push_back(orb->fiber(i, s));
            rows.push_back(row);
        }
        emit(opt, nlohmann::json{{"graph", label}, {"r", orb->r}, {"fibers", rows}}.dump(2) + "\n");
    } else {
        emit(opt, render_orbital_table(*orb));
    }
    return 0;
}

int run_gamma(const std::string& source, const CommonOptions& opt) {
    std::string label;
    Graph g = parse_graph_input(source, label);
    auto orb = orbitals_for(g, opt.aut_cap);
    auto gm = gamma_matrix(*orb);
    if (opt.format == "json") {
        emit(opt, nlohmann::json{{"graph", label},
                                 {"base_pair", {gm.base_pair.first, gm.base_pair.second}},
                                 {"beta", gm.beta}}
                          .dump(2) +
                      "\n");
    } else {
        emit(opt, render_gamma(gm));
    }
    return 0;
}

int run_enumerate(std::int64_t type_k, const CommonOptions& opt) {
    std::int64_t bound = opt.bound;
    if (bound < 0) {  // default to the 6^phi(k) order bound
        std::int64_t phi = euler_phi(type_k);
        bound = 1;
        for (std::int64_t i = 0; i < phi; ++i) bound *= 6;
    }
    auto rows = sweep_type(type_k, bound);
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j = {{"p", row.data.p},
                                {"E", row.data.stabilizer.elements},
                                {"r", row.data.r},
                                {"complete", row.complete}};
            if (row.singleton) {
                j["singleton"] = {row.singleton->first, row.singleton->second};
                j["intersection"] = row.intersection;
            } else {
                j["singleton"] = nullptr;
            }
            arr.push_back(j);
        }
        emit(opt, nlohmann::json{{"type", type_k}, {"bound", bound}, {"graphs", arr}}.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const auto& row : rows) {
            os << "p=" << row.data.p << " r=" << row.data.r;
            if (row.complete) {
                os << " complete";
            } else if (row.singleton) {
                os << " singleton at (" << row.singleton->first << "," << row.singleton->second
                   << ") = {";
                for (std::size_t i = 0; i < row.intersection.size(); ++i)
                    os << (i ? "," : "") << row.intersection[i];
                os << "}";
            } else {
                os << " no singleton";
            }
            os << "\n";
        }
        os << rows.size() << " graphs of type " << type_k << " up to " << bound << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int run_replay(const std::string& path, const CommonOptions& opt) {
    auto cert = nlohmann::json::parse(read_file(path));
    auto report = replay_certificate(cert, to_analysis_options(opt));
    emit(opt, opt.format == "json" ? report.to_json().dump(2) + "\n" : report.to_table());
    if (report.verdict.kind == VerdictKind::Inconclusive) return 1;  // replay must re-verify
    return 0;
}

int run_verify_paper(const CommonOptions& opt) {
    auto report = reproduce_paper_report();
    auto t13 = verify_paper_c13();
    auto t17 = verify_paper_c17();
    std::string text;
    if (opt.format == "json") {
        nlohmann::json j = report.to_json();
        j["construction_13"] = t13.to_json();
        j["construction_17"] = t17.to_json();
        text = j.dump(2) + "\n";
    } else {
        text = report.to_text() + "\n" + t13.to_text() + "\n" + t17.to_text();
    }
    emit(opt, text);
    return report.all_match() && t13.ok() && t17.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbital structure and no-quantum-symmetry certificates for vertex-transitive "
                 "graphs"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string source, cert_path;
    std::int64_t type_k = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full decision pipeline");
    analyze_cmd->add_option("graph", source, "circulant spec, prism:Cn, or file path")->required();
    add_common(analyze_cmd, opt);
    add_analysis_flags(analyze_cmd, opt);

    auto* orbitals_cmd = app.add_subcommand("orbitals", "print the orbital table");
    orbitals_cmd->add_option("graph", source)->required();
    add_common(orbitals_cmd, opt);
    orbitals_cmd->add_option("--aut-cap", opt.aut_cap, "automorphism search cap");

    auto* gamma_cmd = app.add_subcommand("gamma", "print the pair-intersection matrix");
    gamma_cmd->add_option("graph", source)->required();
    add_common(gamma_cmd, opt);
    gamma_cmd->add_option("--aut-cap", opt.aut_cap, "automorphism search cap");

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate prime graphs of a given type");
    enum_cmd->add_option("--type", type_k, "even type k")->required();
    add_common(enum_cmd, opt);
    enum_cmd->add_option("--bound", opt.bound, "upper bound on p (default 6^phi(k))");

    auto* certify_cmd = app.add_subcommand("certify", "analyze and emit a replayable certificate");
    certify_cmd->add_option("graph", source)->required();
    add_common(certify_cmd, opt);
    add_analysis_flags(certify_cmd, opt);

    auto* replay_cmd = app.add_subcommand("replay", "re-verify a saved certificate (no search)");
    replay_cmd->add_option("certificate", cert_path, "certificate JSON path")->required();
    add_common(replay_cmd, opt);
    replay_cmd->add_flag("--full-verify", opt.full_verify, "force full pair verification");

    auto* paper_cmd = app.add_subcommand("verify-paper",
                                         "regenerate and check every published computation");
    add_common(paper_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_analyze(source, opt, false);
        if (orbitals_cmd->parsed()) return run_orbitals(source, opt);
        if (gamma_cmd->parsed()) return run_gamma(source, opt);
        if (enum_cmd->parsed()) return run_enumerate(type_k, opt);
        if (certify_cmd->parsed()) return run_analyze(source, opt, true);
        if (replay_cmd->parsed()) return run_replay(cert_path, opt);
        if (paper_cmd->parsed()) return run_verify_paper(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
