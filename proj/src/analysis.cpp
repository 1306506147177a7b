#include "qaut/analysis.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "qaut/paper_constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qaut {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::NoQuantumSymmetry: return "NoQuantumSymmetry";
        case VerdictKind::HasQuantumSymmetry: return "HasQuantumSymmetry";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

nlohmann::json circulant_to_json(const CirculantTypeData& d) {
    return {{"p", d.p},
            {"symbol_set", d.symbol_set},
            {"E", d.stabilizer.elements},
            {"k", d.type_k},
            {"r", d.r},
            {"coset_reps", d.coset_reps}};
}

CirculantTypeData circulant_from_json(const nlohmann::json& j) {
    return circulant_type_data(j.at("p").get<std::int64_t>(),
                               j.at("symbol_set").get<std::vector<std::int64_t>>());
}

nlohmann::json gamma_to_json(const GammaMatrix& g) {
    return {{"base_pair", {g.base_pair.first, g.base_pair.second}}, {"beta", g.beta}};
}

nlohmann::json witness_to_json(const SwapWitness& w) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : w.records)
        records.push_back({{"s", rec.s},
                           {"j", rec.j},
                           {"k", rec.k},
                           {"t", {rec.t[0], rec.t[1], rec.t[2], rec.t[3], rec.t[4]}}});
    return {{"records", records}};
}

SwapWitness witness_from_json(const nlohmann::json& j) {
    SwapWitness w;
    for (const auto& rec : j.at("records")) {
        WitnessRecord r;
        r.s = rec.at("s").get<int>();
        r.j = rec.at("j").get<int>();
        r.k = rec.at("k").get<int>();
        auto t = rec.at("t").get<std::vector<int>>();
        if (t.size() != 5) throw std::invalid_argument("witness record: expected 5 labels");
        std::copy(t.begin(), t.end(), r.t.begin());
        w.records.push_back(r);
    }
    return w;
}

nlohmann::json verification_to_json(const SwapVerification& v) {
    nlohmann::json failures = nlohmann::json::array();
    for (auto [i, j] : v.failures) failures.push_back({i, j});
    return {{"ok", v.ok}, {"full", v.full}, {"pairs_checked", v.pairs_checked}, {"failures", failures}};
}

nlohmann::json graph_to_json(const Graph& g, const std::string& spec) {
    std::vector<std::string> rows;
    rows.reserve(g.size());
    for (int i = 0; i < g.size(); ++i) {
        std::string row(g.size(), '0');
        for (int j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) row[j] = '1';
        rows.push_back(std::move(row));
    }
    return {{"spec", spec}, {"n", g.size()}, {"adjacency", rows}};
}

Graph graph_from_json(const nlohmann::json& j) {
    auto rows = j.at("adjacency").get<std::vector<std::string>>();
    std::string body;
    for (const auto& r : rows) body += r + "\n";
    return parse_adjacency(body);
}

std::int64_t six_power_saturating(std::int64_t e) {
    std::int64_t v = 1;
    while (e-- > 0) {
        if (v > (std::int64_t{1} << 60) / 6) return std::int64_t{1} << 62;  // saturate
        v *= 6;
    }
    return v;
}

}  // namespace

nlohmann::json AnalysisReport::to_json() const {
    nlohmann::json criteria;
    criteria["triviality"] = {{"empty", empty_graph}, {"complete", complete}, {"n", n}};
    if (bound_passes)
        criteria["borne0"] = {{"bound", bound_value}, {"passes", *bound_passes}};
    if (two_maximal) criteria["two_maximal"] = {{"result", *two_maximal}};
    if (gamma) {
        criteria["nosym2"] = {{"gamma", gamma_to_json(*gamma)},
                              {"applicable", circulant_data.has_value()}};
        if (nosym2_pair)
            criteria["nosym2"]["singleton"] = {nosym2_pair->first, nosym2_pair->second};
        else
            criteria["nosym2"]["singleton"] = nullptr;
    }
    if (bclos)
        criteria["bclos"] = {{"certified", bclos->certified},
                             {"route", bclos->route},
                             {"minpoly_degree", bclos->minpoly_degree},
                             {"closure_dim", bclos->closure_dim},
                             {"orbital_dim", bclos->orbital_dim}};
    if (!bclos_route_note.empty()) criteria["bclos_note"] = bclos_route_note;
    criteria["nosymG"] = {{"searched", nosymG_searched}};
    if (witness) criteria["nosymG"]["witness"] = witness_to_json(*witness);
    if (swap_verification) criteria["swap_verification"] = verification_to_json(*swap_verification);
    if (scripted_ok) criteria["scripted"] = {{"which", scripted_which}, {"ok", *scripted_ok}};

    nlohmann::json out;
    out["graph"] = {{"spec", graph_spec}, {"n", n}, {"edges", edges}};
    if (vertex_transitive) out["graph"]["vertex_transitive"] = *vertex_transitive;
    if (aut_order) {
        out["graph"]["aut_order"] = *aut_order;
        out["graph"]["aut_order_route"] = aut_order_route;
    }
    if (circulant_data)
        out["type"] = circulant_to_json(*circulant_data);
    else
        out["type"] = nullptr;
    if (orbital_count_r >= 0) out["graph"]["orbital_count"] = orbital_count_r;
    out["criteria"] = criteria;
    out["notes"] = notes;
    out["verdict"] = {{"kind", to_string(verdict.kind)}, {"reason", verdict.reason}};
    out["certificate"] = certificate;
    return out;
}

std::string AnalysisReport::to_table() const {
    std::ostringstream os;
    os << "graph: " << graph_spec << "  (n=" << n << ", edges=" << edges << ")\n";
    if (vertex_transitive)
        os << "vertex-transitive: " << (*vertex_transitive ? "yes" : "no") << "\n";
    if (aut_order) os << "|Aut| = " << *aut_order << "  [" << aut_order_route << "]\n";
    if (circulant_data) {
        const auto& d = *circulant_data;
        os << "circulant prime p=" << d.p << "  type k=" << d.type_k << "  r=" << d.r << "\n";
        os << "E = {";
        for (std::size_t i = 0; i < d.stabilizer.elements.size(); ++i)
            os << (i ? "," : "") << d.stabilizer.elements[i];
        os << "}\n";
    }
    if (bound_passes)
        os << "order bound 6^phi(k) = " << bound_value << ": "
           << (*bound_passes ? "p exceeds it" : "not exceeded") << "\n";
    if (two_maximal) os << "2-maximal: " << (*two_maximal ? "yes" : "no") << "\n";
    if (gamma) {
        os << "Gamma (base pair (" << gamma->base_pair.first << "," << gamma->base_pair.second
           << ")):\n" << render_gamma(*gamma);
        if (!circulant_data)
            os << "(the singleton criterion applies to circulant prime graphs only)\n";
        else if (nosym2_pair)
            os << "singleton entry at (" << nosym2_pair->first << "," << nosym2_pair->second
               << ")\n";
        else
            os << "no singleton entry\n";
    }
    if (bclos)
        os << "B-clos: " << (bclos->certified ? "certified" : "inconclusive") << " via "
           << bclos->route << " (minpoly " << bclos->minpoly_degree << ", closure "
           << bclos->closure_dim << ", orbitals " << bclos->orbital_dim << ")\n";
    if (!bclos_route_note.empty()) os << "B-clos note: " << bclos_route_note << "\n";
    if (nosymG_searched)
        os << "general witness search: " << (witness ? "found" : "none found") << "\n";
    if (swap_verification)
        os << "swap verification: " << (swap_verification->ok ? "ok" : "FAILED") << " on "
           << swap_verification->pairs_checked << " pairs"
           << (swap_verification->full ? " (full)" : " (sampled)") << "\n";
    if (scripted_ok)
        os << "explicit construction (" << scripted_which << "): "
           << (*scripted_ok ? "verified" : "FAILED") << "\n";
    for (const auto& note : notes) os << "note: " << note << "\n";
    os << "verdict: " << to_string(verdict.kind) << ": " << verdict.reason << "\n";
    return os.str();
}

nlohmann::json make_certificate(const AnalysisReport& report) { return report.certificate; }

namespace {

void attach_certificate(AnalysisReport& rep, const Graph& g, const std::string& route) {
    nlohmann::json cert;
    cert["format"] = "qaut-certificate-v1";
    cert["graph"] = graph_to_json(g, rep.graph_spec);
    cert["verdict"] = to_string(rep.verdict.kind);
    cert["route"] = route;
    if (rep.circulant_data) cert["circulant"] = circulant_to_json(*rep.circulant_data);
    if (rep.nosym2_pair) cert["nosym2_pair"] = {rep.nosym2_pair->first, rep.nosym2_pair->second};
    if (rep.witness) cert["witness"] = witness_to_json(*rep.witness);
    if (rep.bclos)
        cert["bclos"] = {{"certified", rep.bclos->certified},
                         {"route", rep.bclos->route},
                         {"minpoly_degree", rep.bclos->minpoly_degree},
                         {"closure_dim", rep.bclos->closure_dim},
                         {"orbital_dim", rep.bclos->orbital_dim}};
    if (rep.swap_verification) cert["verification"] = verification_to_json(*rep.swap_verification);
    if (!rep.scripted_which.empty()) cert["scripted"] = rep.scripted_which;
    rep.certificate = std::move(cert);
}

}  // namespace

AnalysisReport analyze(const Graph& g, const std::string& spec_label,
                       const AnalysisOptions& options) {
    AnalysisReport rep;
    rep.graph_spec = spec_label.empty() ? "graph-" + std::to_string(g.size()) + "v" : spec_label;
    rep.n = g.size();
    rep.edges = g.edge_count();
    rep.empty_graph = g.is_empty_graph();
    rep.complete = g.is_complete();

    if (rep.n <= 3) {
        rep.verdict = {VerdictKind::NoQuantumSymmetry,
                       "at most 3 vertices: the quantum permutation group is classical"};
        attach_certificate(rep, g, "smallness");
        return rep;
    }
    if (rep.empty_graph || rep.complete) {
        rep.verdict = {VerdictKind::HasQuantumSymmetry,
                       "complete and empty graphs carry the full quantum permutation group"};
        return rep;
    }

    rep.circulant = g.is_circulant();
    const bool prime_circulant = rep.circulant && is_prime(rep.n);
    std::shared_ptr<const OrbitalStructure> orb;
    if (prime_circulant) {
        rep.circulant_data = circulant_type_data(rep.n, g.symbol_set());
        orb = std::make_shared<const OrbitalStructure>(circulant_orbitals(*rep.circulant_data));
        rep.vertex_transitive = true;
        rep.aut_order = rep.circulant_data->p * rep.circulant_data->type_k;
        rep.aut_order_route = "shift-and-stabilizer";
        rep.bclos_route_note =
            "circulant p-graph: the dimension identity dim C[d_X] = r+1 certifies B-clos";
    } else {
        PermutationGroup aut;
        try {
            aut = automorphism_group(g, options.aut_cap);
        } catch (const std::runtime_error& e) {
            rep.verdict = {VerdictKind::Inconclusive, std::string("automorphism search skipped: ") +
                                                          e.what()};
            return rep;
        }
        rep.aut_order = aut.order();
        rep.aut_order_route = "search";
        rep.vertex_transitive = is_vertex_transitive(g, aut);
        if (!*rep.vertex_transitive) {
            rep.verdict = {VerdictKind::Inconclusive,
                           "not vertex-transitive: the orbital criteria do not apply"};
            return rep;
        }
        orb = std::make_shared<const OrbitalStructure>(orbitals(g, aut));
    }
    rep.orbital_count_r = orb->r;
    for (int s = 0; s <= orb->r; ++s)
        if (!orb->self_paired[s])
            rep.notes.push_back("orbital " + std::to_string(s) +
                                " is not self-paired (its transpose is a different orbital)");

    if (prime_circulant) {
        const auto& d = *rep.circulant_data;
        const std::int64_t bound = options.bound_override >= 0
                                       ? options.bound_override
                                       : six_power_saturating(euler_phi(d.type_k));
        rep.bound_value = bound;
        rep.bound_passes = d.p > bound;
        if (*rep.bound_passes) {
            rep.verdict = {VerdictKind::NoQuantumSymmetry,
                           "order exceeds the 6^phi(k) bound for type-" +
                               std::to_string(d.type_k) + " circulant prime graphs"};
            attach_certificate(rep, g, "borne0");
            return rep;
        }

        if (d.p >= 5) {
            rep.two_maximal = is_two_maximal(d.stabilizer, d.p);
            if (*rep.two_maximal) {
                rep.verdict = {VerdictKind::NoQuantumSymmetry,
                               "the symbol stabilizer subgroup is 2-maximal"};
                attach_certificate(rep, g, "two-maximal");
                return rep;
            }
        }
    }

    rep.gamma = gamma_matrix(*orb);
    if (!rep.gamma->symmetric())
        rep.notes.push_back("the pair-intersection matrix is not symmetric at base pair (" +
                            std::to_string(rep.gamma->base_pair.first) + "," +
                            std::to_string(rep.gamma->base_pair.second) + ")");
    if (prime_circulant) {
        rep.nosym2_pair = find_nosym2_witness(*orb);
        if (rep.nosym2_pair) {
            rep.witness = extend_witness(*orb, *rep.nosym2_pair);
            Morphism f = build_swap_candidate(orb, *rep.witness);
            const bool full = options.full_verify || rep.n <= 100;
            rep.swap_verification = verify_swap(f, rep.n, full);
            if (rep.swap_verification->ok) {
                rep.verdict = {VerdictKind::NoQuantumSymmetry,
                               "singleton orbital intersection yields a verified swap certificate"};
                attach_certificate(rep, g, "nosym2");
                return rep;
            }
            rep.verdict = {VerdictKind::Inconclusive,
                           "swap candidate failed verification despite a singleton witness; "
                           "see the failure transcript"};
            return rep;
        }
    }

    if (rep.n <= options.general_route_cap) {
        rep.bclos = bclos_check(g, *orb);
        if (rep.bclos->certified) {
            rep.nosymG_searched = true;
            auto w = find_nosymG_witness(*orb);
            if (w) {
                rep.witness = w;
                Morphism f = build_swap_candidate(orb, *w);
                const bool full = options.full_verify || rep.n <= 100;
                rep.swap_verification = verify_swap(f, rep.n, full);
                if (rep.swap_verification->ok) {
                    rep.verdict = {VerdictKind::NoQuantumSymmetry,
                                   "general singleton-law witness yields a verified swap "
                                   "certificate"};
                    attach_certificate(rep, g, "nosymG");
                    return rep;
                }
                rep.verdict = {VerdictKind::Inconclusive,
                               "swap candidate failed verification despite a witness; see the "
                               "failure transcript"};
                return rep;
            }
        }
    } else {
        rep.bclos_route_note += (rep.bclos_route_note.empty() ? "" : "; ");
        rep.bclos_route_note += "general route skipped: n over the cap of " +
                                std::to_string(options.general_route_cap);
    }

    for (const auto& [spec, which] :
         {std::make_pair(make_circulant_spec(13, {3, 4}), std::string("c13")),
          std::make_pair(make_circulant_spec(17, {2, 4, 8}), std::string("c17"))}) {
        if (g == from_circulant_spec(spec)) {
            Transcript tr = which == "c13" ? verify_paper_c13() : verify_paper_c17();
            rep.scripted_which = which;
            rep.scripted_ok = tr.ok();
            if (tr.ok()) {
                rep.verdict = {VerdictKind::NoQuantumSymmetry,
                               "explicit swap intertwiner construction verified on all pairs"};
                attach_certificate(rep, g, "scripted-" + which);
                return rep;
            }
            rep.verdict = {VerdictKind::Inconclusive,
                           "explicit construction failed at: " + tr.first_failure()};
            return rep;
        }
    }

    rep.verdict = {VerdictKind::Inconclusive,
                   "no criterion concluded (bound, 2-maximality, singleton witnesses and the "
                   "general witness search all failed to certify)"};
    return rep;
}

AnalysisReport replay_certificate(const nlohmann::json& cert, const AnalysisOptions& options) {
    if (cert.value("format", "") != "qaut-certificate-v1")
        throw std::invalid_argument("replay: not a qaut-certificate-v1 document");
    const Graph g = graph_from_json(cert.at("graph"));
    const std::string route = cert.at("route").get<std::string>();

    AnalysisReport rep;
    rep.graph_spec = cert.at("graph").value("spec", "");
    rep.n = g.size();
    rep.edges = g.edge_count();
    rep.empty_graph = g.is_empty_graph();
    rep.complete = g.is_complete();
    rep.certificate = cert;

    auto fail = [&](const std::string& why) {
        rep.verdict = {VerdictKind::Inconclusive, "replay failed: " + why};
        return rep;
    };

    if (route == "smallness") {
        if (rep.n > 3) return fail("graph has more than 3 vertices");
        rep.verdict = {VerdictKind::NoQuantumSymmetry,
                       "at most 3 vertices: the quantum permutation group is classical"};
        return rep;
    }
    if (route == "borne0" || route == "two-maximal") {
        if (!g.is_circulant() || !is_prime(rep.n)) return fail("graph is not a circulant prime graph");
        rep.circulant_data = circulant_type_data(rep.n, g.symbol_set());
        rep.circulant = true;
        if (route == "borne0") {
            rep.bound_value = six_power_saturating(euler_phi(rep.circulant_data->type_k));
            rep.bound_passes = rep.circulant_data->p > rep.bound_value;
            if (!*rep.bound_passes) return fail("order bound does not hold");
            rep.verdict = {VerdictKind::NoQuantumSymmetry, "order bound re-verified"};
        } else {
            rep.two_maximal = is_two_maximal(rep.circulant_data->stabilizer, rep.circulant_data->p);
            if (!*rep.two_maximal) return fail("2-maximality does not hold");
            rep.verdict = {VerdictKind::NoQuantumSymmetry, "2-maximality re-verified"};
        }
        return rep;
    }
    if (route == "scripted-c13" || route == "scripted-c17") {
        Transcript tr = route == "scripted-c13" ? verify_paper_c13() : verify_paper_c17();
        rep.scripted_which = route.substr(std::string("scripted-").size());
        rep.scripted_ok = tr.ok();
        if (!tr.ok()) return fail("construction transcript failed at " + tr.first_failure());
        rep.verdict = {VerdictKind::NoQuantumSymmetry, "explicit construction re-verified"};
        return rep;
    }
    if (route == "nosym2" || route == "nosymG") {
        if (!cert.contains("witness")) return fail("certificate carries no witness");
        SwapWitness w = witness_from_json(cert.at("witness"));
        std::shared_ptr<const OrbitalStructure> orb;
        if (cert.contains("circulant")) {
            rep.circulant = true;
            rep.circulant_data = circulant_from_json(cert.at("circulant"));
            orb = std::make_shared<const OrbitalStructure>(
                circulant_orbitals(*rep.circulant_data));
        } else {
            orb = std::make_shared<const OrbitalStructure>(orbitals(g));
        }
        rep.orbital_count_r = orb->r;
        // the general route leans on the closure/minimal-polynomial check; a
        // circulant prime graph carries it by the dimension identity
        if (route == "nosymG" && !rep.circulant_data) {
            rep.bclos = bclos_check(g, *orb);
            if (!rep.bclos->certified)
                return fail("neither closure dimension nor minimal-polynomial degree reaches "
                            "the orbital count");
        }
        try {
            validate_witness(*orb, w);
        } catch (const std::logic_error& e) {
            return fail(e.what());
        }
        rep.witness = w;
        Morphism f = build_swap_candidate(orb, w);
        const bool full = options.full_verify || rep.n <= 100;
        rep.swap_verification = verify_swap(f, rep.n, full);
        if (!rep.swap_verification->ok) return fail("swap verification failed");
        rep.verdict = {VerdictKind::NoQuantumSymmetry,
                       std::string(route == "nosym2" ? "singleton" : "general") +
                           " witness re-validated and swap re-verified"};
        return rep;
    }
    return fail("unknown route '" + route + "'");
}

std::vector<CirculantTypeData> enumerate_prime_type(std::int64_t k, std::int64_t bound) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("enumerate_prime_type: type must be even and >= 2");
    std::vector<CirculantTypeData> out;
    for (std::int64_t p = k + 1; p <= bound; ++p) {
        if ((p - 1) % k != 0 || !is_prime(p)) continue;
        auto e = subgroup_of_order(p, k);
        out.push_back(circulant_type_data(p, e.elements));
    }
    return out;
}

std::vector<std::vector<std::int64_t>> enumerate_symbol_unions(std::int64_t p, std::int64_t k) {
    auto e = subgroup_of_order(p, k);
    auto reps = coset_representatives(e);
    std::vector<std::vector<std::int64_t>> cosets;
    for (std::size_t i = 1; i < reps.size(); ++i) {  // skip E itself
        std::vector<std::int64_t> c;
        for (std::int64_t g : e.elements) c.push_back(reps[i] * g % p);
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    }
    std::vector<std::vector<std::int64_t>> out;
    const std::size_t m = cosets.size();
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << m); ++mask) {  // skip full union
        std::vector<std::int64_t> s = e.elements;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) s.insert(s.end(), cosets[i].begin(), cosets[i].end());
        std::sort(s.begin(), s.end());
        if (symbol_stabilizer(s, p) == e) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<SweepRow> sweep_type_impl(std::int64_t k, std::int64_t bound, bool parallel) {
    auto entries = enumerate_prime_type(k, bound);
    std::vector<SweepRow> rows(entries.size());
    const std::int64_t count = static_cast<std::int64_t>(entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        SweepRow row;
        row.data = entries[i];
        row.complete = row.data.type_k == row.data.p - 1;
        if (!row.complete) {
            auto orb = circulant_orbitals(row.data);
            row.singleton = find_nosym2_witness(orb);
            if (row.singleton)
                row.intersection =
                    orb.fiber_intersection(0, row.singleton->first, 1, row.singleton->second);
        }
        rows[i] = std::move(row);
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> sweep_type(std::int64_t k, std::int64_t bound, bool parallel) {
    return sweep_type_impl(k, bound, parallel);
}

std::vector<SweepRow> sweep_type_serial(std::int64_t k, std::int64_t bound) {
    return sweep_type_impl(k, bound, false);
}

std::string render_orbital_table(const OrbitalStructure& orb) {
    const int cols = orb.r + 1;
    std::vector<std::vector<std::string>> cells(orb.n + 1, std::vector<std::string>(cols));
    cells[0][0] = "i";
    for (int s = 1; s <= orb.r; ++s) cells[0][s] = "O_i^" + std::to_string(s);
    for (int i = 0; i < orb.n; ++i) {
        cells[i + 1][0] = std::to_string(i);
        for (int s = 1; s <= orb.r; ++s) {
            std::string cell = "{";
            const auto& f = orb.fiber(i, s);
            for (std::size_t t = 0; t < f.size(); ++t)
                cell += (t ? "," : "") + std::to_string(f[t]);
            cells[i + 1][s] = cell + "}";
        }
    }
    std::vector<std::size_t> width(cols, 0);
    for (const auto& row : cells)
        for (int c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (int c = 0; c < cols; ++c) {
            std::string cell = row[c];
            if (c + 1 < cols) cell.resize(width[c], ' ');  // no trailing spaces
            os << (c ? " | " : "") << cell;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_gamma(const GammaMatrix& gamma) {
    std::size_t width = 1;
    for (int a = 1; a <= gamma.r; ++a)
        for (int b = 1; b <= gamma.r; ++b)
            width = std::max(width, std::to_string(gamma.at(a, b)).size());
    std::ostringstream os;
    for (int a = 1; a <= gamma.r; ++a) {
        for (int b = 1; b <= gamma.r; ++b) {
            std::string cell = std::to_string(gamma.at(a, b));
            os << (b > 1 ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace qaut
