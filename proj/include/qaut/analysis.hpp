#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaut/graph.hpp"
#include "qaut/orbital_algebra.hpp"
#include "qaut/residue.hpp"
#include "qaut/symmetry.hpp"
#include "qaut/witness.hpp"
#include "vendor_json.hpp"

namespace qaut {

enum class VerdictKind { NoQuantumSymmetry, HasQuantumSymmetry, Inconclusive };

std::string to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string reason;
};

struct AnalysisOptions {
    std::int64_t bound_override = -1;  // replaces 6^phi(k) when >= 0
    int aut_cap = 64;
    bool full_verify = false;   // force full n^2-pair swap verification
    int general_route_cap = 256;  // skip coherent closure / general witness search above this n
};

/// Everything the decision pipeline computed, in the order it ran. The first
/// conclusive criterion decides the verdict; later stages stay empty.
struct AnalysisReport {
    std::string graph_spec;
    int n = 0;
    std::int64_t edges = 0;
    bool empty_graph = false;
    bool complete = false;

    std::optional<bool> vertex_transitive;
    std::optional<std::int64_t> aut_order;
    std::string aut_order_route;  // "search" / "shift-and-stabilizer" / "factorial"

    bool circulant = false;
    std::optional<CirculantTypeData> circulant_data;  // prime modulus only
    int orbital_count_r = -1;

    // criterion evidence
    std::optional<bool> bound_passes;  // p > 6^phi(k)
    std::int64_t bound_value = -1;
    std::optional<bool> two_maximal;
    std::optional<GammaMatrix> gamma;
    std::optional<std::pair<int, int>> nosym2_pair;
    std::optional<BClosResult> bclos;
    std::string bclos_route_note;
    bool nosymG_searched = false;
    std::optional<SwapWitness> witness;
    std::optional<SwapVerification> swap_verification;
    std::optional<bool> scripted_ok;
    std::string scripted_which;  // "c13" / "c17"

    std::vector<std::string> notes;  // diagnostics: non-self-paired orbitals, Γ asymmetry

    Verdict verdict;
    nlohmann::json certificate;  // replayable witness record, present for NoQuantumSymmetry

    nlohmann::json to_json() const;
    std::string to_table() const;
};

AnalysisReport analyze(const Graph& g, const std::string& spec_label = "",
                       const AnalysisOptions& options = {});

/// One prime -> one graph with S = E, the unique subgroup of order k.
/// Primes p with k | p-1 and k+1 <= p <= bound, ascending.
std::vector<CirculantTypeData> enumerate_prime_type(std::int64_t k, std::int64_t bound);

/// All symbol sets that are unions of E-cosets containing E, short of the
/// complete graph, whose stabilizer is exactly E.
std::vector<std::vector<std::int64_t>> enumerate_symbol_unions(std::int64_t p, std::int64_t k);

/// Row of the type sweep: the graph, its Γ singleton (if any) and the
/// intersection it certifies.
struct SweepRow {
    CirculantTypeData data;
    bool complete = false;
    std::optional<std::pair<int, int>> singleton;
    std::vector<int> intersection;  // the singleton fiber intersection, when found
};

std::vector<SweepRow> sweep_type(std::int64_t k, std::int64_t bound, bool parallel = true);
std::vector<SweepRow> sweep_type_serial(std::int64_t k, std::int64_t bound);

/// Machine-checked regeneration of the published computations; every item is
/// tagged MATCH/MISMATCH, never suppressed.
struct PaperReportItem {
    std::string section;
    std::string name;
    bool match = false;
    std::string detail;
};

struct PaperReport {
    std::vector<PaperReportItem> items;
    std::vector<std::string> annotations;

    bool all_match() const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

PaperReport reproduce_paper_report();

/// The discrepancies found in the published computations (count slips, label
/// slips, repeated table rows); also embedded in the reproduction report.
std::vector<std::string> paper_annotations();

/// Aligned-text renderers.
std::string render_orbital_table(const OrbitalStructure& orb);
std::string render_gamma(const GammaMatrix& gamma);

/// Certificate (de)serialization and replay. Replay revalidates the witness
/// laws and re-runs the swap verification; it performs no search.
nlohmann::json make_certificate(const AnalysisReport& report);
AnalysisReport replay_certificate(const nlohmann::json& certificate,
                                  const AnalysisOptions& options = {});

}  // namespace qaut
