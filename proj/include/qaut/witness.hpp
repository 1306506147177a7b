#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qaut/morphism.hpp"
#include "qaut/symmetry.hpp"

namespace qaut {

/// Per-orbital witness record for the swap construction. For s = 0 this is
/// the identity record (everything 0). The three singleton laws
///     O_0^{t1} ∩ O_j^{t2} = {k},  O_0^{s} ∩ O_k^{t4} = {j},
///     O_k^{t5} ∩ O_j^{t3} = {0}
/// are checked on construction.
struct WitnessRecord {
    int s = 0;
    int j = 0;
    int k = 0;
    std::array<int, 5> t{0, 0, 0, 0, 0};
};

struct SwapWitness {
    std::vector<WitnessRecord> records;  // indexed by s = 0..r
};

/// First Γ entry equal to 1, scanning rows then columns (labels 1..r), using
/// vertex 1 as the second base point; absent if no entry is 1.
std::optional<std::pair<int, int>> find_nosym2_witness(const OrbitalStructure& orb);

/// Transport a singleton at (0,1) to every coset base point y_s: per s, scan
/// (t1,t2) ascending for |O_0^{t1} ∩ O_{y_s}^{t2}| = 1 and complete the
/// record with t3 = s, t4 = t2, t5 = t1. Circulant structures only.
SwapWitness extend_witness(const OrbitalStructure& orb, std::pair<int, int> singleton);

/// General search: per s, ascending scan over j in O_0^s, k in [0,n-1] and
/// t-labels in [0,r] for the three singleton laws; absent if any s fails.
std::optional<SwapWitness> find_nosymG_witness(const OrbitalStructure& orb);

/// Throws std::logic_error naming the first violated law.
void validate_witness(const OrbitalStructure& orb, const SwapWitness& w);

/// The swap candidate F = Σ_s f_s∘g_s with
///   h_s = (M⊗M)∘(id⊗T_{t4}⊗T_{t5}⊗id)
///   f_s = h_s∘(id⊗(M*∘M)⊗id)∘(T_s⊗T_{t1}⊗T_{t2}⊗T_{t3})∘(M*⊗M*)
///   g_s = (id⊗M)∘(id⊗T_s⊗id)∘(M*⊗id)
Morphism build_swap_candidate(std::shared_ptr<const OrbitalStructure> orb, const SwapWitness& w);

/// Same morphism with the composition associated exactly as displayed above
/// (no regrouping); slower to evaluate, kept as the equality oracle.
Morphism build_swap_candidate_literal(std::shared_ptr<const OrbitalStructure> orb,
                                      const SwapWitness& w);

/// Exact check F(e_i⊗e_j) = e_j⊗e_i. Full mode covers all n² pairs; sampled
/// mode covers rows i < 8 plus the diagonal. The OpenMP path aggregates
/// deterministically (failures listed in row-major order either way).
struct SwapVerification {
    bool ok = false;
    bool full = true;
    std::int64_t pairs_checked = 0;
    std::vector<std::pair<int, int>> failures;
};

SwapVerification verify_swap(const Morphism& f, int n, bool full = true, bool parallel = true);
SwapVerification verify_swap_serial(const Morphism& f, int n, bool full = true);

}  // namespace qaut
