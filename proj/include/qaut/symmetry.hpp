#pragma once

#include <vector>

#include "qaut/graph.hpp"
#include "qaut/residue.hpp"

namespace qaut {

/// Explicit automorphism group of a small graph. Groups in scope have at most
/// a few thousand elements, so the full element list is stored; no
/// Schreier-Sims machinery.
struct PermutationGroup {
    int degree = 0;
    std::vector<std::vector<int>> elements;  // each a permutation of [0, n-1]

    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
};

/// Orbit partition of the diagonal Aut(X)-action on ordered vertex pairs.
/// Label 0 is the diagonal; labels 1..r are the nontrivial orbitals, sorted
/// by the minimal element of their fiber O_0^s over vertex 0.
/// Convention: (i,j) in O^s  <=>  i in O_j^s, so [T_s]_{i,j} = 1.
struct OrbitalStructure {
    int n = 0;
    int r = 0;
    std::vector<int> pair_label;                   // n*n, label of (i,j) at i*n+j
    std::vector<std::vector<std::vector<int>>> fibers;  // fibers[j][s] = O_j^s sorted
    std::vector<std::int64_t> coset_reps;          // y_s, circulant path only (else empty)
    std::vector<bool> self_paired;                 // per label: O^s equals its transpose
    int base_neighbor = -1;                        // min neighbor of vertex 0 in the source graph

    int label(int i, int j) const { return pair_label[static_cast<std::size_t>(i) * n + j]; }
    const std::vector<int>& fiber(int j, int s) const { return fibers[j][s]; }
    bool in_fiber(int i, int j, int s) const { return label(i, j) == s; }
    /// |O_a^{s1} ∩ O_b^{s2}| with the single common element reported.
    std::vector<int> fiber_intersection(int a, int s1, int b, int s2) const;
};

/// Full automorphism group by backtracking over vertex images with iterated
/// neighbour-colour refinement pruning. Throws a resource-limit error when
/// n exceeds `cap` (raise the cap explicitly for larger graphs).
PermutationGroup automorphism_group(const Graph& g, int cap = 64);

bool is_vertex_transitive(const Graph& g, const PermutationGroup& aut);
bool is_vertex_transitive(const Graph& g);

/// Orbits of the stabilizer Aut_base(X) on vertices: {base} first, the rest
/// ordered by minimal element.
std::vector<std::vector<int>> stabilizer_orbits(const Graph& g, int base);

/// Orbitals from an explicit group (search path).
OrbitalStructure orbitals(const Graph& g);
OrbitalStructure orbitals(const Graph& g, const PermutationGroup& aut);

/// Orbitals of a nontrivial circulant p-graph, computed arithmetically as
/// O_i^s = i + y_s E with no group search.
OrbitalStructure circulant_orbitals(const CirculantTypeData& data);

}  // namespace qaut
