#include "qaut/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qaut {

std::vector<int> OrbitalStructure::fiber_intersection(int a, int s1, int b, int s2) const {
    const auto& fa = fibers[a][s1];
    const auto& fb = fibers[b][s2];
    std::vector<int> out;
    std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(out));
    return out;
}

namespace {

/// Iterated neighbour-colour refinement (1-WL). Colours start from degrees;
/// each round hashes the multiset of neighbour colours. Used only as a
/// pruning invariant; completeness comes from the backtracking.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.size();
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i) color[i] = g.degree(i);
    {
        std::map<int, int> remap;
        for (int i = 0; i < n; ++i) remap.emplace(color[i], static_cast<int>(remap.size()));
        for (int i = 0; i < n; ++i) color[i] = remap[color[i]];
    }
    int rounds = 0;
    while (rounds++ < n) {
        std::map<std::vector<int>, int> remap;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig{color[i]};
            for (int j : g.neighbors(i)) sig.push_back(color[j]);
            std::sort(sig.begin() + 1, sig.end());
            auto [it, inserted] = remap.emplace(std::move(sig), static_cast<int>(remap.size()));
            next[i] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct AutSearch {
    const Graph& g;
    int n;
    std::vector<int> color;
    std::vector<int> image;
    std::vector<bool> used;
    std::vector<std::vector<int>>& out;

    AutSearch(const Graph& graph, std::vector<std::vector<int>>& sink)
        : g(graph), n(graph.size()), color(refine_colors(graph)),
          image(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), false),
          out(sink) {}

    void run(int v) {
        if (v == n) {
            out.push_back(image);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[v]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(v, u) != g.adjacent(w, image[u])) { ok = false; break; }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            run(v + 1);
            used[w] = false;
            image[v] = -1;
        }
    }
};

bool preserves_adjacency(const Graph& g, const std::vector<int>& sigma) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) != g.adjacent(sigma[i], sigma[j])) return false;
    return true;
}

}  // namespace

PermutationGroup automorphism_group(const Graph& g, int cap) {
    if (g.size() > cap)
        throw std::runtime_error("automorphism_group: graph has " + std::to_string(g.size()) +
                                 " vertices, over the cap of " + std::to_string(cap) +
                                 "; raise the cap to search anyway");
    PermutationGroup group;
    group.degree = g.size();
    AutSearch search(g, group.elements);
    search.run(0);
    for (const auto& sigma : group.elements)
        if (!preserves_adjacency(g, sigma))
            throw std::logic_error("automorphism_group: search returned a non-automorphism");
    return group;
}

bool is_vertex_transitive(const Graph& g, const PermutationGroup& aut) {
    std::vector<bool> hit(g.size(), false);
    for (const auto& sigma : aut.elements) hit[sigma[0]] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_vertex_transitive(const Graph& g) {
    return is_vertex_transitive(g, automorphism_group(g));
}

namespace {

std::vector<std::vector<int>> stabilizer_orbits_impl(const PermutationGroup& aut, int base) {
    const int n = aut.degree;
    std::vector<std::vector<int>> orbit_of(n);
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> orbits;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> orb;
        for (const auto& sigma : aut.elements) {
            if (sigma[base] != base) continue;
            if (!seen[sigma[x]]) {
                seen[sigma[x]] = true;
                orb.push_back(sigma[x]);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    // the base's singleton orbit comes first regardless of value
    auto it = std::find_if(orbits.begin(), orbits.end(),
                           [&](const auto& o) { return o.size() == 1 && o[0] == base; });
    std::rotate(orbits.begin(), it, it + 1);
    return orbits;
}

}  // namespace

std::vector<std::vector<int>> stabilizer_orbits(const Graph& g, int base) {
    auto aut = automorphism_group(g);
    if (!is_vertex_transitive(g, aut))
        throw std::runtime_error("stabilizer_orbits: graph is not vertex-transitive");
    return stabilizer_orbits_impl(aut, base);
}

namespace {

void finish_structure(OrbitalStructure& orb, const Graph* g) {
    const int n = orb.n;
    orb.fibers.assign(n, std::vector<std::vector<int>>(orb.r + 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) orb.fibers[j][orb.label(i, j)].push_back(i);
    // fibers come out sorted because i runs ascending
    orb.self_paired.assign(orb.r + 1, true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (orb.label(i, j) != orb.label(j, i)) orb.self_paired[orb.label(i, j)] = false;
    orb.base_neighbor = g ? g->min_neighbor(0) : 1;
}

}  // namespace

OrbitalStructure orbitals(const Graph& g, const PermutationGroup& aut) {
    if (!is_vertex_transitive(g, aut))
        throw std::runtime_error("orbitals: graph is not vertex-transitive");
    const int n = g.size();
    auto stab = stabilizer_orbits_impl(aut, 0);
    OrbitalStructure orb;
    orb.n = n;
    orb.r = static_cast<int>(stab.size()) - 1;
    std::vector<int> label0(n);  // vertex x -> s with x in O_0^s
    for (int s = 0; s < static_cast<int>(stab.size()); ++s)
        for (int x : stab[s]) label0[x] = s;
    orb.pair_label.assign(static_cast<std::size_t>(n) * n, -1);
    // orbit of (x,0) carries label0[x]; push around by the whole group
    for (const auto& sigma : aut.elements)
        for (int x = 0; x < n; ++x)
            orb.pair_label[static_cast<std::size_t>(sigma[x]) * n + sigma[0]] = label0[x];
    for (int v : orb.pair_label)
        if (v < 0) throw std::logic_error("orbitals: pair orbit propagation left a hole");
    finish_structure(orb, &g);
    return orb;
}

OrbitalStructure orbitals(const Graph& g) { return orbitals(g, automorphism_group(g)); }

OrbitalStructure circulant_orbitals(const CirculantTypeData& data) {
    const int p = static_cast<int>(data.p);
    if (!is_prime(data.p)) throw std::invalid_argument("circulant_orbitals: modulus is not prime");
    if (data.symbol_set.empty() || static_cast<std::int64_t>(data.symbol_set.size()) == data.p - 1)
        throw std::invalid_argument(
            "circulant_orbitals: trivial graph (empty or complete); use the search path");
    OrbitalStructure orb;
    orb.n = p;
    orb.r = static_cast<int>(data.r);
    orb.coset_reps = data.coset_reps;
    std::vector<int> label_of_diff(p, 0);  // difference (i - j) mod p -> orbital label
    for (int s = 1; s <= orb.r; ++s)
        for (std::int64_t e : data.stabilizer.elements)
            label_of_diff[data.coset_reps[s - 1] * e % p] = s;
    orb.pair_label.assign(static_cast<std::size_t>(p) * p, 0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            orb.pair_label[static_cast<std::size_t>(i) * p + j] = label_of_diff[(i - j + p) % p];
    finish_structure(orb, nullptr);
    return orb;
}

}  // namespace qaut
