#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qaut {

/// Finite simple graph on vertices 0..n-1, adjacency stored as bit rows so
/// neighbourhood intersections cost O(n/64).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }
    bool adjacent(int i, int j) const {
        return (rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] >>
                (j & 63)) & 1;
    }
    void add_edge(int i, int j);

    int degree(int i) const;
    std::int64_t edge_count() const;
    std::vector<int> neighbors(int i) const;
    int min_neighbor(int i) const;  // -1 if isolated

    bool is_empty_graph() const { return edge_count() == 0; }
    bool is_complete() const;

    /// d_{i,j} == d_{i+1,j+1} (mod n) for all i,j: the cyclic shift is an
    /// automorphism.
    bool is_circulant() const;
    /// For a circulant graph: the symbol set {j : 0 ~ j}.
    std::vector<std::int64_t> symbol_set() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// A circulant spec C_n(k_1,...,k_r). Jump 1 is implicit and always present.
struct CirculantSpec {
    int n = 0;
    std::vector<int> jumps;  // canonical: sorted, deduped, in [2, n/2]

    std::string to_string() const;
};

/// Canonicalize: drop an explicit leading jump 1, dedupe, sort; reject jumps
/// outside [1, floor(n/2)].
CirculantSpec make_circulant_spec(int n, std::vector<int> jumps);

Graph from_circulant_spec(const CirculantSpec& spec);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complement(const Graph& g);

/// K_2 box g with interleaved labels: copy A on 2i, copy B on 2i+1, rungs
/// (2i, 2i+1). For g = C_6 this is the Pr(C_6) labeling of the paper.
Graph cartesian_product_with_edge(const Graph& g);

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// Parse "Cn(k1,k2,...)" (case-insensitive; "Cn" and "Cn()" give the cycle).
CirculantSpec parse_circulant_string(const std::string& text);

/// Parse an edge-list file body: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& body);
/// Parse an adjacency-matrix file body: n lines of n characters in {0,1}.
Graph parse_adjacency(const std::string& body);

}  // namespace qaut
