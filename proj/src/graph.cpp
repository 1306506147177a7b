#include "qaut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qaut {

Graph::Graph(int n) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be positive");
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("add_edge: endpoint out of range");
    if (i == j) throw std::invalid_argument("add_edge: self-loop");
    rows_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    rows_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

int Graph::degree(int i) const {
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += __builtin_popcountll(rows_[static_cast<std::size_t>(i) * words_ + w]);
    return d;
}

std::int64_t Graph::edge_count() const {
    std::int64_t total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::vector<int> Graph::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

int Graph::min_neighbor(int i) const {
    for (int j = 0; j < n_; ++j)
        if (adjacent(i, j)) return j;
    return -1;
}

bool Graph::is_complete() const {
    return edge_count() == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
}

bool Graph::is_circulant() const {
    for (int j = 0; j < n_; ++j) {
        bool a = adjacent(0, j);
        for (int i = 1; i < n_; ++i)
            if (adjacent(i, (i + j) % n_) != a) return false;
    }
    return true;
}

std::vector<std::int64_t> Graph::symbol_set() const {
    std::vector<std::int64_t> s;
    for (int j = 1; j < n_; ++j)
        if (adjacent(0, j)) s.push_back(j);
    return s;
}

std::string CirculantSpec::to_string() const {
    std::string out = "C" + std::to_string(n) + "(";
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(jumps[i]);
    }
    out += ")";
    return out;
}

CirculantSpec make_circulant_spec(int n, std::vector<int> jumps) {
    if (n < 3) throw std::invalid_argument("circulant spec: need n >= 3");
    std::set<int> canon;
    for (int k : jumps) {
        if (k == 1) continue;  // implicit jump, paper writes it both ways
        if (k < 1 || k > n / 2)
            throw std::invalid_argument("circulant spec: jump " + std::to_string(k) +
                                        " outside [1," + std::to_string(n / 2) + "]");
        canon.insert(k);
    }
    CirculantSpec spec;
    spec.n = n;
    spec.jumps.assign(canon.begin(), canon.end());
    return spec;
}

Graph from_circulant_spec(const CirculantSpec& spec) {
    Graph g(spec.n);
    std::set<int> symbols{1, spec.n - 1};
    for (int k : spec.jumps) {
        symbols.insert(k % spec.n);
        symbols.insert((spec.n - k) % spec.n);
    }
    for (int i = 0; i < spec.n; ++i)
        for (int s : symbols) {
            int j = (i + s) % spec.n;
            if (i < j) g.add_edge(i, j);
        }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complement(const Graph& g) {
    Graph c(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) c.add_edge(i, j);
    return c;
}

Graph cartesian_product_with_edge(const Graph& g) {
    const int n = g.size();
    Graph p(2 * n);
    for (int i = 0; i < n; ++i) {
        p.add_edge(2 * i, 2 * i + 1);  // rung
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) {
                p.add_edge(2 * i, 2 * j);
                p.add_edge(2 * i + 1, 2 * j + 1);
            }
    }
    return p;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

CirculantSpec parse_circulant_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || (s[0] != 'C' && s[0] != 'c'))
        throw std::invalid_argument("circulant spec '" + text + "': expected leading 'C'");
    std::size_t pos = 1;
    std::size_t digits = 0;
    while (pos + digits < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + digits])))
        ++digits;
    if (digits == 0)
        throw std::invalid_argument("circulant spec '" + text + "': missing vertex count");
    int n = std::stoi(s.substr(pos, digits));
    pos += digits;
    std::vector<int> jumps;
    if (pos < s.size()) {
        if (s[pos] != '(' || s.back() != ')')
            throw std::invalid_argument("circulant spec '" + text + "': malformed jump list");
        std::string inner = s.substr(pos + 1, s.size() - pos - 2);
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            std::size_t used = 0;
            int k = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument("circulant spec '" + text + "': bad jump '" + tok + "'");
            jumps.push_back(k);
        }
    }
    return make_circulant_spec(n, jumps);
}

Graph parse_edge_list(const std::string& body) {
    std::stringstream ss(body);
    int n = 0;
    std::int64_t m = 0;
    if (!(ss >> n >> m)) throw std::invalid_argument("edge list: expected header 'n m'");
    if (n < 1) throw std::invalid_argument("edge list: vertex count must be positive");
    Graph g(n);
    for (std::int64_t e = 0; e < m; ++e) {
        int u, v;
        if (!(ss >> u >> v))
            throw std::invalid_argument("edge list: missing edge " + std::to_string(e + 1) +
                                        " of " + std::to_string(m));
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_adjacency(const std::string& body) {
    std::vector<std::string> lines;
    std::stringstream ss(body);
    std::string line;
    while (std::getline(ss, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    const int n = static_cast<int>(lines.size());
    if (n == 0) throw std::invalid_argument("adjacency: empty input");
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[i].size()) != n)
            throw std::invalid_argument("adjacency: row " + std::to_string(i) + " has length " +
                                        std::to_string(lines[i].size()) + ", expected " +
                                        std::to_string(n));
        for (int j = 0; j < n; ++j) {
            char c = lines[i][j];
            if (c != '0' && c != '1')
                throw std::invalid_argument("adjacency: row " + std::to_string(i) +
                                            " has a character outside {0,1}");
            if (c == '1') {
                if (i == j) throw std::invalid_argument("adjacency: loop on the diagonal");
                if (j < i && !g.adjacent(i, j))
                    throw std::invalid_argument("adjacency: matrix is not symmetric at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
                if (i < j) g.add_edge(i, j);
            } else if (j < i && g.adjacent(i, j)) {
                throw std::invalid_argument("adjacency: matrix is not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    return g;
}

}  // namespace qaut
