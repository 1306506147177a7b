#include "qaut/orbital_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qaut {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::ones(int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = 1;
    return m;
}

RationalMatrix RationalMatrix::adjacency(const Graph& g) {
    RationalMatrix m(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) m.at(i, j) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

RationalMatrix hadamard_product(const RationalMatrix& f, const RationalMatrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw std::invalid_argument("hadamard_product: shape mismatch");
    RationalMatrix out(f.rows(), f.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) out.at(i, j) = f.at(i, j) * g.at(i, j);
    return out;
}

RationalMatrix OrbitalBasisMatrix::to_rational() const {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j)) m.at(i, j) = 1;
    return m;
}

OrbitalBasisMatrix basis_matrix(const OrbitalStructure& orb, int s) {
    if (s < 0 || s > orb.r)
        throw std::invalid_argument("basis_matrix: orbital index out of range");
    OrbitalBasisMatrix t;
    t.s = s;
    t.n = orb.n;
    t.entries.assign(static_cast<std::size_t>(orb.n) * orb.n, 0);
    for (int i = 0; i < orb.n; ++i)
        for (int j = 0; j < orb.n; ++j)
            if (orb.label(i, j) == s) t.entries[static_cast<std::size_t>(i) * orb.n + j] = 1;
    return t;
}

bool GammaMatrix::symmetric() const {
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (beta[a][b] != beta[b][a]) return false;
    return true;
}

GammaMatrix gamma_matrix(const OrbitalStructure& orb) {
    if (orb.n < 2) throw std::invalid_argument("gamma_matrix: need at least two vertices");
    GammaMatrix gm;
    gm.r = orb.r;
    const int b = orb.base_neighbor >= 0 ? orb.base_neighbor : 1;
    gm.base_pair = {0, b};
    gm.beta.assign(orb.r, std::vector<std::int64_t>(orb.r, 0));
    for (int s1 = 1; s1 <= orb.r; ++s1)
        for (int s2 = 1; s2 <= orb.r; ++s2)
            gm.beta[s1 - 1][s2 - 1] =
                static_cast<std::int64_t>(orb.fiber_intersection(0, s1, b, s2).size());
    return gm;
}

namespace {

/// Krylov span over Q: add flattened powers of d until dependence. `vecs`
/// rows are reduced to echelon form with unit pivots as they arrive; the
/// dependency coefficients of the first dependent power give the minimal
/// polynomial.
struct KrylovBasis {
    std::vector<std::vector<Rat>> rows;        // echelon rows
    std::vector<int> pivots;                   // pivot column per row
    std::vector<std::vector<Rat>> expansions;  // row i = sum expansions[i][m] * power_m

    /// Returns empty if independent (and absorbs the vector); otherwise the
    /// coefficients expressing `v` in terms of the previously added powers.
    std::vector<Rat> add(std::vector<Rat> v, int power_index) {
        std::vector<Rat> combo(static_cast<std::size_t>(power_index) + 1, Rat(0));
        combo[power_index] = 1;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Rat& c = v[pivots[k]];
            if (c == 0) continue;
            Rat factor = c;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows[k][j];
            for (std::size_t m = 0; m < expansions[k].size(); ++m)
                combo[m] -= factor * expansions[k][m];
        }
        int pivot = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { pivot = static_cast<int>(j); break; }
        if (pivot < 0) {
            // dependent: v = -sum_{m<power} combo[m] * power_m
            std::vector<Rat> out(combo.begin(), combo.end() - 1);
            for (auto& c : out) c = -c;
            return out;
        }
        Rat inv = v[pivot];
        for (auto& x : v) x /= inv;
        for (auto& c : combo) c /= inv;
        rows.push_back(std::move(v));
        pivots.push_back(pivot);
        expansions.push_back(std::move(combo));
        return {};
    }
};

std::vector<Rat> flatten_full(const RationalMatrix& m) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

MinimalPolynomial minpoly_circulant(const Graph& g) {
    // Powers of a circulant matrix are circulant, so linear dependence of the
    // full matrices is equivalent to dependence of their first rows.
    const int n = g.size();
    std::vector<std::int64_t> symbols;
    for (int j = 0; j < n; ++j)
        if (g.adjacent(0, j)) symbols.push_back(j);
    std::vector<Rat> row(n, Rat(0));
    row[0] = 1;  // d^0 = I
    KrylovBasis basis;
    MinimalPolynomial poly;
    for (int m = 0;; ++m) {
        auto combo = basis.add(row, m);
        if (!combo.empty()) {
            poly.degree = m;
            poly.coefficients = std::move(combo);
            for (auto& c : poly.coefficients) c = -c;
            poly.coefficients.push_back(Rat(1));
            return poly;
        }
        std::vector<Rat> next(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (row[i] == 0) continue;
            for (std::int64_t s : symbols) next[(i + s) % n] += row[i];
        }
        row = std::move(next);
    }
}

}  // namespace

MinimalPolynomial minimal_polynomial(const Graph& g) {
    if (g.is_circulant()) return minpoly_circulant(g);
    RationalMatrix d = RationalMatrix::adjacency(g);
    RationalMatrix power = RationalMatrix::identity(g.size());
    KrylovBasis basis;
    MinimalPolynomial poly;
    for (int m = 0;; ++m) {
        auto combo = basis.add(flatten_full(power), m);
        if (!combo.empty()) {
            poly.degree = m;
            poly.coefficients = std::move(combo);
            for (auto& c : poly.coefficients) c = -c;
            poly.coefficients.push_back(Rat(1));
            return poly;
        }
        power = power * d;
    }
}

int minimal_polynomial_degree(const Graph& g) { return minimal_polynomial(g).degree; }

RationalMatrix evaluate_at_adjacency(const MinimalPolynomial& poly, const Graph& g) {
    RationalMatrix d = RationalMatrix::adjacency(g);
    RationalMatrix acc(g.size(), g.size());
    RationalMatrix power = RationalMatrix::identity(g.size());
    for (int m = 0; m <= poly.degree; ++m) {
        if (poly.coefficients[m] != 0) {
            for (int i = 0; i < g.size(); ++i)
                for (int j = 0; j < g.size(); ++j)
                    acc.at(i, j) += poly.coefficients[m] * power.at(i, j);
        }
        if (m < poly.degree) power = power * d;
    }
    return acc;
}

namespace {

std::vector<OrbitalBasisMatrix> wl2_closure(const Graph& g, bool parallel) {
    const int n = g.size();
    std::vector<int> color(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            color[static_cast<std::size_t>(i) * n + j] = i == j ? 0 : (g.adjacent(i, j) ? 1 : 2);

    std::vector<std::vector<std::pair<int, int>>> sigs(static_cast<std::size_t>(n) * n);
    while (true) {
        // signature of (i,j): old colour + sorted multiset of (colour(i,w), colour(w,j))
        const std::int64_t cells = static_cast<std::int64_t>(n) * n;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            const int i = static_cast<int>(cell / n), j = static_cast<int>(cell % n);
            auto& sig = sigs[cell];
            sig.clear();
            sig.reserve(n);
            for (int w = 0; w < n; ++w)
                sig.emplace_back(color[static_cast<std::size_t>(i) * n + w],
                                 color[static_cast<std::size_t>(w) * n + j]);
            std::sort(sig.begin(), sig.end());
        }
        // renumber deterministically in cell order
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> remap;
        std::vector<int> next(static_cast<std::size_t>(n) * n);
        for (std::int64_t cell = 0; cell < cells; ++cell) {
            auto key = std::make_pair(color[cell], sigs[cell]);
            auto [it, inserted] = remap.emplace(std::move(key), static_cast<int>(remap.size()));
            next[cell] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<OrbitalBasisMatrix> basis(classes);
    for (int c = 0; c < classes; ++c) {
        basis[c].s = c;
        basis[c].n = n;
        basis[c].entries.assign(static_cast<std::size_t>(n) * n, 0);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            basis[color[static_cast<std::size_t>(i) * n + j]]
                .entries[static_cast<std::size_t>(i) * n + j] = 1;
    return basis;
}

}  // namespace

std::vector<OrbitalBasisMatrix> coherent_closure(const Graph& g, bool parallel) {
    return wl2_closure(g, parallel);
}

std::vector<OrbitalBasisMatrix> coherent_closure_serial(const Graph& g) {
    return wl2_closure(g, false);
}

BClosResult bclos_check(const Graph& g, const OrbitalStructure& orb) {
    BClosResult res;
    res.orbital_dim = orb.r + 1;
    res.minpoly_degree = minimal_polynomial_degree(g);
    res.closure_dim = static_cast<int>(coherent_closure(g).size());
    if (res.minpoly_degree == res.orbital_dim) {
        res.certified = true;
        res.route = "minimal-polynomial";
    } else if (res.closure_dim == res.orbital_dim) {
        res.certified = true;
        res.route = "coherent-closure";
    } else {
        res.route = "none";
    }
    return res;
}

}  // namespace qaut
