#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qaut/graph.hpp"
#include "qaut/symmetry.hpp"

namespace qaut {

using Rat = mpq_class;

/// Dense matrix over exact rationals. No rounding anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    static RationalMatrix identity(int n);
    static RationalMatrix ones(int rows, int cols);
    static RationalMatrix adjacency(const Graph& g);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Entrywise product. Shapes must agree.
RationalMatrix hadamard_product(const RationalMatrix& f, const RationalMatrix& g);

/// The 0/1 orbital basis matrix T_s with [T_s]_{ij} = 1 iff (i,j) in O^s.
struct OrbitalBasisMatrix {
    int s = 0;
    int n = 0;
    std::vector<std::uint8_t> entries;  // n*n

    bool at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
    RationalMatrix to_rational() const;
};

OrbitalBasisMatrix basis_matrix(const OrbitalStructure& orb, int s);

/// The r x r matrix beta_{s1,s2} = |O_0^{s1} ∩ O_b^{s2}| over nontrivial
/// labels, with base pair (0, b), b the minimal neighbor of 0.
struct GammaMatrix {
    int r = 0;
    std::pair<int, int> base_pair{0, 1};
    std::vector<std::vector<std::int64_t>> beta;  // indices 0..r-1 for labels 1..r

    std::int64_t at(int s1, int s2) const { return beta[s1 - 1][s2 - 1]; }
    bool symmetric() const;
};

GammaMatrix gamma_matrix(const OrbitalStructure& orb);

/// Minimal polynomial of d_X over Q, monic, found by exact Krylov iteration
/// on I, d, d^2, ... with rational Gaussian elimination. Circulant graphs use
/// the first-row shortcut (powers of a circulant matrix are circulant).
struct MinimalPolynomial {
    int degree = 0;
    std::vector<Rat> coefficients;  // c_0..c_degree, c_degree = 1
};

MinimalPolynomial minimal_polynomial(const Graph& g);
int minimal_polynomial_degree(const Graph& g);

/// Evaluate a polynomial at the adjacency matrix (exact).
RationalMatrix evaluate_at_adjacency(const MinimalPolynomial& poly, const Graph& g);

/// Smallest coherent algebra containing I, J, d_X: classical 2-WL
/// stabilization on pair colours initialized by {diagonal, edge, non-edge}.
/// Returns the basis of disjoint 0/1 matrices (colour classes, deterministic
/// order). `parallel` toggles the OpenMP kernel; results are identical.
std::vector<OrbitalBasisMatrix> coherent_closure(const Graph& g, bool parallel = true);
std::vector<OrbitalBasisMatrix> coherent_closure_serial(const Graph& g);

/// B-clos sufficient check. Certified when the coherent closure dimension or
/// the minimal-polynomial degree reaches r+1 (each sits under C_{A(X)}(1,1)
/// which sits under T^X, so equality collapses the sandwich).
struct BClosResult {
    bool certified = false;
    std::string route;  // "minimal-polynomial", "coherent-closure" or "none"
    int minpoly_degree = 0;
    int closure_dim = 0;
    int orbital_dim = 0;  // r + 1
};

BClosResult bclos_check(const Graph& g, const OrbitalStructure& orb);

}  // namespace qaut
