#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qaut/orbital_algebra.hpp"
#include "qaut/symmetry.hpp"

namespace qaut {

/// Exact sparse vector over the basis of (C^n)^{⊗k}. Basis tuples are packed
/// little-endian in base n into a 64-bit key.
struct SparseVec {
    int n = 0;
    int arity = 0;
    std::vector<std::pair<std::uint64_t, Rat>> terms;  // sorted by key, no zeros

    static std::uint64_t pack(std::span<const int> tuple, int n);
    static std::vector<int> unpack(std::uint64_t key, int arity, int n);
    static SparseVec basis(int n, std::span<const int> tuple);
    static SparseVec basis(int n, std::initializer_list<int> tuple);

    const Rat* coefficient(std::uint64_t key) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const SparseVec& o) const = default;

    SparseVec& operator+=(const SparseVec& o);
    SparseVec operator*(const Rat& c) const;
    /// "e4 + 2e10" / "e(1,0) + ..." rendering, terms in key order.
    std::string to_string() const;
};

/// An exact-rational linear map (C^n)^{⊗k} -> (C^n)^{⊗l}, represented as an
/// immutable pipeline of generators under compose/tensor/sum/scale. Maps on
/// tensor power >= 3 are never materialized densely; evaluation pushes sparse
/// vectors through the pipeline factor by factor.
class Morphism {
public:
    Morphism() = default;

    int source_power() const;
    int target_power() const;
    int dim() const;  // base dimension n

    SparseVec apply(const SparseVec& v) const;
    SparseVec apply_basis(std::span<const int> tuple) const;
    SparseVec apply_basis(std::initializer_list<int> tuple) const;

    /// Dense matrix of shape n^l x n^k (test oracle; small n only).
    RationalMatrix to_dense() const;

    // --- generators ---
    static Morphism identity(int n, int power = 1);            // Id
    static Morphism unit(int n);                               // U : 1 -> sum e_k
    static Morphism counit(int n);                             // U* : e_i -> 1
    static Morphism multiplication(int n);                     // M : e_i⊗e_j -> δ_ij e_i
    static Morphism comultiplication(int n);                   // M* : e_i -> e_i⊗e_i
    static Morphism swap(int n);                               // S : e_i⊗e_j -> e_j⊗e_i
    static Morphism triple_diagonal(int n);                    // D = M∘(id⊗M)
    static Morphism orbital(std::shared_ptr<const OrbitalStructure> orb, int s);  // T_s

    friend Morphism compose(const Morphism& f, const Morphism& g);  // f∘g
    friend Morphism tensor(const Morphism& f, const Morphism& g);
    friend Morphism add(const Morphism& f, const Morphism& g);
    friend Morphism sub(const Morphism& f, const Morphism& g);
    friend Morphism scale(const Rat& c, const Morphism& f);
    friend Morphism adjoint(const Morphism& f);

    struct Node;  // pipeline node; defined in the implementation file

private:
    explicit Morphism(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism scale(const Rat& c, const Morphism& f);
Morphism adjoint(const Morphism& f);

/// n-fold tensor product, left associated.
Morphism tensor_chain(std::initializer_list<Morphism> factors);

}  // namespace qaut
