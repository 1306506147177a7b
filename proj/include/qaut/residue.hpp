#pragma once

#include <cstdint>
#include <vector>

// Exact arithmetic in Z_n and its unit group: subgroups, symbol-set
// stabilizers, coset representatives and the 2-maximality test. Everything
// here fits in 64-bit integers; no big-number arithmetic is needed.

namespace qaut {

/// A subgroup of the multiplicative group (Z_n)^*, elements sorted ascending.
struct UnitSubgroup {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> elements;  // sorted, all in [1, n-1], coprime to n

    std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
    bool contains(std::int64_t x) const;
    bool operator==(const UnitSubgroup&) const = default;
};

/// A circulant p-graph described arithmetically: prime p, symmetric symbol
/// set S, its stabilizer E = {a : aS = S}, type k = |E|, r = (p-1)/k and the
/// minimal coset representatives 1 = y_1 < y_2 < ... < y_r.
struct CirculantTypeData {
    std::int64_t p = 0;
    std::vector<std::int64_t> symbol_set;  // S, sorted
    UnitSubgroup stabilizer;               // E
    std::int64_t type_k = 0;               // |E|
    std::int64_t r = 0;                    // (p-1)/k
    std::vector<std::int64_t> coset_reps;  // y_1..y_r
};

bool is_prime(std::int64_t n);
std::int64_t euler_phi(std::int64_t k);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Full unit group (Z_n)^*. Throws std::invalid_argument for n < 2.
UnitSubgroup unit_group(std::int64_t n);

/// The unique subgroup of order k of (Z_p)^*, p prime, k | p-1.
/// Computed as the image of x -> x^((p-1)/k).
UnitSubgroup subgroup_of_order(std::int64_t p, std::int64_t k);

/// Stabilizer {a in (Z_n)^* : aS = S} of a symmetric symbol set S.
/// Throws if S is empty, contains 0, or is not closed under negation mod n.
UnitSubgroup symbol_stabilizer(const std::vector<std::int64_t>& symbols, std::int64_t n);

/// Minimal representative of each coset of E in (Z_p)^*, ascending, starting
/// with y_1 = 1. The cosets y_s*E partition [1, p-1].
std::vector<std::int64_t> coset_representatives(const UnitSubgroup& e);

/// 2-maximality test: true iff a-b = 2(c-d) mod p with a,b,c,d in E forces
/// a = +-b. E must be even (contain -1). Quadratic scan: hash the 2(c-d)
/// values, then test every (a,b) pair with a != +-b.
bool is_two_maximal(const UnitSubgroup& e, std::int64_t p);

/// Assemble the full arithmetic description of a circulant p-graph from its
/// symbol set. Throws if p is not prime.
CirculantTypeData circulant_type_data(std::int64_t p, const std::vector<std::int64_t>& symbols);

}  // namespace qaut
