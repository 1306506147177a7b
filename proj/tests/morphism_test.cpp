#include <memory>
#include <random>

#include "doctest.h"
#include "qaut/graph.hpp"
#include "qaut/morphism.hpp"
#include "qaut/symmetry.hpp"

using namespace qaut;

namespace {

std::shared_ptr<const OrbitalStructure> orb_of(const Graph& g) {
    return std::make_shared<const OrbitalStructure>(orbitals(g));
}

std::shared_ptr<const OrbitalStructure> c13_orbitals() {
    static auto orb = std::make_shared<const OrbitalStructure>(
        circulant_orbitals(circulant_type_data(13, {1, 3, 4, 9, 10, 12})));
    return orb;
}

Rat frac(int num, int den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

SparseVec ones(int n, std::initializer_list<int> idxs) {
    SparseVec v;
    v.n = n;
    v.arity = 1;
    for (int i : idxs) v.terms.emplace_back(static_cast<std::uint64_t>(i), Rat(1));
    return v;
}

// --------- independent dense oracle for pipelines ----------

struct DenseOracle {
    // matrices indexed [row][col] over packed little-endian tuples
    static RationalMatrix mul(const RationalMatrix& a, const RationalMatrix& b) { return a * b; }

    static RationalMatrix kron_low_first(const RationalMatrix& f, const RationalMatrix& g) {
        // tensor(f, g) puts f on the low tuple positions
        RationalMatrix out(f.rows() * g.rows(), f.cols() * g.cols());
        for (int gr = 0; gr < g.rows(); ++gr)
            for (int gc = 0; gc < g.cols(); ++gc)
                for (int fr = 0; fr < f.rows(); ++fr)
                    for (int fc = 0; fc < f.cols(); ++fc)
                        out.at(fr + gr * f.rows(), fc + gc * f.cols()) =
                            f.at(fr, fc) * g.at(gr, gc);
        return out;
    }
};

/// A pipeline built in parallel as a Morphism and as dense matrices through
/// an independent recursion. Used by the lazy-vs-dense equivalence test.
struct Pipe {
    Morphism m;
    RationalMatrix dense;
    int in, out;
};

Pipe leaf(const Morphism& m) { return {m, m.to_dense(), m.source_power(), m.target_power()}; }

Pipe make_random_pipe(int n, const std::shared_ptr<const OrbitalStructure>& orb, std::mt19937& rng,
                      int depth);

Pipe random_leaf(int n, const std::shared_ptr<const OrbitalStructure>& orb, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 6);
    switch (pick(rng)) {
        case 0: return leaf(Morphism::unit(n));
        case 1: return leaf(Morphism::counit(n));
        case 2: return leaf(Morphism::multiplication(n));
        case 3: return leaf(Morphism::comultiplication(n));
        case 4: return leaf(Morphism::swap(n));
        case 5: return leaf(Morphism::identity(n));
        default: {
            std::uniform_int_distribution<int> s(0, orb->r);
            return leaf(Morphism::orbital(orb, s(rng)));
        }
    }
}

Pipe make_random_pipe(int n, const std::shared_ptr<const OrbitalStructure>& orb, std::mt19937& rng,
                      int depth) {
    if (depth == 0) return random_leaf(n, orb, rng);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Pipe a = make_random_pipe(n, orb, rng, depth - 1);
        Pipe b = make_random_pipe(n, orb, rng, depth - 1);
        switch (pick(rng)) {
            case 0:  // compose, if shapes allow
                if (a.in == b.out && a.in + b.in <= 3)
                    return {compose(a.m, b.m), DenseOracle::mul(a.dense, b.dense), b.in, a.out};
                break;
            case 1:
                if (a.in + b.in <= 3 && a.out + b.out <= 3)
                    return {tensor(a.m, b.m), DenseOracle::kron_low_first(a.dense, b.dense),
                            a.in + b.in, a.out + b.out};
                break;
            case 2:
                if (a.in == b.in && a.out == b.out)
                    return {add(a.m, b.m), a.dense + b.dense, a.in, a.out};
                break;
            default: {
                std::uniform_int_distribution<int> num(-3, 3);
                Rat c = frac(num(rng), 2);
                RationalMatrix scaled(a.dense.rows(), a.dense.cols());
                for (int r = 0; r < a.dense.rows(); ++r)
                    for (int cc = 0; cc < a.dense.cols(); ++cc)
                        scaled.at(r, cc) = a.dense.at(r, cc) * c;
                return {scale(c, a.m), scaled, a.in, a.out};
            }
        }
    }
    return random_leaf(n, orb, rng);
}

}  // namespace

TEST_CASE("generator actions") {
    const int n = 5;
    auto m = Morphism::multiplication(n);
    auto ms = Morphism::comultiplication(n);
    auto u = Morphism::unit(n);
    auto us = Morphism::counit(n);
    auto d = Morphism::triple_diagonal(n);

    CHECK(compose(m, ms).to_dense() == Morphism::identity(n).to_dense());

    // U*∘U is the scalar n
    auto scalar = compose(us, u);
    SparseVec empty_tuple;
    empty_tuple.n = n;
    empty_tuple.arity = 0;
    empty_tuple.terms.emplace_back(0, Rat(1));
    auto out = scalar.apply(empty_tuple);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].second == n);

    CHECK(d.apply_basis({1, 1, 1}) == SparseVec::basis(n, {1}));
    CHECK(d.apply_basis({1, 1, 2}).is_zero());

    auto s = Morphism::swap(n);
    CHECK(compose(s, s).to_dense() == Morphism::identity(n, 2).to_dense());
    CHECK(s.apply_basis({2, 4}) == SparseVec::basis(n, {4, 2}));

    // M*∘M pins the two legs together
    auto pin = compose(ms, m);
    CHECK(pin.apply_basis({3, 3}) == SparseVec::basis(n, {3, 3}));
    CHECK(pin.apply_basis({3, 4}).is_zero());
}

TEST_CASE("shape errors") {
    const int n = 4;
    CHECK_THROWS_AS(compose(Morphism::multiplication(n), Morphism::multiplication(n)),
                    std::invalid_argument);
    CHECK_THROWS_AS(add(Morphism::multiplication(n), Morphism::comultiplication(n)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Morphism::multiplication(4).apply_basis({1}), std::invalid_argument);
}

TEST_CASE("adjoint") {
    const int n = 4;
    CHECK(adjoint(Morphism::multiplication(n)).to_dense() ==
          Morphism::comultiplication(n).to_dense());
    CHECK(adjoint(Morphism::multiplication(n)).to_dense() ==
          Morphism::multiplication(n).to_dense().transpose());
    CHECK(adjoint(Morphism::swap(n)).to_dense() == Morphism::swap(n).to_dense());

    auto orb = orb_of(from_circulant_spec(make_circulant_spec(6, {2})));
    auto t1 = Morphism::orbital(orb, 1);
    CHECK(adjoint(t1).to_dense() == t1.to_dense().transpose());
}

TEST_CASE("category laws and lazy-vs-dense equivalence on random pipelines, n <= 7") {
    std::mt19937 rng(2024);
    for (int n = 3; n <= 7; ++n) {
        auto g = n == 6 ? from_circulant_spec(make_circulant_spec(6, {2}))
                        : from_circulant_spec(make_circulant_spec(n, {}));
        auto orb = orb_of(g);
        for (int trial = 0; trial < 15; ++trial) {
            Pipe a = make_random_pipe(n, orb, rng, 2);
            // lazy evaluation equals the independently materialized dense matrix
            CHECK(a.m.to_dense() == a.dense);
            // adjoint transposes the dense representation
            CHECK(adjoint(a.m).to_dense() == a.dense.transpose());
            // adjoint twice is the identity on representations
            CHECK(adjoint(adjoint(a.m)).to_dense() == a.dense);
        }
        // identity neutral, contravariance of the adjoint
        for (int trial = 0; trial < 8; ++trial) {
            Pipe a = make_random_pipe(n, orb, rng, 1);
            Morphism idin = Morphism::identity(n, a.in);
            Morphism idout = Morphism::identity(n, a.out);
            CHECK(compose(a.m, idin).to_dense() == a.dense);
            CHECK(compose(idout, a.m).to_dense() == a.dense);
        }
        for (int trial = 0; trial < 8; ++trial) {
            Pipe a = make_random_pipe(n, orb, rng, 0);
            Pipe b = make_random_pipe(n, orb, rng, 0);
            if (a.in != b.out) continue;
            auto fg = compose(a.m, b.m);
            CHECK(adjoint(fg).to_dense() == compose(adjoint(b.m), adjoint(a.m)).to_dense());
        }
    }
    auto orb = orb_of(from_circulant_spec(make_circulant_spec(6, {2})));
    const int n = 6;
    // composition is associative
    for (int trial = 0; trial < 20; ++trial) {
        Pipe a = make_random_pipe(n, orb, rng, 0);
        Pipe b = make_random_pipe(n, orb, rng, 0);
        Pipe c = make_random_pipe(n, orb, rng, 0);
        if (a.in != b.out || b.in != c.out) continue;
        CHECK(compose(compose(a.m, b.m), c.m).to_dense() ==
              compose(a.m, compose(b.m, c.m)).to_dense());
    }
    // tensor bifunctoriality: (f1⊗g1)∘(f2⊗g2) = (f1∘f2)⊗(g1∘g2)
    auto t1 = Morphism::orbital(orb, 1);
    auto m = Morphism::multiplication(n);
    auto ms = Morphism::comultiplication(n);
    CHECK(compose(tensor(m, t1), tensor(ms, t1)).to_dense() ==
          tensor(compose(m, ms), compose(t1, t1)).to_dense());
    CHECK(compose(tensor(t1, m), tensor(t1, ms)).to_dense() ==
          tensor(compose(t1, t1), compose(m, ms)).to_dense());
}

TEST_CASE("orbital morphisms reproduce printed expansions") {
    auto orb = c13_orbitals();
    const int n = 13;
    auto t1 = Morphism::orbital(orb, 1);
    auto t2 = Morphism::orbital(orb, 2);

    SparseVec expected;
    expected.n = n;
    expected.arity = 1;
    for (auto [i, c] : std::initializer_list<std::pair<int, int>>{
             {0, 2}, {1, 2}, {2, 2}, {3, 1}, {5, 1}, {6, 1}, {9, 1}, {10, 1}, {12, 1}})
        expected.terms.emplace_back(i, Rat(c));
    CHECK(t2.apply(ones(n, {7, 8})) == expected);

    auto h1 = compose(Morphism::multiplication(n), tensor(t1, t1));
    CHECK(h1.apply_basis({0, 1}) == ones(n, {4, 10}));
}

TEST_CASE("orbital morphisms commute with every automorphism") {
    for (const Graph& g :
         {from_circulant_spec(make_circulant_spec(13, {3, 4})),
          cartesian_product_with_edge(from_circulant_spec(make_circulant_spec(6, {})))}) {
        auto aut = automorphism_group(g);
        auto orb = std::make_shared<const OrbitalStructure>(orbitals(g, aut));
        for (int s = 0; s <= orb->r; ++s) {
            auto dense = Morphism::orbital(orb, s).to_dense();
            for (const auto& sigma : aut.elements)
                for (int i = 0; i < g.size(); ++i)
                    for (int j = 0; j < g.size(); ++j)
                        CHECK(dense.at(i, j) == dense.at(sigma[i], sigma[j]));
        }
    }
}

TEST_CASE("hadamard product is M∘(f⊗g)∘M*") {
    auto orb = c13_orbitals();
    const int n = 13;
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-3, 3);
    // random elements of the orbital span
    auto random_span_element = [&] {
        Morphism acc = scale(frac(num(rng), 2), Morphism::identity(n));
        for (int s = 1; s <= orb->r; ++s)
            acc = add(acc, scale(frac(num(rng), 3), Morphism::orbital(orb, s)));
        return acc;
    };
    for (int trial = 0; trial < 5; ++trial) {
        Morphism f = random_span_element();
        Morphism g = random_span_element();
        Morphism had = compose(Morphism::multiplication(n),
                               compose(tensor(f, g), Morphism::comultiplication(n)));
        CHECK(had.to_dense() == hadamard_product(f.to_dense(), g.to_dense()));
    }
}
