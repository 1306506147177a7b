#include <random>

#include "doctest.h"
#include "qaut/graph.hpp"
#include "qaut/orbital_algebra.hpp"
#include "qaut/symmetry.hpp"

using namespace qaut;

namespace {

Graph circulant(int n, std::vector<int> jumps) {
    return from_circulant_spec(make_circulant_spec(n, std::move(jumps)));
}

Graph prism6() { return cartesian_product_with_edge(circulant(6, {})); }

Rat frac(int num, int den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("orbital basis matrices") {
    auto orb = orbitals(circulant(13, {3, 4}));
    auto t0 = basis_matrix(orb, 0);
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) CHECK(t0.at(i, j) == (i == j));

    Graph g = circulant(13, {3, 4});
    auto t1 = basis_matrix(orb, 1);
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) CHECK(t1.at(i, j) == g.adjacent(i, j));

    // partition law: sum of all T_s is the all-ones matrix, supports disjoint
    for (const Graph& graph : {circulant(13, {3, 4}), prism6(), circulant(6, {2})}) {
        auto o = orbitals(graph);
        RationalMatrix sum(o.n, o.n);
        for (int s = 0; s <= o.r; ++s) {
            auto ts = basis_matrix(o, s).to_rational();
            for (int s2 = s + 1; s2 <= o.r; ++s2)
                CHECK(hadamard_product(ts, basis_matrix(o, s2).to_rational()).is_zero());
            CHECK(hadamard_product(ts, ts) == ts);
            sum = sum + ts;
        }
        CHECK(sum == RationalMatrix::ones(o.n, o.n));
    }
}

TEST_CASE("hadamard product") {
    RationalMatrix j = RationalMatrix::ones(4, 4);
    RationalMatrix f(4, 4);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) f.at(a, b) = frac(num(rng), 1 + a + b);
    CHECK(hadamard_product(j, f) == f);
    CHECK_THROWS_AS(hadamard_product(f, RationalMatrix(3, 4)), std::invalid_argument);
}

TEST_CASE("hadamard product multiplies orbital coefficients") {
    auto orb = orbitals(circulant(13, {3, 4}));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-4, 4);
    std::vector<Rat> af, ag;
    RationalMatrix f(13, 13), g(13, 13);
    for (int s = 0; s <= orb.r; ++s) {
        af.push_back(frac(num(rng), 3));
        ag.push_back(frac(num(rng), 2));
        auto ts = basis_matrix(orb, s).to_rational();
        for (int i = 0; i < 13; ++i)
            for (int j = 0; j < 13; ++j) {
                f.at(i, j) += af[s] * ts.at(i, j);
                g.at(i, j) += ag[s] * ts.at(i, j);
            }
    }
    RationalMatrix expected(13, 13);
    for (int s = 0; s <= orb.r; ++s) {
        auto ts = basis_matrix(orb, s).to_rational();
        for (int i = 0; i < 13; ++i)
            for (int j = 0; j < 13; ++j) expected.at(i, j) += af[s] * ag[s] * ts.at(i, j);
    }
    CHECK(hadamard_product(f, g) == expected);
}

TEST_CASE("gamma matrices") {
    auto g13 = gamma_matrix(orbitals(circulant(13, {3, 4})));
    CHECK(g13.beta == std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 3}});
    CHECK(g13.base_pair == std::pair<int, int>{0, 1});

    auto g17 = gamma_matrix(circulant_orbitals(circulant_type_data(17, {1, 2, 4, 8, 9, 13, 15, 16})));
    CHECK(g17.beta == std::vector<std::vector<std::int64_t>>{{3, 4}, {4, 4}});

    auto g41 = gamma_matrix(circulant_orbitals(
        circulant_type_data(41, {1, 4, 10, 16, 18, 23, 25, 31, 37, 40})));
    CHECK(g41.beta == std::vector<std::vector<std::int64_t>>{
                          {0, 3, 2, 4}, {3, 3, 2, 2}, {2, 2, 4, 2}, {4, 2, 2, 2}});
}

TEST_CASE("gamma row sums and symmetry for S = E graphs, p <= 100") {
    for (std::int64_t p = 5; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t k = 2; k <= p - 1; k += 2) {
            if ((p - 1) % k != 0) continue;
            auto data = circulant_type_data(p, subgroup_of_order(p, k).elements);
            if (data.type_k == p - 1) continue;  // complete graph, r = 1 handled below
            auto gm = gamma_matrix(circulant_orbitals(data));
            CHECK(gm.symmetric());
            for (int s = 1; s <= gm.r; ++s) {
                std::int64_t sum = 0;
                for (int s2 = 1; s2 <= gm.r; ++s2) sum += gm.at(s, s2);
                CHECK(sum == k - (s == 1 ? 1 : 0));
            }
        }
    }
}

TEST_CASE("minimal polynomial") {
    CHECK(minimal_polynomial_degree(complete_graph(7)) == 2);
    CHECK(minimal_polynomial_degree(circulant(13, {3, 4})) == 3);
    CHECK(minimal_polynomial_degree(circulant(29, {12})) == 8);
    CHECK(minimal_polynomial_degree(prism6()) == 7);

    for (const Graph& g :
         {complete_graph(7), circulant(13, {3, 4}), circulant(29, {12}), prism6()}) {
        auto poly = minimal_polynomial(g);
        CHECK(poly.coefficients.back() == 1);
        CHECK(evaluate_at_adjacency(poly, g).is_zero());
    }
}

TEST_CASE("minimal polynomial is label-invariant (first-row path vs dense path)") {
    // relabeling breaks the shift law, forcing the dense Krylov route
    Graph g = circulant(13, {3, 4});
    std::vector<int> perm{5, 2, 9, 0, 12, 3, 7, 1, 11, 4, 8, 10, 6};
    Graph h(13);
    for (int i = 0; i < 13; ++i)
        for (int j = i + 1; j < 13; ++j)
            if (g.adjacent(i, j)) h.add_edge(perm[i], perm[j]);
    CHECK_FALSE(h.is_circulant());
    auto pg = minimal_polynomial(g);
    auto ph = minimal_polynomial(h);
    CHECK(pg.degree == ph.degree);
    CHECK(pg.coefficients == ph.coefficients);
}

TEST_CASE("coherent closure") {
    CHECK(coherent_closure(complete_graph(5)).size() == 2);
    CHECK(coherent_closure(empty_graph(5)).size() == 2);

    auto orb = orbitals(circulant(13, {3, 4}));
    auto closure = coherent_closure(circulant(13, {3, 4}));
    REQUIRE(closure.size() == 3);
    // the closure classes are exactly the orbital basis matrices
    for (const auto& cls : closure) {
        bool matched = false;
        for (int s = 0; s <= orb.r; ++s)
            if (cls.entries == basis_matrix(orb, s).entries) matched = true;
        CHECK(matched);
    }

    CHECK(coherent_closure(prism6()).size() == 8);

    for (const Graph& g : {circulant(13, {3, 4}), prism6(), circulant(6, {2})}) {
        auto serial = coherent_closure_serial(g);
        auto parallel = coherent_closure(g, true);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
            CHECK(serial[i].entries == parallel[i].entries);
    }
}

TEST_CASE("bclos check") {
    auto check = [](const Graph& g) { return bclos_check(g, orbitals(g)); };

    auto kn = check(complete_graph(6));
    CHECK(kn.certified);
    CHECK(kn.orbital_dim == 2);

    auto c13 = check(circulant(13, {3, 4}));
    CHECK(c13.certified);
    CHECK(c13.route == "minimal-polynomial");
    CHECK(c13.minpoly_degree == 3);

    // the prism needs the closure route: its minimal polynomial is one short
    auto pr = check(prism6());
    CHECK(pr.certified);
    CHECK(pr.route == "coherent-closure");
    CHECK(pr.minpoly_degree == 7);
    CHECK(pr.closure_dim == 8);
    CHECK(pr.orbital_dim == 8);

    // sandwich: minpoly degree <= closure dim <= r + 1
    for (const Graph& g : {circulant(13, {3, 4}), prism6(), circulant(6, {2}),
                           circulant(13, {2}), complete_graph(6)}) {
        auto b = check(g);
        CHECK(b.minpoly_degree <= b.closure_dim);
        CHECK(b.closure_dim <= b.orbital_dim);
    }
}
