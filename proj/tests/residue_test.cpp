#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "qaut/residue.hpp"

using namespace qaut;

namespace {

// quartic brute-force oracle for the 2-maximality definition
bool two_maximal_brute(const UnitSubgroup& e, std::int64_t p) {
    for (std::int64_t a : e.elements)
        for (std::int64_t b : e.elements)
            for (std::int64_t c : e.elements)
                for (std::int64_t d : e.elements)
                    if ((a - b + 2 * p) % p == (2 * (c - d) + 4 * p) % p)
                        if (a != b && (a + b) % p != 0) return false;
    return true;
}

std::int64_t phi_by_gcd_count(std::int64_t k) {
    std::int64_t count = 0;
    for (std::int64_t x = 1; x <= k; ++x)
        if (std::gcd(x, k) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("unit_group") {
    CHECK(unit_group(5).elements == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(unit_group(12).elements == std::vector<std::int64_t>{1, 5, 7, 11});
    CHECK(unit_group(13).order() == 12);
    CHECK_THROWS_AS(unit_group(1), std::invalid_argument);
}

TEST_CASE("euler_phi values and the order bounds") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(10) == 4);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("euler_phi agrees with the gcd-count oracle up to 10^4") {
    for (std::int64_t k = 1; k <= 10000; ++k) CHECK(euler_phi(k) == phi_by_gcd_count(k));
}

TEST_CASE("subgroup_of_order") {
    CHECK(subgroup_of_order(13, 6).elements == std::vector<std::int64_t>{1, 3, 4, 9, 10, 12});
    CHECK(subgroup_of_order(29, 4).elements == std::vector<std::int64_t>{1, 12, 17, 28});
    CHECK(subgroup_of_order(17, 8).elements ==
          std::vector<std::int64_t>{1, 2, 4, 8, 9, 13, 15, 16});
    CHECK_THROWS_AS(subgroup_of_order(13, 5), std::invalid_argument);
    CHECK_THROWS_AS(subgroup_of_order(12, 2), std::invalid_argument);
}

TEST_CASE("symbol_stabilizer") {
    CHECK(symbol_stabilizer({1, 3, 4, 9, 10, 12}, 13).elements ==
          std::vector<std::int64_t>{1, 3, 4, 9, 10, 12});
    CHECK(symbol_stabilizer({1, 12}, 13).elements == std::vector<std::int64_t>{1, 12});
    // complete graph: every unit stabilizes
    std::vector<std::int64_t> all;
    for (std::int64_t x = 1; x < 13; ++x) all.push_back(x);
    CHECK(symbol_stabilizer(all, 13).order() == 12);
    CHECK_THROWS_AS(symbol_stabilizer({1, 2}, 13), std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(symbol_stabilizer({0}, 13), std::invalid_argument);
}

TEST_CASE("symbol stabilizers of symmetric sets are even") {
    for (std::int64_t p : {5, 13, 17, 29, 31})
        for (std::int64_t j = 1; j <= p / 2; ++j) {
            auto e = symbol_stabilizer({1, p - 1, j, p - j}, p);
            CHECK(e.contains(p - 1));
        }
}

TEST_CASE("coset_representatives") {
    CHECK(coset_representatives(subgroup_of_order(13, 6)) == std::vector<std::int64_t>{1, 2});
    CHECK(coset_representatives(unit_group(13)) == std::vector<std::int64_t>{1});
    CHECK(coset_representatives(subgroup_of_order(17, 8)) == std::vector<std::int64_t>{1, 3});
    CHECK(coset_representatives(subgroup_of_order(41, 8)) ==
          std::vector<std::int64_t>{1, 2, 4, 7, 8});
}

TEST_CASE("coset laws") {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, std::int64_t>>{{13, 6}, {29, 4}, {31, 6}}) {
        auto e = subgroup_of_order(p, k);
        for (std::int64_t x = 1; x < p; ++x) {
            std::vector<std::int64_t> coset;
            for (std::int64_t g : e.elements) coset.push_back(x * g % p);
            std::sort(coset.begin(), coset.end());
            CHECK(static_cast<std::int64_t>(coset.size()) == k);
            if (!e.contains(x)) {
                for (std::int64_t y : coset) CHECK(!e.contains(y));
            } else {
                CHECK(coset == e.elements);
            }
        }
    }
}

TEST_CASE("stabilizer contains the subgroup generating the symbol union") {
    auto e = subgroup_of_order(29, 4);
    // S = E ∪ 2E
    std::vector<std::int64_t> s = e.elements;
    for (std::int64_t g : e.elements) s.push_back(2 * g % 29);
    std::sort(s.begin(), s.end());
    auto stab = symbol_stabilizer(s, 29);
    for (std::int64_t g : e.elements) CHECK(stab.contains(g));
    CHECK(symbol_stabilizer(e.elements, 29) == e);
}

TEST_CASE("is_two_maximal on the published subgroups") {
    for (std::int64_t p : {5, 7, 13, 29})
        CHECK(is_two_maximal(symbol_stabilizer({1, p - 1}, p), p));
    CHECK_FALSE(is_two_maximal(unit_group(7), 7));
    // fixed by the quartic oracle before the fast path was written
    CHECK(is_two_maximal(subgroup_of_order(29, 4), 29));
    CHECK(two_maximal_brute(subgroup_of_order(29, 4), 29));
    CHECK_FALSE(is_two_maximal(subgroup_of_order(13, 4), 13));
    CHECK_THROWS_AS(is_two_maximal(subgroup_of_order(13, 3), 13), std::invalid_argument);
}

TEST_CASE("is_two_maximal agrees with the quartic oracle on all even subgroups, p <= 100") {
    for (std::int64_t p = 5; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        for (std::int64_t k = 2; k <= p - 1; k += 2) {
            if ((p - 1) % k != 0) continue;
            auto e = subgroup_of_order(p, k);
            CHECK(is_two_maximal(e, p) == two_maximal_brute(e, p));
        }
    }
}

TEST_CASE("circulant_type_data") {
    auto d = circulant_type_data(13, {1, 3, 4, 9, 10, 12});
    CHECK(d.type_k == 6);
    CHECK(d.r == 2);
    CHECK(d.coset_reps == std::vector<std::int64_t>{1, 2});
    CHECK(d.p == d.r * d.type_k + 1);
    CHECK_THROWS_AS(circulant_type_data(12, {1, 11}), std::invalid_argument);
}
