#include "doctest.h"
#include "qaut/analysis.hpp"
#include "qaut/graph.hpp"

using namespace qaut;

namespace {

Graph circulant(int n, std::vector<int> jumps) {
    return from_circulant_spec(make_circulant_spec(n, std::move(jumps)));
}

Graph prism6() { return cartesian_product_with_edge(circulant(6, {})); }

}  // namespace

TEST_CASE("verdicts for the headline graphs") {
    auto k13 = analyze(complete_graph(13), "K13");
    CHECK(k13.verdict.kind == VerdictKind::HasQuantumSymmetry);

    auto c13 = analyze(circulant(13, {3, 4}), "C13(3,4)");
    CHECK(c13.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(c13.scripted_which == "c13");
    CHECK(c13.aut_order == 78);
    CHECK(c13.nosymG_searched);
    CHECK_FALSE(c13.witness.has_value());

    auto c17 = analyze(circulant(17, {2, 4, 8}), "C17(2,4,8)");
    CHECK(c17.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(c17.scripted_which == "c17");

    auto pr = analyze(prism6(), "prism:C6");
    CHECK(pr.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(pr.witness.has_value());
    CHECK(pr.aut_order == 24);
}

TEST_CASE("verdicts for the small cases and routes") {
    CHECK(analyze(complete_graph(3)).verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(analyze(empty_graph(7)).verdict.kind == VerdictKind::HasQuantumSymmetry);

    auto c13_2 = analyze(circulant(13, {2}), "C13(2)");
    CHECK(c13_2.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(c13_2.bound_passes == true);  // type 2, bound 6 < 13
    CHECK(c13_2.aut_order == 26);

    auto c29 = analyze(circulant(29, {12}), "C29(12)");
    CHECK(c29.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(c29.two_maximal == true);

    auto c13_5 = analyze(circulant(13, {5}), "C13(5)");
    CHECK(c13_5.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(c13_5.two_maximal == false);
    REQUIRE(c13_5.nosym2_pair.has_value());
    CHECK(c13_5.swap_verification->ok);
    CHECK(c13_5.swap_verification->full);

    auto path = analyze(from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}), "path4");
    CHECK(path.verdict.kind == VerdictKind::Inconclusive);
    CHECK(path.vertex_transitive == false);

    // has quantum symmetry but is neither empty nor complete: stays open
    auto octa = analyze(circulant(6, {2}), "C6(2)");
    CHECK(octa.verdict.kind == VerdictKind::Inconclusive);
    CHECK(octa.nosymG_searched);
    CHECK_FALSE(octa.witness.has_value());
}

TEST_CASE("cycles: the 4-cycle is the lone exception") {
    // the square has quantum symmetry, so no witness may exist for it;
    // every other small cycle is certified by some route
    auto c4 = analyze(circulant(4, {}), "C4");
    CHECK(c4.verdict.kind == VerdictKind::Inconclusive);
    CHECK(c4.nosymG_searched);
    CHECK_FALSE(c4.witness.has_value());

    auto c6 = analyze(circulant(6, {}), "C6");
    CHECK(c6.verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(c6.witness.has_value());
    CHECK(c6.swap_verification->ok);

    CHECK(analyze(circulant(5, {}), "C5").verdict.kind == VerdictKind::NoQuantumSymmetry);
    CHECK(analyze(circulant(7, {}), "C7").verdict.kind == VerdictKind::NoQuantumSymmetry);
}

TEST_CASE("the two open type-10 graphs stay inconclusive with a recorded search") {
    auto c41 = analyze(circulant(41, {4, 10, 16, 18}), "C41(4,10,16,18)");
    CHECK(c41.verdict.kind == VerdictKind::Inconclusive);
    CHECK_FALSE(c41.nosym2_pair.has_value());
    CHECK(c41.bclos.has_value());
    CHECK(c41.bclos->certified);
    CHECK(c41.nosymG_searched);
    CHECK_FALSE(c41.witness.has_value());

    auto c31 = analyze(circulant(31, {2, 4, 8, 15}), "C31(2,4,8,15)");
    CHECK(c31.verdict.kind == VerdictKind::Inconclusive);
    CHECK(c31.nosymG_searched);
    CHECK_FALSE(c31.witness.has_value());
}

TEST_CASE("every conclusive certificate replays without search") {
    for (auto [g, label] : std::vector<std::pair<Graph, std::string>>{
             {circulant(29, {12}), "C29(12)"},
             {circulant(13, {5}), "C13(5)"},
             {circulant(13, {2}), "C13(2)"},
             {prism6(), "prism:C6"},
             {circulant(13, {3, 4}), "C13(3,4)"}}) {
        auto report = analyze(g, label);
        REQUIRE(report.verdict.kind == VerdictKind::NoQuantumSymmetry);
        REQUIRE_FALSE(report.certificate.is_null());
        auto replayed = replay_certificate(report.certificate);
        CHECK(replayed.verdict.kind == VerdictKind::NoQuantumSymmetry);
    }
}

TEST_CASE("tampered certificates fail to replay") {
    auto report = analyze(circulant(13, {5}), "C13(5)");
    auto cert = report.certificate;
    cert["witness"]["records"][1]["k"] = 5;  // not the singleton element
    auto replayed = replay_certificate(cert);
    CHECK(replayed.verdict.kind == VerdictKind::Inconclusive);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_prime_type(4, 36).size() == 4);
    CHECK(enumerate_prime_type(6, 36).size() == 4);
    CHECK(enumerate_prime_type(8, 1296).size() == 48);
    CHECK(enumerate_prime_type(10, 1296).size() == 51);

    CHECK(enumerate_symbol_unions(31, 6).size() == 15);
    CHECK(enumerate_symbol_unions(13, 6).size() == 1);
    CHECK(enumerate_symbol_unions(29, 4).size() == 63);
    for (const auto& s : enumerate_symbol_unions(31, 6))
        CHECK(symbol_stabilizer(s, 31) == subgroup_of_order(31, 6));
}

TEST_CASE("type sweeps: serial equals parallel, singletons as published") {
    auto rows = sweep_type(8, 1296);
    auto serial = sweep_type_serial(8, 1296);
    REQUIRE(rows.size() == serial.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].data.p == serial[i].data.p);
        CHECK(rows[i].singleton == serial[i].singleton);
        CHECK(rows[i].intersection == serial[i].intersection);
    }
    for (const auto& row : rows) {
        if (row.data.p == 17)
            CHECK_FALSE(row.singleton.has_value());
        else
            CHECK(row.singleton.has_value());
    }
}

TEST_CASE("analyze concludes on every enumerated type-4/6/8 graph except complete ones") {
    for (std::int64_t k : {4, 6, 8}) {
        for (const auto& row : sweep_type(k, 1296)) {
            Graph g(static_cast<int>(row.data.p));
            for (int i = 0; i < row.data.p; ++i)
                for (std::int64_t s : row.data.symbol_set) {
                    int j = static_cast<int>((i + s) % row.data.p);
                    if (i < j) g.add_edge(i, j);
                }
            auto report = analyze(g, "p=" + std::to_string(row.data.p));
            INFO("type " << k << " p " << row.data.p);
            if (row.complete)
                CHECK(report.verdict.kind == VerdictKind::HasQuantumSymmetry);
            else
                CHECK(report.verdict.kind == VerdictKind::NoQuantumSymmetry);
        }
    }
}

TEST_CASE("report serialization carries the stable fields") {
    auto report = analyze(circulant(13, {5}), "C13(5)");
    auto j = report.to_json();
    for (const char* field : {"graph", "type", "criteria", "verdict", "certificate"})
        CHECK(j.contains(field));
    CHECK(j["verdict"]["kind"] == "NoQuantumSymmetry");
    CHECK(j["graph"]["n"] == 13);
    CHECK_FALSE(report.to_table().empty());
}

TEST_CASE("renderers match the published tables") {
    auto orb = orbitals(circulant(13, {3, 4}));
    const std::string golden =
        "i  | O_i^1           | O_i^2\n"
        "0  | {1,3,4,9,10,12} | {2,5,6,7,8,11}\n"
        "1  | {0,2,4,5,10,11} | {3,6,7,8,9,12}\n"
        "2  | {1,3,5,6,11,12} | {0,4,7,8,9,10}\n"
        "3  | {0,2,4,6,7,12}  | {1,5,8,9,10,11}\n"
        "4  | {0,1,3,5,7,8}   | {2,6,9,10,11,12}\n"
        "5  | {1,2,4,6,8,9}   | {0,3,7,10,11,12}\n"
        "6  | {2,3,5,7,9,10}  | {0,1,4,8,11,12}\n"
        "7  | {3,4,6,8,10,11} | {0,1,2,5,9,12}\n"
        "8  | {4,5,7,9,11,12} | {0,1,2,3,6,10}\n"
        "9  | {0,5,6,8,10,12} | {1,2,3,4,7,11}\n"
        "10 | {0,1,6,7,9,11}  | {2,3,4,5,8,12}\n"
        "11 | {1,2,7,8,10,12} | {0,3,4,5,6,9}\n"
        "12 | {0,2,3,8,9,11}  | {1,4,5,6,7,10}\n";
    CHECK(render_orbital_table(orb) == golden);
    CHECK(render_gamma(gamma_matrix(orb)) == "2 3\n3 3\n");
}

TEST_CASE("paper report regenerates with every item matching") {
    auto rep = reproduce_paper_report();
    for (const auto& item : rep.items) {
        INFO("[" << item.section << "] " << item.name << " " << item.detail);
        CHECK(item.match);
    }
    CHECK(rep.all_match());
    CHECK(rep.annotations.size() >= 4);
    CHECK(rep.to_json().at("all_match").get<bool>());
}
