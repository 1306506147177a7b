#include <algorithm>

#include "doctest.h"
#include "qaut/paper_constructions.hpp"

using namespace qaut;

namespace {

const TranscriptStep* find_step(const Transcript& t, const std::string& name) {
    for (const auto& s : t.steps)
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("13-vertex construction replays in full") {
    auto t = verify_paper_c13();
    for (const auto& s : t.steps) {
        INFO(s.name << " expected " << s.expected << " got " << s.got);
        CHECK(s.ok);
    }
    CHECK(t.ok());

    // the printed intermediates are present as named steps
    for (const char* name : {"H_4(e_0⊗e_1)", "T_1(e_4+e_10)", "T_2(e_7+e_8)", "F_7(e_0⊗e_1)",
                             "G_1(e_0⊗e_2)", "F_0(e_0⊗e_1)", "F_12(e_0⊗e_1)"}) {
        const auto* s = find_step(t, name);
        REQUIRE_MESSAGE(s != nullptr, name);
        CHECK(s->ok);
    }
    const auto* h4 = find_step(t, "H_4(e_0⊗e_1)");
    CHECK(h4->got == "e6 + e7 + e8");
    const auto* fin = find_step(t, "H = g_0 + F∘g_1 + G∘g_2 equals the swap on all 169 pairs");
    REQUIRE(fin != nullptr);
    CHECK(fin->ok);
}

TEST_CASE("17-vertex construction replays in full") {
    auto t = verify_paper_c17();
    for (const auto& s : t.steps) {
        INFO(s.name << " expected " << s.expected << " got " << s.got);
        CHECK(s.ok);
    }
    CHECK(t.ok());

    const auto* h11 = find_step(t, "H_{1,1}(e_0⊗e_1)");
    REQUIRE(h11 != nullptr);
    CHECK(h11->got == "e2 + e9 + e16");
    const auto* g2 = find_step(t, "G_2(e_0⊗e_1)");
    REQUIRE(g2 != nullptr);
    CHECK(g2->ok);
    const auto* filters = find_step(t, "filter pairs match the printed ones");
    REQUIRE(filters != nullptr);
    CHECK(filters->ok);
    const auto* fin = find_step(t, "G = g_0 + L' + L'' equals the swap on all 289 pairs");
    REQUIRE(fin != nullptr);
    CHECK(fin->ok);
    // the complement branch is recorded
    CHECK(find_step(t, "complement: W' = {6,10,14}") != nullptr);
    CHECK(t.notes.size() >= 2);
}

TEST_CASE("transcripts render and serialize") {
    auto t = verify_paper_c13();
    auto text = t.to_text();
    CHECK(text.find("all identities hold") != std::string::npos);
    auto j = t.to_json();
    CHECK(j.at("ok").get<bool>());
    CHECK(j.at("steps").size() == t.steps.size());
}
