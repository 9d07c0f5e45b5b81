#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "zel/classifier.hpp"
#include "zel/notation.hpp"

using namespace zel;

namespace {

std::string read_anchor_source() {
    std::ifstream in(ZEL_ANCHOR_SOURCE);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Status table_status(const Multisegment& m) {
    bool in = m.total_dimension() == 4 ? gl4_table(m) : gl6_table(m);
    return in ? Status::Distinguished : Status::NotDistinguished;
}

}  // namespace

TEST_CASE("classify examples") {
    Classifier c;
    auto a = c.classify(Z({{0, 1}, {1, 4}}));
    CHECK(a.status == Status::Distinguished);
    CHECK(a.trace.front().rule == "EXISTENCE-336");

    auto b = c.classify(Z({{0, 1}, {2, 5}}));
    CHECK(b.status == Status::NotDistinguished);
    CHECK(b.trace.front().rule == "JUXTAPOSED-337");

    auto d = c.classify(Z({{0, 4}, {1, 1}}));
    CHECK(d.status == Status::NotDistinguished);
    auto mv = c.apply_rule("MACKEY-VANISH", Z({{0, 4}, {1, 1}}));
    REQUIRE(mv.has_value());
    CHECK(mv->status == Status::NotDistinguished);
}

TEST_CASE("exact sequence rule on juxtaposed even segments") {
    Classifier c;
    auto v = c.apply_rule("EXACT-SEQUENCE", Z({{0, 1}, {2, 3}}));
    REQUIRE(v.has_value());
    CHECK(v->status == Status::NotDistinguished);
    CHECK_FALSE(c.apply_rule("EXACT-SEQUENCE", Z({{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("GL4 and GL6 tables") {
    CHECK(gl4_table(Multisegment({Segment({"s", 2}, 0, 1)})));
    CHECK_FALSE(gl4_table(Z({{0, 1}, {2, 3}})));
    CHECK_FALSE(gl4_table(Z({{0, 2}, {1, 1}})));
    CHECK(gl4_table(Z({{0, 1}, {1, 2}})));
    CHECK(gl4_table(Z({{0, 3}})));
    CHECK(gl4_table(Z({{0, 1}, {4, 5}})));
    CHECK(gl6_table(Z({{0, 1}, {1, 2}, {2, 3}})));
    CHECK(gl6_table(Z({{0, 3}, {3, 4}})));
    CHECK_FALSE(gl6_table(Z({{0, 2}, {1, 3}})));
    CHECK(gl6_table(Z({{0, 5}})));
    CHECK(gl6_table(Multisegment({Segment({"s", 3}, 0, 1)})));
    CHECK_THROWS_AS(gl4_table(Z({{0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(gl6_table(Z({{0, 3}})), std::invalid_argument);
}

TEST_CASE("anchors appear verbatim in the source text") {
    std::string text = read_anchor_source();
    REQUIRE_FALSE(text.empty());
    for (const auto& r : rule_registry()) {
        CAPTURE(r.name);
        CHECK(text.find(r.anchor) != std::string::npos);
    }
    CHECK_THROWS_AS(rule_info("NO-SUCH-RULE"), std::invalid_argument);
}

TEST_CASE("classification agrees with the tables") {
    Classifier c;
    for (int rank : {4, 6})
        for (const auto& m : scan_corpus(rank, 6)) {
            CAPTURE(to_text(m));
            auto v = c.classify(m, {true, false});
            CHECK(v.status == table_status(m));
        }
}

TEST_CASE("every rule that fires agrees with the tables") {
    Classifier c;
    for (int rank : {4, 6})
        for (const auto& m : scan_corpus(rank, 6)) {
            Status want = table_status(m);
            for (const auto& r : rule_registry()) {
                if (r.kind == RuleKind::Fallback) continue;
                auto v = c.apply_rule(r.name, m);
                if (!v) continue;
                CAPTURE(to_text(m));
                CAPTURE(r.name);
                CHECK(v->status == want);
            }
        }
}

TEST_CASE("existence and juxtaposition rules are exclusive") {
    Classifier c;
    for (int rank : {4, 6})
        for (const auto& m : scan_corpus(rank, 6)) {
            bool e = c.apply_rule("EXISTENCE-336", m).has_value();
            bool j = c.apply_rule("JUXTAPOSED-337", m).has_value();
            CHECK_FALSE((e && j));
        }
}

TEST_CASE("traces replay") {
    Classifier c;
    for (int rank : {2, 4, 6})
        for (const auto& m : scan_corpus(rank, 6)) {
            auto v = c.classify(m);
            CAPTURE(to_text(m));
            CHECK(c.replay(m, v));
            for (const auto& s : v.trace) CHECK(s.anchor == rule_info(s.rule).anchor);
        }
    Verdict forged{Status::Distinguished, {{"JUXTAPOSED-337", rule_info("JUXTAPOSED-337").anchor, ""}}};
    CHECK_FALSE(c.replay(Z({{0, 1}, {2, 3}}), forged));
}

TEST_CASE("Speh ladders with even t are distinguished") {
    Classifier c;
    CuspidalLine l;
    for (int d = 1; d <= 3; ++d)
        for (int t = 2; t <= 4; t += 2) {
            auto v = c.classify(expand_speh(l, d, t));
            CHECK(v.status == Status::Distinguished);
            CHECK(v.trace.front().rule == "OS-PRODUCT");
        }
}

TEST_CASE("rank two") {
    Classifier c;
    std::vector<Multisegment> yes;
    for (const auto& m : scan_corpus(2, 6))
        if (c.classify(m).status == Status::Distinguished) yes.push_back(m);
    REQUIRE(yes.size() == 1);
    CHECK(yes.front() == Z({{0, 1}}));
}

TEST_CASE("contragredient symmetry on the corpus") {
    Classifier c;
    for (int rank : {4, 6})
        for (const auto& m : scan_corpus(rank, 6))
            CHECK(c.classify(m).status == c.classify(contragredient(m)).status);
}

TEST_CASE("Q input and twists") {
    Classifier c;
    CHECK(c.classify(Q({{0, 2}, {1, 3}})).status == Status::Distinguished);
    CHECK(c.classify(Multisegment({{3, 4}, {4, 7}}, Form::Z, 5)).status == Status::Distinguished);
    auto before = c.memo_size();
    c.classify(Z({{0, 1}, {1, 4}}));
    c.classify(Z({{0, 1}, {1, 4}}));
    CHECK(c.memo_size() <= before + 1);
}

TEST_CASE("classifier preconditions") {
    Classifier c;
    CHECK_THROWS_AS(c.classify(Z({{0, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(c.classify(Multisegment{}), std::invalid_argument);
    CHECK_THROWS_AS(c.apply_rule("NO-SUCH-RULE", Z({{0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(verify_conjectures(5, {2}, c), std::invalid_argument);
}

TEST_CASE("conjecture harness") {
    Classifier c;
    auto rep = verify_conjectures(6, {2, 4, 6}, c);
    CHECK(rep.mismatches.empty());
    CHECK(rep.reduction_failures.empty());
    CHECK(rep.unknowns.empty());
    CHECK(rep.ok());
    REQUIRE(rep.ranks.size() == 3);
    CHECK(rep.ranks[0].distinguished == 1);
}
