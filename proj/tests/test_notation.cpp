#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zel/notation.hpp"

using namespace zel;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_product(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("parse multisegments") {
    CHECK(parse_multisegment("Z{[0,1],[1,4]}") == Z({{0, 1}, {1, 4}}));
    CHECK(parse_multisegment(" Q{ [0 , 2] ,[1,3] } ") == Q({{0, 2}, {1, 3}}));
    CHECK(parse_multisegment("Z{[-2,-1]}*v^3/2") == Multisegment({{-2, -1}}, Form::Z, 3));
    CHECK(parse_multisegment("Z{[0,1]}*v^-2") == Multisegment({{0, 1}}, Form::Z, -4));
    CHECK(parse_multisegment("Z{[0,1]}*v^4/2") == Multisegment({{0, 1}}, Form::Z, 4));
    auto m = parse_multisegment("Z{[0,1]@rho':2,[0,0]}");
    REQUIRE(m.size() == 2);
    CHECK(m.total_dimension() == 5);
    CHECK(m.lines().size() == 2);
}

TEST_CASE("parse products") {
    auto p = parse_product("Z{[0,1]} x Z{[1,2]} x Z{[3,4]}");
    REQUIRE(p.factors.size() == 3);
    CHECK(p.factors[1] == Z({{1, 2}}));
    CHECK(p.dimension() == 6);
}

TEST_CASE("printing") {
    CHECK(to_text(Z({{0, 1}, {1, 4}})) == "Z{[0,1],[1,4]}");
    CHECK(to_text(Multisegment({Segment({"s", 2}, 0, 1)}, Form::Q, -3)) == "Q{[0,1]@s:2}*v^-3/2");
    CHECK(to_text(Multisegment({{0, 0}}, Form::Z, 4)) == "Z{[0,0]}*v^2");
    CHECK(to_text(FormalProduct{}) == "1");
    CHECK(to_text(FormalProduct({Z({{0, 1}}), Q({{2, 2}})})) == "Z{[0,1]} x Q{[2,2]}");
    CHECK(twist_text(-1) == "-1/2");
    CHECK(twist_text(6) == "3");
}

TEST_CASE("round trip") {
    for (const char* s : {"Z{[0,1],[1,4]}", "Q{[3,3],[0,1]@s:2}*v^-3/2", "Z{[-4,2],[0,0]@r_1:3}*v^7"}) {
        auto m = parse_multisegment(s);
        CHECK(to_text(m) == s);
        CHECK(parse_multisegment(to_text(m)) == m);
    }
}

TEST_CASE("errors carry positions") {
    CHECK(error_position("Z{[0,1],[2}") == 10);
    CHECK(error_position("W{[0,1]}") == 0);
    CHECK(error_position("Z{[2,1]}") == 2);
    CHECK(error_position("Z{[0,1]}*v^1/3") == 13);
    CHECK(error_position("Z{[0,1]@1x:1}") == 8);
    CHECK(error_position("Z{[0,1]@s:0}") == 10);
    CHECK(error_position("Z{[0,1]} y") == 9);
    CHECK(error_position("Z{[0,1]@s:1,[0,0]@s:2}") == 0);
    CHECK(error_position("Z{[0,99999999999]}") == 5);
    CHECK_THROWS_AS(parse_multisegment("Z{[0,1]} x Z{[0,1]}"), ParseError);
}

TEST_CASE("caret message") {
    std::string text = "Z{[0,1],[2}";
    try {
        parse_product(text);
        FAIL("no error");
    } catch (const ParseError& e) {
        auto msg = caret_message(text, e);
        CHECK(msg.find("position 10") != std::string::npos);
        CHECK(msg.find("\n  " + std::string(10, ' ') + "^") != std::string::npos);
    }
}
