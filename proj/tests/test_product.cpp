#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "known_cases.hpp"
#include "random_inputs.hpp"
#include "zel/product.hpp"

using namespace zel;

namespace {

std::set<Multisegment> as_set(const std::vector<Multisegment>& v) { return {v.begin(), v.end()}; }

Multisegment points_negated(const Multisegment& m) {
    std::vector<Segment> v;
    for (const auto& s : m.segments()) {
        std::vector<int> pts;
        for (int i = s.start; i <= s.end; ++i) pts.push_back(-i);
        v.emplace_back(s.line, *std::min_element(pts.begin(), pts.end()),
                       *std::max_element(pts.begin(), pts.end()));
    }
    return Multisegment(v, m.form(), -m.twist2());
}

}  // namespace

TEST_CASE("decompose_pair examples") {
    auto cs = decompose_pair({0, 1}, {1, 2});
    CHECK(cs.length == 2);
    CHECK(*cs.socle == Z({{0, 2}, {1, 1}}));
    CHECK(*cs.cosocle == Z({{0, 1}, {1, 2}}));

    auto one = decompose_pair({0, 1}, {3, 4});
    CHECK(one.length == 1);
    CHECK(*one.socle == *one.cosocle);

    auto rev = decompose_pair({1, 2}, {0, 1});
    CHECK(*rev.socle == Z({{0, 1}, {1, 2}}));
    CHECK(*rev.cosocle == Z({{0, 2}, {1, 1}}));
}

TEST_CASE("decompose_pair symmetry and agreement with subquotients") {
    for (int b1 = -3; b1 <= 3; ++b1)
        for (int e1 = b1; e1 <= 3; ++e1)
            for (int b2 = -3; b2 <= 3; ++b2)
                for (int e2 = b2; e2 <= 3; ++e2) {
                    Segment a(b1, e1), b(b2, e2);
                    auto x = decompose_pair(a, b), y = decompose_pair(b, a);
                    CHECK(as_set(x.all_factors) == as_set(y.all_factors));
                    if (x.length == 2) {
                        CHECK(*x.socle == *y.cosocle);
                        CHECK(*x.cosocle == *y.socle);
                    }
                    CHECK(as_set(x.all_factors) == as_set(enumerate_subquotients({a, b}).items));
                    for (const auto& f : x.all_factors) CHECK(f.total_dimension() == a.dimension() + b.dimension());
                }
}

TEST_CASE("subquotient lists of the three-segment cases") {
    for (const auto& c : subquotient_cases()) {
        for (Form form : {Form::Z, Form::Q}) {
            CAPTURE(c.name);
            auto got = enumerate_subquotients(c.factors, form);
            std::set<Multisegment> want;
            for (const auto& segs : c.items) want.insert(normalized(Multisegment(segs, form)));
            std::set<Multisegment> have;
            for (const auto& m : got.items) have.insert(normalized(m));
            CHECK(got.items.size() == c.items.size());
            CHECK(have == want);
            CHECK(got.certified);
        }
    }
}

TEST_CASE("subquotient examples and preconditions") {
    CHECK(enumerate_subquotients({{0, 1}, {3, 4}}).items.size() == 1);
    CHECK_THROWS_AS(enumerate_subquotients({Segment(0, 1), Segment({"r", 2}, 0, 1)}), std::invalid_argument);
}

TEST_CASE("zelevinsky_dual examples") {
    CHECK(zelevinsky_dual(Z({{0, 3}})) == Z({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
    CHECK(zelevinsky_dual(Z({{0, 0}, {1, 1}, {2, 2}, {3, 3}})) == Z({{0, 3}}));
    CHECK(zelevinsky_dual(Z({{0, 1}, {1, 2}, {2, 3}})) == Z({{0, 2}, {1, 3}}));
    // Z([0,1],[1,2]) = Q([0,1],[1,2]).
    CHECK(zelevinsky_dual(Z({{0, 1}, {1, 2}})) == Z({{0, 1}, {1, 2}}));
    CHECK(to_Z_form(Q({{0, 2}, {1, 3}})) == Z({{0, 1}, {1, 2}, {2, 3}}));
    CHECK(zelevinsky_dual(Q({{0, 3}})).form() == Form::Q);
}

TEST_CASE("dual swaps the Speh parameters") {
    CuspidalLine c;
    for (int d = 1; d <= 5; ++d)
        for (int t = 1; t <= 5; ++t) CHECK(same_pattern(zelevinsky_dual(expand_speh(c, d, t)), expand_speh(c, t, d)));
}

TEST_CASE("dual works line by line") {
    CuspidalLine r("r", 2);
    Multisegment m({Segment(0, 1), Segment(r, 0, 2)});
    Multisegment d = zelevinsky_dual(m);
    CHECK(d == Multisegment({Segment(0, 0), Segment(1, 1), Segment(r, 0, 0), Segment(r, 1, 1), Segment(r, 2, 2)}));
    CHECK(d.total_dimension() == m.total_dimension());
}

TEST_CASE("contragredient") {
    CHECK(contragredient(Z({{0, 1}, {1, 4}})).segments() == Z({{0, 3}, {3, 4}}).segments());
    CHECK(same_pattern(contragredient(Z({{0, 5}})), Z({{0, 5}})));
    CHECK(same_pattern(contragredient(Z({{0, 1}, {2, 3}})), Z({{0, 1}, {2, 3}})));
    for (const auto& c : subquotient_cases())
        for (const auto& segs : c.items) {
            Multisegment m(segs);
            CHECK(contragredient(m) == normalized(points_negated(m)));
            CHECK(normalized(contragredient(contragredient(m))) == normalized(m));
        }
}

TEST_CASE("jacquet_ss examples") {
    auto t = jacquet_ss(segment_product({{1, 2}, {3, 4}}, Form::Z), 2);
    REQUIRE(t.size() == 3);
    std::set<std::pair<std::vector<Multisegment>, std::vector<Multisegment>>> got;
    for (const auto& x : t) got.insert({x.left.factors, x.right.factors});
    std::set<std::pair<std::vector<Multisegment>, std::vector<Multisegment>>> want = {
        {{Z({{1, 2}})}, {Z({{3, 4}})}},
        {{Z({{3, 4}})}, {Z({{1, 2}})}},
        {{Z({{1, 1}}), Z({{3, 3}})}, {Z({{2, 2}}), Z({{4, 4}})}},
    };
    CHECK(got == want);

    for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c) {
            auto q = jacquet_ss(segment_product({{b, b + 1}, {c, c + 1}}, Form::Q), 2);
            std::set<std::pair<std::vector<Multisegment>, std::vector<Multisegment>>> g, w;
            for (const auto& x : q) g.insert({x.left.factors, x.right.factors});
            w.insert({{Q({{b, b + 1}})}, {Q({{c, c + 1}})}});
            w.insert({{Q({{c, c + 1}})}, {Q({{b, b + 1}})}});
            w.insert({{Q({{b + 1, b + 1}}), Q({{c + 1, c + 1}})}, {Q({{b, b}}), Q({{c, c}})}});
            CHECK(g == w);
        }

    auto triv = jacquet_ss(segment_product({{0, 1}}, Form::Z), 0);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].left.empty());
    CHECK(triv[0].right.factors == std::vector<Multisegment>{Z({{0, 1}})});
    CHECK(jacquet_ss(segment_product({{0, 1}}, Form::Z), 5).empty());
}

TEST_CASE("jacquet_ss term count and dimensions") {
    std::vector<std::vector<Segment>> inputs = {
        {{0, 1}, {1, 2}, {3, 4}},
        {{0, 3}, {2, 2}},
        {Segment({"r", 2}, 0, 1), Segment(0, 2)},
        {{0, 0}, {0, 0}, {0, 0}, {1, 1}},
    };
    for (const auto& segs : inputs) {
        int total = 0;
        for (const auto& s : segs) total += s.dimension();
        for (int k = 0; k <= total; ++k) {
            auto terms = jacquet_ss(segment_product(segs, Form::Z), k);
            CHECK(static_cast<int>(terms.size()) == split_count(segs, k));
            for (const auto& t : terms) {
                CHECK(t.left.dimension() == k);
                CHECK(t.right.dimension() == total - k);
            }
        }
    }
}

TEST_CASE("product_irreducible") {
    CHECK(product_irreducible({Z({{0, 3}}), Z({{1, 2}})}).verdict == Irreducibility::Irreducible);
    CHECK(product_irreducible({Z({{1, 2}}), Z({{0, 1}, {1, 2}})}).verdict == Irreducibility::Irreducible);
    CHECK(product_irreducible({Z({{0, 1}}), Z({{1, 2}})}).verdict == Irreducibility::Reducible);
    CHECK(product_irreducible({Z({{2, 3}}), Z({{0, 1}, {2, 3}})}).verdict == Irreducibility::Irreducible);
    CHECK(product_irreducible({Z({{0, 1}})}).verdict == Irreducibility::Irreducible);
    // Half-integral offsets put the factors on different lines.
    CHECK(certified_irreducible({Z({{0, 1}}), Multisegment({{0, 1}}, Form::Z, 1)}));
}

TEST_CASE("merged and presentation") {
    auto m = merged({Z({{1, 2}}), Z({{0, 1}, {1, 2}})});
    CHECK(m == Z({{0, 1}, {1, 2}, {1, 2}}));
    auto p = presentation(Z({{1, 2}, {0, 1}, {3, 4}}));
    REQUIRE(p.factors.size() == 3);
    CHECK(p.factors[0] == Z({{0, 1}}));
    CHECK(p.factors[2] == Z({{3, 4}}));
    auto q = presentation(Q({{1, 2}, {0, 1}}));
    CHECK(q.factors[0] == Q({{1, 2}}));
}

TEST_CASE("cuspidal support") {
    auto s = cuspidal_support(Multisegment({{0, 1}}, Form::Z, 1));
    CHECK(s == std::vector<SupportPoint>{{"c1", 1}, {"c1", 3}});
    JacquetTerm t{segment_product({{0, 0}}, Form::Z), segment_product({{1, 1}}, Form::Z)};
    CHECK(jacquet_support_within(Z({{0, 1}}), t));
    CHECK_FALSE(jacquet_support_within(Z({{0, 0}, {2, 2}}), t));
}
