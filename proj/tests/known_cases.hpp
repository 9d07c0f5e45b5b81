#pragma once

#include <string>
#include <vector>

#include "zel/segment.hpp"

// Exponents 1, nu, nu^k written as 0, 1, k.
struct SubquotientCase {
    std::string name;
    std::vector<zel::Segment> factors;
    std::vector<std::vector<zel::Segment>> items;
};

inline const std::vector<SubquotientCase>& subquotient_cases() {
    static const std::vector<SubquotientCase> cases = {
        {"a",
         {{0, 1}, {1, 2}, {3, 4}},
         {{{0, 1}, {1, 2}, {3, 4}}, {{0, 2}, {1, 1}, {3, 4}}, {{0, 4}, {1, 1}}, {{0, 1}, {1, 4}}}},
        {"b",
         {{0, 1}, {1, 2}, {2, 3}},
         {{{0, 1}, {1, 2}, {2, 3}},
          {{0, 2}, {1, 1}, {2, 3}},
          {{0, 1}, {1, 3}, {2, 2}},
          {{0, 3}, {1, 1}, {2, 2}},
          {{0, 2}, {1, 3}},
          {{0, 3}, {1, 2}}}},
        {"c",
         {{0, 1}, {2, 3}, {4, 5}},
         {{{0, 1}, {2, 3}, {4, 5}}, {{0, 3}, {4, 5}}, {{0, 1}, {2, 5}}, {{0, 5}}}},
        {"d", {{0, 1}, {1, 2}, {1, 2}}, {{{0, 1}, {1, 2}, {1, 2}}, {{0, 2}, {1, 1}, {1, 2}}}},
        {"e", {{0, 1}, {2, 3}, {2, 3}}, {{{0, 1}, {2, 3}, {2, 3}}, {{0, 3}, {2, 3}}}},
    };
    return cases;
}
