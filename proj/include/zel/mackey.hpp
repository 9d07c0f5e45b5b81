#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zel/product.hpp"

namespace zel {

struct OrbitDatum {
    int n = 0;
    int k = 0;
    int r = 0;
    // Ranks of GL_r, Sp_{(k-r)/2}, Sp_{(2n-k-r)/2}.
    int gl_rank() const { return r; }
    int sp_left() const { return (k - r) / 2; }
    int sp_right() const { return (2 * n - k - r) / 2; }
    int a() const { return k - r; }
    int b() const { return 2 * n - k - r; }

    bool operator==(const OrbitDatum&) const = default;
};

std::vector<OrbitDatum> orbit_parameters(int n, int k);

struct ModularExponents {
    int delta_kr = 0;  // r + a + b + 1
    int twist = 0;     // -(n - r + 1)
};

ModularExponents modular_exponents(const OrbitDatum& d);
// Exponent of |det g_i| in the modular character of the block-upper parabolic.
std::vector<int> block_exponents(const std::vector<int>& blocks);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

// Rank of the symplectic group is dimension / 2; pieces come as formal products.
using SpOracle = std::function<Tri(const FormalProduct&)>;

struct ExponentConstraint {
    std::string condition;
    Tri satisfied = Tri::Unknown;  // Unknown doubles as not applicable (r = 0)
};

struct OrbitVerdict {
    OrbitDatum orbit;
    bool vanishes = false;
    std::string reason;
    ExponentConstraint gl_match;
    // Surviving pair of Jacquet terms, one from each factor (r > 0 only).
    std::optional<std::pair<JacquetTerm, JacquetTerm>> witness;
};

// Expands irreducible factors into quotient-order segment products.
FormalProduct segment_expansion(const FormalProduct& p);

OrbitVerdict orbit_term(const FormalProduct& s1, const FormalProduct& s2, const OrbitDatum& d,
                        const SpOracle& oracle);

struct MackeyBound {
    bool not_distinguished = false;
    int bound = 0;
    std::vector<OrbitVerdict> orbits;
    std::vector<OrbitDatum> surviving() const;
};

MackeyBound mackey_upper_bound(const FormalProduct& s1, const FormalProduct& s2,
                               const SpOracle& oracle);

FormalProduct as_product(const Multisegment& m);

}  // namespace zel
