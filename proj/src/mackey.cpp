#include "zel/mackey.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace zel {

std::vector<OrbitDatum> orbit_parameters(int n, int k) {
    if (n < 0 || k < 0 || k > 2 * n) throw std::invalid_argument("orbit_parameters needs 0 <= k <= 2n");
    std::vector<OrbitDatum> out;
    for (int r = k; r >= 0; r -= 2)
        if (r <= 2 * n - k) out.push_back({n, k, r});
    return out;
}

ModularExponents modular_exponents(const OrbitDatum& d) {
    return {d.r + d.a() + d.b() + 1, -(d.n - d.r + 1)};
}

std::vector<int> block_exponents(const std::vector<int>& blocks) {
    int total = std::accumulate(blocks.begin(), blocks.end(), 0);
    std::vector<int> out;
    int before = 0;
    for (int b : blocks) {
        out.push_back((total - before - b) - before);
        before += b;
    }
    return out;
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "Yes";
        case Tri::No: return "No";
        case Tri::Unknown: return "Unknown";
    }
    return "?";
}

FormalProduct as_product(const Multisegment& m) { return FormalProduct({m}); }

FormalProduct segment_expansion(const FormalProduct& p) {
    std::vector<Multisegment> out;
    for (const auto& f : p.absolute_factors()) {
        if (f.size() == 1) {
            out.push_back(f);
            continue;
        }
        for (const auto& g : presentation(f).absolute_factors()) out.push_back(g);
    }
    return FormalProduct(std::move(out));
}

namespace {

std::vector<SupportPoint> shift_support(std::vector<SupportPoint> s, int d2) {
    for (auto& p : s) p.second += d2;
    return s;
}

}  // namespace

OrbitVerdict orbit_term(const FormalProduct& s1, const FormalProduct& s2, const OrbitDatum& d,
                        const SpOracle& oracle) {
    if (s1.dimension() != d.k || s2.dimension() != 2 * d.n - d.k)
        throw std::invalid_argument("orbit_term: dimension mismatch");
    OrbitVerdict v{d, false, "", {}, std::nullopt};
    v.gl_match.condition = "supp(r-piece of sigma2) = supp(r-piece of sigma1) - 1";

    if (d.r == 0) {
        if (oracle(s1) == Tri::No) {
            v.vanishes = true;
            v.reason = "first factor has no symplectic period";
        } else if (oracle(s2) == Tri::No) {
            v.vanishes = true;
            v.reason = "second factor has no symplectic period";
        }
        return v;
    }

    auto t1 = jacquet_ss(segment_expansion(s1), d.r);
    auto t2 = jacquet_ss(segment_expansion(s2), 2 * d.n - d.k - d.r);
    std::map<std::vector<Multisegment>, Tri> memo;
    auto ask = [&](const FormalProduct& p) {
        auto key = p.absolute_factors();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo[key] = oracle(p);
    };

    bool any_gl_match = false;
    for (const auto& x : t1) {
        auto want = shift_support(cuspidal_support(x.left), -2);
        for (const auto& y : t2) {
            if (cuspidal_support(y.right) != want) continue;
            any_gl_match = true;
            if (ask(x.right) == Tri::No || ask(y.left) == Tri::No) continue;
            v.gl_match.satisfied = Tri::Yes;
            v.witness = std::make_pair(x, y);
            return v;
        }
    }
    v.vanishes = true;
    v.gl_match.satisfied = any_gl_match ? Tri::Yes : Tri::No;
    v.reason = any_gl_match ? "symplectic pieces of every matching term fail"
                            : "GL_r supports never match after the nu^-1 twist";
    return v;
}

std::vector<OrbitDatum> MackeyBound::surviving() const {
    std::vector<OrbitDatum> out;
    for (const auto& o : orbits)
        if (!o.vanishes) out.push_back(o.orbit);
    return out;
}

MackeyBound mackey_upper_bound(const FormalProduct& s1, const FormalProduct& s2,
                               const SpOracle& oracle) {
    int total = s1.dimension() + s2.dimension();
    if (total % 2 != 0) throw std::invalid_argument("mackey_upper_bound needs even total rank");
    MackeyBound mb;
    for (const auto& d : orbit_parameters(total / 2, s1.dimension())) {
        mb.orbits.push_back(orbit_term(s1, s2, d, oracle));
        if (!mb.orbits.back().vanishes) ++mb.bound;
    }
    mb.not_distinguished = mb.bound == 0;
    return mb;
}

}  // namespace zel
