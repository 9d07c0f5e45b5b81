#include "zel/product.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace zel {

int FormalProduct::dimension() const {
    int d = 0;
    for (const auto& f : factors) d += f.total_dimension();
    return d;
}

std::vector<Multisegment> FormalProduct::absolute_factors() const {
    std::vector<Multisegment> out;
    for (const auto& f : factors) out.push_back(f.with_twist2(f.twist2() + twist2));
    return out;
}

CompositionSeries decompose_pair(const Segment& a, const Segment& b, Form form) {
    CompositionSeries cs;
    Multisegment whole({a, b}, form);
    if (!linked(a, b)) {
        cs.socle = cs.cosocle = whole;
        cs.all_factors = {whole};
        cs.length = 1;
        return cs;
    }
    Segment u(a.line, std::min(a.start, b.start), std::max(a.end, b.end));
    std::vector<Segment> ui{u};
    if (auto i = intersection(a, b)) ui.push_back(*i);
    Multisegment split(ui, form);
    bool a_first = precedes(a, b);
    // Z: a preceding b puts union x intersection at the bottom; Q mirrors it.
    bool split_is_socle = (form == Form::Z) == a_first;
    cs.socle = split_is_socle ? split : whole;
    cs.cosocle = split_is_socle ? whole : split;
    cs.all_factors = {whole, split};
    std::sort(cs.all_factors.begin(), cs.all_factors.end());
    cs.length = 2;
    return cs;
}

std::vector<Multisegment> align_twists(const std::vector<Multisegment>& fs) {
    std::vector<Multisegment> out;
    if (fs.empty()) return out;
    int t0 = fs.front().twist2();
    for (const auto& f : fs) {
        int d = f.twist2() - t0;
        if (d % 2 == 0) {
            out.push_back(f.shifted(d / 2).with_twist2(t0));
            continue;
        }
        // Primed lines sit at t0 + 1.
        int k = (d - 1) / 2;
        std::vector<Segment> v;
        for (const auto& s : f.segments())
            v.emplace_back(CuspidalLine(s.line.label + "'", s.line.degree), s.start + k, s.end + k);
        out.emplace_back(std::move(v), f.form(), t0);
    }
    return out;
}

Multisegment merged(const std::vector<Multisegment>& fs) {
    if (fs.empty()) return {};
    std::vector<Segment> all;
    auto aligned = align_twists(fs);
    for (const auto& f : aligned) {
        auto z = to_Z_form(f);
        all.insert(all.end(), z.segments().begin(), z.segments().end());
    }
    return Multisegment(std::move(all), Form::Z, aligned.front().twist2());
}

namespace {

bool cross_unlinked(const std::vector<Multisegment>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            for (const auto& x : fs[i].segments())
                for (const auto& y : fs[j].segments())
                    if (linked(x, y)) return false;
    return true;
}

using PairKey = std::pair<Multisegment, Multisegment>;

PairKey pair_key(const Multisegment& a, const Multisegment& b) {
    std::vector<Segment> all = a.segments();
    all.insert(all.end(), b.segments().begin(), b.segments().end());
    int low = std::min_element(all.begin(), all.end(), [](const Segment& x, const Segment& y) {
                  return x.start < y.start;
              })->start;
    Multisegment x = a.shifted(-low).with_twist2(0), y = b.shifted(-low).with_twist2(0);
    if (y < x) std::swap(x, y);
    return {x, y};
}

// Irreducible products with linked cross pairs, closed under contragredient and
// the involution.
const std::set<PairKey>& certified_pairs() {
    static const std::set<PairKey> table = [] {
        std::vector<std::pair<Multisegment, Multisegment>> seed = {
            {Z({{1, 2}}), Z({{0, 1}, {1, 2}})},
            {Z({{2, 3}}), Z({{0, 1}, {2, 3}})},
            {Z({{1, 1}, {2, 2}}), Z({{0, 1}, {1, 2}})},
        };
        std::set<PairKey> t;
        for (const auto& [a, b] : seed) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    Multisegment x = a, y = b;
                    if (c) {
                        std::vector<Segment> vx, vy;
                        for (const auto& s : x.segments()) vx.emplace_back(s.line, -s.end, -s.start);
                        for (const auto& s : y.segments()) vy.emplace_back(s.line, -s.end, -s.start);
                        x = Z(vx);
                        y = Z(vy);
                    }
                    if (d) {
                        x = zelevinsky_dual(x);
                        y = zelevinsky_dual(y);
                    }
                    t.insert(pair_key(x, y));
                }
            }
        }
        return t;
    }();
    return table;
}

bool single_degree_one_line(const std::vector<Multisegment>& fs) {
    const Segment& s0 = fs.front().segments().front();
    if (s0.line.degree != 1) return false;
    for (const auto& f : fs)
        for (const auto& s : f.segments())
            if (!(s.line == s0.line)) return false;
    return true;
}

}  // namespace

IrreducibilityCertificate product_irreducible(const std::vector<Multisegment>& factors) {
    for (const auto& f : factors)
        if (f.empty()) throw std::invalid_argument("empty factor");
    if (factors.size() <= 1) return {Irreducibility::Irreducible, "single factor"};

    auto aligned = align_twists(factors);
    bool same_form = std::all_of(aligned.begin(), aligned.end(),
                                 [&](const Multisegment& f) { return f.form() == aligned[0].form(); });
    bool segments_only = std::all_of(aligned.begin(), aligned.end(),
                                     [](const Multisegment& f) { return f.size() == 1; });
    if (same_form) {
        if (cross_unlinked(aligned)) return {Irreducibility::Irreducible, "cross pairs unlinked"};
        if (segments_only) return {Irreducibility::Reducible, "linked pair of segment factors"};
    }

    std::vector<Multisegment> zs;
    for (const auto& f : aligned) zs.push_back(to_Z_form(f));
    if (cross_unlinked(zs)) return {Irreducibility::Irreducible, "cross pairs unlinked"};
    if (zs.size() == 2 && single_degree_one_line(zs) &&
        certified_pairs().count(pair_key(zs[0], zs[1])))
        return {Irreducibility::Irreducible, "ladder times segment, certified instance"};
    return {Irreducibility::Unknown, ""};
}

bool certified_irreducible(const std::vector<Multisegment>& factors) {
    return product_irreducible(factors).verdict == Irreducibility::Irreducible;
}

std::optional<Partition> in_G(const Multisegment& m) { return in_G(m, certified_irreducible); }

SubquotientSet enumerate_subquotients(const std::vector<Segment>& factors, Form form) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    for (const auto& s : factors)
        if (!(s.line == factors.front().line))
            throw std::invalid_argument("subquotients need a single cuspidal line");
    std::set<Multisegment> seen;
    std::deque<Multisegment> todo;
    Multisegment start(factors, Form::Z);
    seen.insert(start);
    todo.push_back(start);
    while (!todo.empty()) {
        Multisegment cur = todo.front();
        todo.pop_front();
        const auto& s = cur.segments();
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                if (!linked(s[i], s[j])) continue;
                std::vector<Segment> next;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != i && k != j) next.push_back(s[k]);
                next.emplace_back(s[i].line, std::min(s[i].start, s[j].start),
                                  std::max(s[i].end, s[j].end));
                if (auto meet = intersection(s[i], s[j])) next.push_back(*meet);
                Multisegment m(std::move(next), Form::Z);
                if (seen.insert(m).second) todo.push_back(m);
            }
        }
    }
    SubquotientSet out;
    for (const auto& m : seen) out.items.push_back(m.with_form(form));
    out.certified = factors.size() <= 3;
    return out;
}

namespace {

std::vector<Segment> dual_line(std::vector<Segment> segs) {
    std::vector<Segment> out;
    while (!segs.empty()) {
        std::size_t cur = 0;
        for (std::size_t i = 1; i < segs.size(); ++i) {
            if (segs[i].end > segs[cur].end ||
                (segs[i].end == segs[cur].end && segs[i].start > segs[cur].start))
                cur = i;
        }
        std::vector<std::size_t> chain{cur};
        for (;;) {
            const Segment& last = segs[chain.back()];
            std::optional<std::size_t> next;
            for (std::size_t i = 0; i < segs.size(); ++i) {
                if (segs[i].end != last.end - 1 || segs[i].start >= last.start) continue;
                if (std::find(chain.begin(), chain.end(), i) != chain.end()) continue;
                if (!next || segs[i].start > segs[*next].start) next = i;
            }
            if (!next) break;
            chain.push_back(*next);
        }
        out.emplace_back(segs[cur].line, segs[chain.back()].end, segs[cur].end);
        std::vector<Segment> rest;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            Segment s = segs[i];
            if (std::find(chain.begin(), chain.end(), i) != chain.end()) {
                if (s.start == s.end) continue;
                s.end -= 1;
            }
            rest.push_back(s);
        }
        segs = std::move(rest);
    }
    return out;
}

}  // namespace

Multisegment zelevinsky_dual(const Multisegment& m) {
    std::map<std::string, std::vector<Segment>> by_line;
    for (const auto& s : m.segments()) by_line[s.line.label].push_back(s);
    std::vector<Segment> out;
    for (auto& [label, segs] : by_line) {
        auto d = dual_line(segs);
        out.insert(out.end(), d.begin(), d.end());
    }
    return Multisegment(std::move(out), m.form(), m.twist2());
}

Multisegment to_Z_form(const Multisegment& m) {
    if (m.form() == Form::Z) return m;
    return zelevinsky_dual(m).with_form(Form::Z);
}

Multisegment contragredient(const Multisegment& m) {
    std::vector<Segment> v;
    for (const auto& s : m.segments()) v.emplace_back(s.line, -s.end, -s.start);
    return normalized(Multisegment(std::move(v), m.form(), -m.twist2()));
}

FormalProduct presentation(const Multisegment& m) {
    std::vector<Segment> segs = m.segments();
    std::stable_sort(segs.begin(), segs.end(), [&](const Segment& a, const Segment& b) {
        return m.form() == Form::Z ? a.start < b.start : a.start > b.start;
    });
    std::vector<Multisegment> fs;
    for (const auto& s : segs) fs.emplace_back(std::vector<Segment>{s}, m.form(), m.twist2());
    return FormalProduct(std::move(fs));
}

std::vector<JacquetTerm> jacquet_ss(const FormalProduct& p, int k) {
    auto fs = p.absolute_factors();
    for (const auto& f : fs)
        if (f.size() != 1)
            throw std::invalid_argument("jacquet_ss needs segment factors");
    std::vector<JacquetTerm> out;
    if (k < 0 || k > p.dimension()) return out;

    std::vector<Multisegment> left, right;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int need) {
        if (i == fs.size()) {
            if (need == 0) out.push_back({FormalProduct(left), FormalProduct(right)});
            return;
        }
        const Segment& s = fs[i].segments().front();
        for (int j = 0; j <= s.length(); ++j) {
            int dim = j * s.line.degree;
            if (dim > need) break;
            std::optional<Segment> l, r;
            if (fs[i].form() == Form::Z) {
                if (j > 0) l = Segment(s.line, s.start, s.start + j - 1);
                if (j < s.length()) r = Segment(s.line, s.start + j, s.end);
            } else {
                if (j > 0) l = Segment(s.line, s.end - j + 1, s.end);
                if (j < s.length()) r = Segment(s.line, s.start, s.end - j);
            }
            if (l) left.emplace_back(std::vector<Segment>{*l}, fs[i].form(), fs[i].twist2());
            if (r) right.emplace_back(std::vector<Segment>{*r}, fs[i].form(), fs[i].twist2());
            go(i + 1, need - dim);
            if (l) left.pop_back();
            if (r) right.pop_back();
        }
    };
    go(0, k);
    return out;
}

std::vector<SupportPoint> cuspidal_support(const Multisegment& m) {
    std::vector<SupportPoint> out;
    for (const auto& s : m.segments())
        for (int i = s.start; i <= s.end; ++i) out.emplace_back(s.line.label, 2 * i + m.twist2());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SupportPoint> cuspidal_support(const FormalProduct& p) {
    std::vector<SupportPoint> out;
    for (const auto& f : p.absolute_factors()) {
        auto s = cuspidal_support(f);
        out.insert(out.end(), s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool jacquet_support_within(const Multisegment& theta, const JacquetTerm& t) {
    auto whole = cuspidal_support(theta);
    std::set<SupportPoint> allowed(whole.begin(), whole.end());
    for (const auto* side : {&t.left, &t.right})
        for (const auto& pt : cuspidal_support(*side))
            if (!allowed.count(pt)) return false;
    return true;
}

}  // namespace zel
