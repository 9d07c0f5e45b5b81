#include "zel/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "zel/notation.hpp"

namespace zel {

const char* to_string(Status s) {
    switch (s) {
        case Status::Distinguished: return "Distinguished";
        case Status::NotDistinguished: return "NotDistinguished";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

const std::vector<RuleInfo>& rule_registry() {
    static const std::vector<RuleInfo> rules = {
        {"OS-PRODUCT",
         "\\chi_{1}U(\\delta_{1},2m_{1})\\times\\cdots\\times\\chi_{t}U(\\delta_{t},2m_{t})",
         RuleKind::Positive},
        {"EXISTENCE-336", "their intersection is of odd length", RuleKind::Positive},
        {"HEREDITARY", "then $\\pi_{1}\\times\\pi_{2}\\times\\pi_{3}$ has a symplectic period",
         RuleKind::Positive},
        {"ODD-RANK", "each $n_{i}$ is even", RuleKind::Negative},
        {"UNLINKED-FACTOR", "every $\\pi_{i}$ has a symplectic period", RuleKind::Negative},
        {"GENERIC", "it does so in a unique Klyachko model", RuleKind::Negative},
        {"MIXED-MODEL", "it has a mixed Klyachko model", RuleKind::Negative},
        {"JUXTAPOSED-337", "juxtaposed segments of even lengths", RuleKind::Negative},
        {"MACKEY-VANISH", "is obtained by glueing the representations", RuleKind::Negative},
        {"EXACT-SEQUENCE", "we obtain the following long exact sequence", RuleKind::Negative},
        {"CONTRAGREDIENT", "if and only if its contragredient has so", RuleKind::Fallback},
        {"GL4-TABLE", "complete list of irreducible admissible representations", RuleKind::Fallback},
        {"GL6-TABLE", "or is a twist of $Z([1,\\nu],[\\nu,\\nu^{4}])$, or its dual",
         RuleKind::Fallback},
    };
    return rules;
}

const RuleInfo& rule_info(const std::string& name) {
    for (const auto& r : rule_registry())
        if (r.name == name) return r;
    throw std::invalid_argument("unknown rule '" + name + "'");
}

namespace {

Verdict fired(Status s, const std::string& rule, std::string detail) {
    return {s, {{rule, rule_info(rule).anchor, std::move(detail)}}};
}

struct SpehShape {
    int d = 0;
    int t = 0;
};

// Ladder of d equal-length segments with consecutive starts.
std::optional<SpehShape> speh_shape(const Multisegment& b) {
    if (b.empty() || !b.single_line()) return std::nullopt;
    const auto& s = b.segments();
    int t = s.front().length();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].length() != t) return std::nullopt;
        if (i > 0 && s[i].start != s[i - 1].start + 1) return std::nullopt;
    }
    return SpehShape{static_cast<int>(s.size()), t};
}

bool pairwise_unlinked(const std::vector<Segment>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (linked(s[i], s[j])) return false;
    return true;
}

bool blocks_unlinked(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            for (const auto& x : p[i].segments())
                for (const auto& y : p[j].segments())
                    if (linked(x, y)) return false;
    return true;
}

bool touching(const Segment& a, const Segment& b) {
    return a.line == b.line && a.start <= b.end + 1 && b.start <= a.end + 1;
}

// Classes of the "union is an interval" relation; across classes segments are
// disjoint and unlinked.
std::vector<Multisegment> components(const Multisegment& m) {
    const auto& s = m.segments();
    std::vector<std::size_t> parent(s.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (touching(s[i], s[j])) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<Segment>> groups;
    for (std::size_t i = 0; i < s.size(); ++i) groups[find(i)].push_back(s[i]);
    std::vector<Multisegment> out;
    for (auto& [root, g] : groups) out.emplace_back(std::move(g), Form::Z, m.twist2());
    std::sort(out.begin(), out.end());
    return out;
}

std::string partition_text(const Partition& p) {
    std::string out;
    for (const auto& b : p) {
        if (!out.empty()) out += " x ";
        out += to_text(b);
    }
    return out;
}

std::string orbit_text(const MackeyBound& mb) {
    std::string out;
    for (const auto& o : mb.orbits) {
        if (!out.empty()) out += "; ";
        out += "r=" + std::to_string(o.orbit.r) + ": " + (o.vanishes ? o.reason : "survives");
    }
    return out;
}

bool same_intervals(const Multisegment& m, const std::vector<std::pair<int, int>>& want) {
    if (!m.single_line() || m.segments().front().line.degree != 1) return false;
    std::vector<std::pair<int, int>> have;
    for (const auto& s : m.segments()) have.emplace_back(s.start, s.end);
    auto w = want;
    std::sort(w.begin(), w.end());
    return have == w;
}

}  // namespace

Multisegment canonical_input(const Multisegment& m) {
    if (m.empty()) throw std::invalid_argument("empty multisegment");
    return normalized(to_Z_form(m)).with_twist2(0);
}

bool gl4_table(const Multisegment& input) {
    if (input.total_dimension() != 4) throw std::invalid_argument("gl4_table needs rank 4");
    Multisegment m = canonical_input(input);
    const auto& s = m.segments();
    if (s.size() == 1)
        return (s[0].line.degree == 2 && s[0].length() == 2) ||
               (s[0].line.degree == 1 && s[0].length() == 4);
    if (s.size() != 2) return false;
    if (same_intervals(m, {{0, 1}, {1, 2}})) return true;
    return s[0].line.degree == 1 && s[1].line.degree == 1 && s[0].length() == 2 &&
           s[1].length() == 2 && !linked(s[0], s[1]);
}

bool gl6_table(const Multisegment& input) {
    if (input.total_dimension() != 6) throw std::invalid_argument("gl6_table needs rank 6");
    Multisegment m = canonical_input(input);
    for (const auto& p : ordered_partitions(m)) {
        bool speh = std::all_of(p.begin(), p.end(), [](const Multisegment& b) {
            auto sh = speh_shape(b);
            return sh && sh->t % 2 == 0;
        });
        if (speh && blocks_unlinked(p)) return true;
    }
    return same_intervals(m, {{0, 1}, {1, 2}, {1, 2}}) ||
           same_intervals(m, {{0, 1}, {0, 1}, {1, 2}}) || same_intervals(m, {{0, 1}, {1, 4}}) ||
           same_intervals(m, {{0, 3}, {3, 4}});
}

Verdict Classifier::classify(const Multisegment& m) { return classify(m, Options{}); }

Verdict Classifier::classify(const Multisegment& m, const Options& opt) {
    Multisegment key = canonical_input(m);
    if (key.total_dimension() % 2 != 0)
        throw std::invalid_argument("odd total dimension " + std::to_string(key.total_dimension()));
    int bits = (opt.contragredient_retry ? 1 : 0) | (opt.tables ? 2 : 0);
    auto it = memo_.find({key, bits});
    if (it != memo_.end()) return it->second;
    Verdict v = run(key, opt);
    memo_[{key, bits}] = v;
    return v;
}

Verdict Classifier::run(const Multisegment& m, const Options& opt) {
    for (const auto& r : rule_registry())
        if (auto v = fire(r.name, m, opt)) return *v;
    return {};
}

std::optional<Verdict> Classifier::apply_rule(const std::string& name, const Multisegment& m) {
    rule_info(name);
    Multisegment key = canonical_input(m);
    if (key.total_dimension() % 2 != 0) throw std::invalid_argument("odd total dimension");
    return fire(name, key, Options{});
}

SpOracle Classifier::oracle() {
    return [this](const FormalProduct& p) { return sp_oracle(p); };
}

MackeyBound Classifier::mackey(const FormalProduct& s1, const FormalProduct& s2) {
    return mackey_upper_bound(s1, s2, oracle());
}

Tri Classifier::sp_oracle(const FormalProduct& p) {
    int d = p.dimension();
    if (d == 0) return Tri::Yes;
    if (d % 2 != 0) return Tri::No;
    std::vector<Multisegment> key;
    for (const auto& f : align_twists(p.absolute_factors())) key.push_back(to_Z_form(f).with_twist2(0));
    auto it = sp_memo_.find(key);
    if (it != sp_memo_.end()) return it->second;

    Tri out = Tri::Unknown;
    if (key.size() == 1 || certified_irreducible(key)) {
        switch (classify(merged(key)).status) {
            case Status::Distinguished: out = Tri::Yes; break;
            case Status::NotDistinguished: out = Tri::No; break;
            case Status::Unknown: out = Tri::Unknown; break;
        }
    } else {
        std::vector<Multisegment> rest(key.begin() + 1, key.end());
        if (mackey(FormalProduct({key.front()}), FormalProduct(rest)).not_distinguished) out = Tri::No;
    }
    sp_memo_[key] = out;
    return out;
}

std::optional<Verdict> Classifier::fire(const std::string& name, const Multisegment& m,
                                        const Options& opt) {
    const auto& s = m.segments();
    const int rank = m.total_dimension();

    if (name == "OS-PRODUCT") {
        if (s.size() > 10) return std::nullopt;
        for (const auto& p : ordered_partitions(m)) {
            bool ok = std::all_of(p.begin(), p.end(), [](const Multisegment& b) {
                auto sh = speh_shape(b);
                return sh && sh->t % 2 == 0;
            });
            if (ok && (p.size() == 1 || certified_irreducible(p)))
                return fired(Status::Distinguished, name, "Speh blocks " + partition_text(p));
        }
        return std::nullopt;
    }

    if (name == "EXISTENCE-336") {
        if (s.size() != 2 || !(s[0].line == s[1].line)) return std::nullopt;
        if (s[0].length() % 2 != 0 || s[1].length() % 2 != 0) return std::nullopt;
        auto meet = intersection(s[0], s[1]);
        if (!meet || meet->length() % 2 == 0) return std::nullopt;
        return fired(Status::Distinguished, name,
                     "intersection " + to_text(*meet) + " of length " + std::to_string(meet->length()));
    }

    if (name == "HEREDITARY") {
        if (rank > 6) return std::nullopt;
        for (const auto& p : ordered_partitions(m)) {
            if (p.size() < 2) continue;
            bool ok = std::all_of(p.begin(), p.end(), [&](const Multisegment& b) {
                int r = b.total_dimension();
                return (r == 2 || r == 4) && classify(b).status == Status::Distinguished;
            });
            if (ok && certified_irreducible(p))
                return fired(Status::Distinguished, name, "distinguished factors " + partition_text(p));
        }
        return std::nullopt;
    }

    if (name == "ODD-RANK" || name == "UNLINKED-FACTOR") {
        auto comps = components(m);
        if (comps.size() < 2) return std::nullopt;
        bool odd = std::any_of(comps.begin(), comps.end(),
                               [](const Multisegment& c) { return c.total_dimension() % 2 != 0; });
        if (name == "ODD-RANK") {
            if (!odd) return std::nullopt;
            return fired(Status::NotDistinguished, name, "components " + partition_text(comps));
        }
        if (odd) return std::nullopt;
        for (const auto& c : comps)
            if (classify(c).status == Status::NotDistinguished)
                return fired(Status::NotDistinguished, name,
                             "component " + to_text(c) + " of " + partition_text(comps));
        return std::nullopt;
    }

    if (name == "GENERIC") {
        Multisegment dual = zelevinsky_dual(m);
        if (!pairwise_unlinked(dual.segments())) return std::nullopt;
        return fired(Status::NotDistinguished, name, "dual " + to_text(dual) + " is pairwise unlinked");
    }

    if (name == "MIXED-MODEL") {
        if (!pairwise_unlinked(s)) return std::nullopt;
        auto odd = std::find_if(s.begin(), s.end(), [](const Segment& x) { return x.length() % 2; });
        if (odd == s.end()) return std::nullopt;
        return fired(Status::NotDistinguished, name, "unlinked product with odd segment " + to_text(*odd));
    }

    if (name == "JUXTAPOSED-337") {
        if (s.size() != 2 || s[0].line.degree != 1) return std::nullopt;
        auto rel = segment_relation(s[0], s[1]);
        if (rel != SegmentRelation::JuxtaposedBefore && rel != SegmentRelation::JuxtaposedAfter)
            return std::nullopt;
        if (s[0].length() % 2 != 0 || s[1].length() % 2 != 0) return std::nullopt;
        return fired(Status::NotDistinguished, name, "juxtaposed " + to_text(m));
    }

    if (name == "MACKEY-VANISH") {
        const std::size_t k = s.size();
        if (k < 2 || k > 12) return std::nullopt;
        std::set<std::pair<Multisegment, Multisegment>> tried;
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<Segment> a, b;
            for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? a : b).push_back(s[i]);
            bool quotient_order = true;
            for (const auto& x : a)
                for (const auto& y : b)
                    if (precedes(y, x)) quotient_order = false;
            Multisegment mu1(a, Form::Z, m.twist2()), mu2(b, Form::Z, m.twist2());
            if (!quotient_order && !certified_irreducible({mu1, mu2})) continue;
            if (!tried.insert({mu1, mu2}).second) continue;
            auto mb = mackey(as_product(mu1), as_product(mu2));
            if (mb.not_distinguished)
                return fired(Status::NotDistinguished, name,
                             "quotient of " + to_text(mu1) + " x " + to_text(mu2) + " [" + orbit_text(mb) + "]");
        }
        return std::nullopt;
    }

    if (name == "EXACT-SEQUENCE") {
        if (s.size() != 2 || s[0].line.degree != 1) return std::nullopt;
        auto rel = segment_relation(s[0], s[1]);
        if (rel != SegmentRelation::JuxtaposedBefore && rel != SegmentRelation::JuxtaposedAfter)
            return std::nullopt;
        const Segment& d1 = s[0].start < s[1].start ? s[0] : s[1];
        const Segment& d2 = s[0].start < s[1].start ? s[1] : s[0];
        Segment d3(d1.line, d1.start, d2.end);
        Multisegment quotient({d3}, Form::Z, m.twist2());
        if (classify(quotient).status != Status::Distinguished) return std::nullopt;
        auto mb = mackey(as_product(Multisegment({d2}, Form::Z, m.twist2())),
                         as_product(Multisegment({d1}, Form::Z, m.twist2())));
        auto surv = mb.surviving();
        if (mb.bound != 1 || surv.size() != 1 || surv.front().r != 0) return std::nullopt;
        return fired(Status::NotDistinguished, name,
                     "sub of " + to_text(Multisegment({d2})) + " x " + to_text(Multisegment({d1})) +
                         " with character quotient " + to_text(quotient) + ", bound 1 at r=0");
    }

    if (name == "CONTRAGREDIENT") {
        if (!opt.contragredient_retry) return std::nullopt;
        Multisegment c = canonical_input(contragredient(m));
        if (c == m) return std::nullopt;
        Verdict inner = classify(c, Options{false, false});
        if (inner.status == Status::Unknown) return std::nullopt;
        Verdict v = fired(inner.status, name, "contragredient " + to_text(c));
        v.trace.insert(v.trace.end(), inner.trace.begin(), inner.trace.end());
        return v;
    }

    if (name == "GL4-TABLE") {
        if (!opt.tables || rank != 4) return std::nullopt;
        bool in = gl4_table(m);
        return fired(in ? Status::Distinguished : Status::NotDistinguished, name,
                     in ? "listed" : "not listed");
    }

    if (name == "GL6-TABLE") {
        if (!opt.tables || rank != 6) return std::nullopt;
        bool in = gl6_table(m);
        return fired(in ? Status::Distinguished : Status::NotDistinguished, name,
                     in ? "listed" : "not listed");
    }

    throw std::invalid_argument("unknown rule '" + name + "'");
}

bool Classifier::replay(const Multisegment& m, const Verdict& v) {
    if (v.trace.empty()) return v.status == Status::Unknown;
    Multisegment cur = canonical_input(m);
    for (std::size_t i = 0; i + 1 < v.trace.size(); ++i) {
        if (v.trace[i].rule != "CONTRAGREDIENT") return false;
        cur = canonical_input(contragredient(cur));
    }
    const TraceStep& last = v.trace.back();
    if (last.anchor != rule_info(last.rule).anchor) return false;
    auto again = fire(last.rule, cur, Options{});
    return again && again->status == v.status && again->trace.front() == last;
}

std::vector<Multisegment> scan_corpus(int rank, int window) {
    if (rank < 2 || rank % 2 != 0) throw std::invalid_argument("scan rank must be even and positive");
    if (window < 0) throw std::invalid_argument("window must be nonnegative");
    std::vector<Segment> pool;
    for (int b = 0; b <= window; ++b)
        for (int e = b; e <= window; ++e) pool.emplace_back(b, e);

    std::vector<Multisegment> out;
    std::vector<Segment> cur;
    auto go = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            if (std::any_of(cur.begin(), cur.end(), [](const Segment& x) { return x.start == 0; }))
                out.push_back(Z(cur));
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (pool[i].length() > left) continue;
            cur.push_back(pool[i]);
            self(self, i, left - pool[i].length());
            cur.pop_back();
        }
    };
    go(go, 0, rank);
    std::sort(out.begin(), out.end());

    CuspidalLine l2("rho2", 2), l3("rho3", 3);
    if (rank == 2) out.push_back(Z({Segment(l2, 0, 0)}));
    if (rank == 4) out.push_back(Z({Segment(l2, 0, 1)}));
    if (rank == 6) {
        out.push_back(Z({Segment(l2, 0, 2)}));
        out.push_back(Z({Segment(l3, 0, 1)}));
    }
    return out;
}

ConjectureReport verify_conjectures(int window, const std::vector<int>& ranks, Classifier& c) {
    if (window < 6) throw std::invalid_argument("verify_conjectures needs window >= 6");
    ConjectureReport rep;
    for (int rank : ranks) {
        RankSummary sum;
        sum.rank = rank;
        for (const auto& m : scan_corpus(rank, window)) {
            ++sum.inputs;
            Verdict v = c.classify(m);
            bool g = in_G(m).has_value();
            if (g) ++sum.g_members;
            switch (v.status) {
                case Status::Distinguished: ++sum.distinguished; break;
                case Status::NotDistinguished: ++sum.not_distinguished; break;
                case Status::Unknown:
                    ++sum.unknown;
                    rep.unknowns.push_back(m);
                    break;
            }
            if (!v.trace.empty() && rule_info(v.trace.back().rule).kind == RuleKind::Fallback &&
                v.trace.back().rule != "CONTRAGREDIENT")
                ++sum.table_verdicts;
            if (v.status != Status::Unknown && (v.status == Status::Distinguished) != g)
                rep.mismatches.push_back({m, v.status, g});

            LineReduction red = reduce_line(m);
            Status predicted = red.even() ? c.classify(red.pattern).status : Status::NotDistinguished;
            if (predicted != v.status) rep.reduction_failures.push_back(m);
        }
        rep.ranks.push_back(sum);
    }
    return rep;
}

}  // namespace zel
