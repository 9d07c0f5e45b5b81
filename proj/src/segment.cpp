#include "zel/segment.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zel {

CuspidalLine::CuspidalLine(std::string l, int d) : label(std::move(l)), degree(d) {
    if (label.empty()) throw std::invalid_argument("cuspidal line needs a label");
    if (degree < 1) throw std::invalid_argument("cuspidal line degree must be >= 1");
}

Segment::Segment(int b, int e) : Segment(CuspidalLine{}, b, e) {}

Segment::Segment(CuspidalLine l, int b, int e) : line(std::move(l)), start(b), end(e) {
    if (start > end) throw std::invalid_argument("segment start exceeds end");
}

bool Segment::operator==(const Segment& o) const {
    return line == o.line && start == o.start && end == o.end;
}

bool Segment::operator<(const Segment& o) const {
    if (line.label != o.line.label) return line.label < o.line.label;
    if (start != o.start) return start < o.start;
    return end < o.end;
}

const char* to_string(SegmentRelation r) {
    switch (r) {
        case SegmentRelation::Equal: return "Equal";
        case SegmentRelation::ContainedIn: return "ContainedIn";
        case SegmentRelation::Contains: return "Contains";
        case SegmentRelation::UnlinkedDisjoint: return "Unlinked-Disjoint";
        case SegmentRelation::JuxtaposedBefore: return "Juxtaposed-Before";
        case SegmentRelation::JuxtaposedAfter: return "Juxtaposed-After";
        case SegmentRelation::LinkedPrecedes: return "Linked-Precedes";
        case SegmentRelation::LinkedPreceded: return "Linked-Preceded";
        case SegmentRelation::DifferentLines: return "DifferentLines";
    }
    return "?";
}

SegmentRelation segment_relation(const Segment& a, const Segment& b) {
    if (!(a.line == b.line)) return SegmentRelation::DifferentLines;
    if (a.start == b.start && a.end == b.end) return SegmentRelation::Equal;
    if (b.start <= a.start && a.end <= b.end) return SegmentRelation::ContainedIn;
    if (a.start <= b.start && b.end <= a.end) return SegmentRelation::Contains;
    if (a.end + 1 < b.start || b.end + 1 < a.start) return SegmentRelation::UnlinkedDisjoint;
    bool before = a.start < b.start;
    if (a.end < b.start || b.end < a.start)
        return before ? SegmentRelation::JuxtaposedBefore : SegmentRelation::JuxtaposedAfter;
    return before ? SegmentRelation::LinkedPrecedes : SegmentRelation::LinkedPreceded;
}

bool linked(const Segment& a, const Segment& b) {
    switch (segment_relation(a, b)) {
        case SegmentRelation::JuxtaposedBefore:
        case SegmentRelation::JuxtaposedAfter:
        case SegmentRelation::LinkedPrecedes:
        case SegmentRelation::LinkedPreceded:
            return true;
        default:
            return false;
    }
}

bool precedes(const Segment& a, const Segment& b) {
    return linked(a, b) && a.start < b.start;
}

std::optional<Segment> intersection(const Segment& a, const Segment& b) {
    if (!(a.line == b.line)) return std::nullopt;
    int s = std::max(a.start, b.start), e = std::min(a.end, b.end);
    if (s > e) return std::nullopt;
    return Segment(a.line, s, e);
}

Multisegment::Multisegment(std::vector<Segment> segs, Form form, int twist2)
    : segs_(std::move(segs)), form_(form), twist2_(twist2) {
    std::map<std::string, int> degrees;
    for (const auto& s : segs_) {
        auto [it, fresh] = degrees.emplace(s.line.label, s.line.degree);
        if (!fresh && it->second != s.line.degree)
            throw std::invalid_argument("line '" + s.line.label + "' used with two degrees");
    }
    std::sort(segs_.begin(), segs_.end());
}

int Multisegment::total_dimension() const {
    int d = 0;
    for (const auto& s : segs_) d += s.dimension();
    return d;
}

bool Multisegment::single_line() const {
    return std::all_of(segs_.begin(), segs_.end(),
                       [&](const Segment& s) { return s.line == segs_.front().line; });
}

std::vector<CuspidalLine> Multisegment::lines() const {
    std::vector<CuspidalLine> out;
    for (const auto& s : segs_)
        if (out.empty() || !(out.back() == s.line)) out.push_back(s.line);
    return out;
}

Multisegment Multisegment::shifted(int k) const {
    std::vector<Segment> v;
    v.reserve(segs_.size());
    for (const auto& s : segs_) v.emplace_back(s.line, s.start + k, s.end + k);
    return Multisegment(std::move(v), form_, twist2_);
}

bool Multisegment::operator<(const Multisegment& o) const {
    if (segs_ != o.segs_)
        return std::lexicographical_compare(segs_.begin(), segs_.end(), o.segs_.begin(),
                                            o.segs_.end());
    if (form_ != o.form_) return form_ < o.form_;
    return twist2_ < o.twist2_;
}

Multisegment Z(std::vector<Segment> segs) { return Multisegment(std::move(segs), Form::Z); }
Multisegment Q(std::vector<Segment> segs) { return Multisegment(std::move(segs), Form::Q); }

std::pair<Multisegment, int> normalize_twist(const Multisegment& m) {
    if (m.empty()) throw std::invalid_argument("empty multisegment");
    std::map<std::string, int> low;
    for (const auto& s : m.segments()) {
        auto it = low.find(s.line.label);
        if (it == low.end()) low.emplace(s.line.label, s.start);
        else it->second = std::min(it->second, s.start);
    }
    std::vector<Segment> v;
    for (const auto& s : m.segments()) {
        int b = low.at(s.line.label);
        v.emplace_back(s.line, s.start - b, s.end - b);
    }
    int twist2 = m.twist2() + 2 * low.begin()->second;
    return {Multisegment(std::move(v), m.form(), twist2), twist2};
}

Multisegment normalized(const Multisegment& m) { return normalize_twist(m).first; }

bool same_pattern(const Multisegment& a, const Multisegment& b) {
    if (a.empty() || b.empty()) return a.empty() && b.empty() && a.form() == b.form();
    auto x = normalized(a), y = normalized(b);
    return x.segments() == y.segments() && x.form() == y.form();
}

GPrimeResult in_G_prime(const Multisegment& m) {
    if (m.empty()) throw std::invalid_argument("empty multisegment");
    const auto& s = m.segments();
    if (!m.single_line()) return {false, 1};
    for (const auto& x : s)
        if (x.length() % 2 != 0) return {false, 2};
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].start == s[i - 1].start) return {false, 3};
    for (std::size_t i = 1; i < s.size(); ++i) {
        int meet = std::min(s[i - 1].end, s[i].end) - s[i].start + 1;
        if (meet <= 0 || meet % 2 == 0) return {false, 4};
    }
    return {true, 0};
}

Multisegment expand_speh(const CuspidalLine& line, int d, int t) {
    if (d < 1 || t < 1) throw std::invalid_argument("expand_speh needs d, t >= 1");
    std::vector<Segment> v;
    for (int i = 0; i < d; ++i) v.emplace_back(line, i, i + t - 1);
    return Multisegment(std::move(v));
}

namespace {

std::vector<int> starts(const Multisegment& m) {
    std::vector<int> out;
    for (const auto& s : m.segments()) out.push_back(s.start);
    return out;
}

void grow(const std::vector<Segment>& segs, std::size_t i, std::vector<int>& label, int blocks,
          std::set<std::vector<Multisegment>>& seen, const Multisegment& m) {
    if (i == segs.size()) {
        std::vector<std::vector<Segment>> parts(blocks);
        for (std::size_t j = 0; j < segs.size(); ++j) parts[label[j]].push_back(segs[j]);
        std::vector<Multisegment> p;
        for (auto& part : parts) p.emplace_back(std::move(part), m.form(), m.twist2());
        std::sort(p.begin(), p.end());
        seen.insert(std::move(p));
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        label[i] = b;
        grow(segs, i + 1, label, std::max(blocks, b + 1), seen, m);
    }
}

}  // namespace

std::vector<Partition> ordered_partitions(const Multisegment& m) {
    const auto& segs = m.segments();
    if (segs.size() > 10) throw std::domain_error("too many segments for partition search");
    std::set<std::vector<Multisegment>> seen;
    std::vector<int> label(segs.size(), 0);
    grow(segs, 0, label, 0, seen, m);
    std::vector<Partition> out(seen.begin(), seen.end());
    auto key = [](const Partition& p) {
        std::vector<std::vector<int>> k;
        for (const auto& b : p) k.push_back(starts(b));
        std::sort(k.begin(), k.end());
        return k;
    };
    std::stable_sort(out.begin(), out.end(), [&](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return key(a) < key(b);
    });
    return out;
}

std::optional<Partition> in_G(const Multisegment& m, const IrreducibilityOracle& oracle) {
    if (m.empty()) throw std::invalid_argument("empty multisegment");
    if (m.total_dimension() % 2 != 0) return std::nullopt;
    for (const auto& p : ordered_partitions(m)) {
        bool ok = std::all_of(p.begin(), p.end(),
                              [](const Multisegment& b) { return in_G_prime(b).member; });
        if (!ok) continue;
        if (p.size() == 1 || oracle(p)) return p;
    }
    return std::nullopt;
}

LineReduction reduce_line(const Multisegment& m) {
    if (m.empty()) throw std::invalid_argument("empty multisegment");
    if (!m.single_line()) throw std::invalid_argument("reduce_line needs a single cuspidal line");
    std::vector<Segment> v;
    int q = 0;
    for (const auto& s : m.segments()) {
        v.emplace_back(CuspidalLine{}, s.start, s.end);
        q += s.length();
    }
    return {normalized(Multisegment(std::move(v), m.form(), m.twist2())), q};
}

}  // namespace zel
