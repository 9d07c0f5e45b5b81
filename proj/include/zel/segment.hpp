#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zel {

struct CuspidalLine {
    std::string label = "c1";
    int degree = 1;

    CuspidalLine() = default;
    CuspidalLine(std::string label, int degree);

    bool operator==(const CuspidalLine& o) const { return label == o.label; }
    auto operator<=>(const CuspidalLine& o) const { return label <=> o.label; }
};

// Exponent interval [start, end] on a line, relative to the line's base point.
struct Segment {
    CuspidalLine line;
    int start = 0;
    int end = 0;

    Segment() = default;
    Segment(int b, int e);
    Segment(CuspidalLine l, int b, int e);

    int length() const { return end - start + 1; }
    int dimension() const { return line.degree * length(); }

    bool operator==(const Segment& o) const;
    bool operator<(const Segment& o) const;
};

enum class SegmentRelation {
    Equal,
    ContainedIn,
    Contains,
    UnlinkedDisjoint,
    JuxtaposedBefore,
    JuxtaposedAfter,
    LinkedPrecedes,
    LinkedPreceded,
    DifferentLines,
};

const char* to_string(SegmentRelation r);

SegmentRelation segment_relation(const Segment& a, const Segment& b);
bool linked(const Segment& a, const Segment& b);
// a precedes b: linked and b starts later.
bool precedes(const Segment& a, const Segment& b);
std::optional<Segment> intersection(const Segment& a, const Segment& b);

enum class Form { Z, Q };

// Multiset of segments with a global twist nu^{twist2/2}.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs, Form form = Form::Z, int twist2 = 0);

    const std::vector<Segment>& segments() const { return segs_; }
    Form form() const { return form_; }
    int twist2() const { return twist2_; }
    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }

    int total_dimension() const;
    bool single_line() const;
    std::vector<CuspidalLine> lines() const;

    Multisegment with_form(Form f) const { return Multisegment(segs_, f, twist2_); }
    Multisegment with_twist2(int t) const { return Multisegment(segs_, form_, t); }
    Multisegment shifted(int k) const;

    bool operator==(const Multisegment& o) const = default;
    bool operator<(const Multisegment& o) const;

private:
    std::vector<Segment> segs_;
    Form form_ = Form::Z;
    int twist2_ = 0;
};

Multisegment Z(std::vector<Segment> segs);
Multisegment Q(std::vector<Segment> segs);

// Per line, moves the minimal start to 0; the first line's offset goes into the
// twist. Returns the normalized value and its twist (doubled).
std::pair<Multisegment, int> normalize_twist(const Multisegment& m);
Multisegment normalized(const Multisegment& m);
// Comparison up to twist.
bool same_pattern(const Multisegment& a, const Multisegment& b);

struct GPrimeResult {
    bool member = false;
    int failed_condition = 0;  // 1..4, 0 when member
};

GPrimeResult in_G_prime(const Multisegment& m);

Multisegment expand_speh(const CuspidalLine& line, int d, int t);

// True when the product of the given factors is certified irreducible.
using IrreducibilityOracle = std::function<bool(const std::vector<Multisegment>&)>;

using Partition = std::vector<Multisegment>;

// Partitions of the segment multiset, fewest blocks first, ties by block starts.
std::vector<Partition> ordered_partitions(const Multisegment& m);

std::optional<Partition> in_G(const Multisegment& m, const IrreducibilityOracle& oracle);

struct LineReduction {
    Multisegment pattern;
    int quotient = 0;  // total_dimension / degree
    bool even() const { return quotient % 2 == 0; }
};

LineReduction reduce_line(const Multisegment& m);

}  // namespace zel
