#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zel/mackey.hpp"
#include "zel/product.hpp"
#include "zel/segment.hpp"

namespace zel {

enum class Status { Distinguished, NotDistinguished, Unknown };
const char* to_string(Status s);

struct TraceStep {
    std::string rule;
    std::string anchor;
    std::string detail;

    bool operator==(const TraceStep&) const = default;
};

struct Verdict {
    Status status = Status::Unknown;
    std::vector<TraceStep> trace;
};

enum class RuleKind { Positive, Negative, Fallback };

struct RuleInfo {
    std::string name;
    std::string anchor;
    RuleKind kind;
};

// In application order.
const std::vector<RuleInfo>& rule_registry();
const RuleInfo& rule_info(const std::string& name);

bool gl4_table(const Multisegment& m);
bool gl6_table(const Multisegment& m);

class Classifier {
public:
    struct Options {
        bool contragredient_retry = true;
        bool tables = true;
    };

    // Q input is relabelled into Z-form; the result depends only on the
    // normalized pattern.
    Verdict classify(const Multisegment& m);
    Verdict classify(const Multisegment& m, const Options& opt);

    // Runs one rule on the normalized Z-form of m; nullopt when it does not fire.
    std::optional<Verdict> apply_rule(const std::string& name, const Multisegment& m);

    // Whether the product admits a nonzero Sp-invariant functional.
    Tri sp_oracle(const FormalProduct& p);
    SpOracle oracle();

    MackeyBound mackey(const FormalProduct& s1, const FormalProduct& s2);

    // Checks that every step of a verdict re-fires with the same status.
    bool replay(const Multisegment& m, const Verdict& v);

    std::size_t memo_size() const { return memo_.size(); }

private:
    Verdict run(const Multisegment& m, const Options& opt);
    std::optional<Verdict> fire(const std::string& name, const Multisegment& m, const Options& opt);

    std::map<std::pair<Multisegment, int>, Verdict> memo_;
    std::map<std::vector<Multisegment>, Tri> sp_memo_;
};

Multisegment canonical_input(const Multisegment& m);

// Normalized single-line degree-1 Z-multisegments of the given rank with
// exponents in [0, window], then the degree-2/3 single-segment patterns.
std::vector<Multisegment> scan_corpus(int rank, int window);

struct ConjectureMismatch {
    Multisegment input;
    Status status;
    bool in_g;
};

struct RankSummary {
    int rank = 0;
    int inputs = 0;
    int distinguished = 0;
    int not_distinguished = 0;
    int unknown = 0;
    int g_members = 0;
    int table_verdicts = 0;  // decided only by GL4-TABLE or GL6-TABLE
};

struct ConjectureReport {
    std::vector<RankSummary> ranks;
    std::vector<ConjectureMismatch> mismatches;      // Distinguished vs G-membership
    std::vector<Multisegment> reduction_failures;    // reduce_line prediction broken
    std::vector<Multisegment> unknowns;
    bool ok() const { return mismatches.empty() && reduction_failures.empty() && unknowns.empty(); }
};

ConjectureReport verify_conjectures(int window, const std::vector<int>& ranks, Classifier& c);

}  // namespace zel
