#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zel/segment.hpp"

namespace zel {

// rho_1 x ... x rho_r as an induced-representation label, in factor order.
struct FormalProduct {
    std::vector<Multisegment> factors;
    int twist2 = 0;

    FormalProduct() = default;
    explicit FormalProduct(std::vector<Multisegment> f, int t2 = 0)
        : factors(std::move(f)), twist2(t2) {}

    int dimension() const;
    bool empty() const { return factors.empty(); }
    // Factors with the global twist folded into each one.
    std::vector<Multisegment> absolute_factors() const;

    bool operator==(const FormalProduct& o) const = default;
};

struct CompositionSeries {
    std::optional<Multisegment> socle;
    std::optional<Multisegment> cosocle;
    std::vector<Multisegment> all_factors;
    int length = 0;
};

struct JacquetTerm {
    FormalProduct left;
    FormalProduct right;
};

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityCertificate {
    Irreducibility verdict = Irreducibility::Unknown;
    std::string rule;
};

// Puts all factors on the first factor's twist; a half-integral offset moves a
// factor onto primed copies of its lines.
std::vector<Multisegment> align_twists(const std::vector<Multisegment>& factors);
// Z-form multisegment collecting the segments of the aligned Z-forms.
Multisegment merged(const std::vector<Multisegment>& factors);

CompositionSeries decompose_pair(const Segment& a, const Segment& b, Form form = Form::Z);

IrreducibilityCertificate product_irreducible(const std::vector<Multisegment>& factors);
bool certified_irreducible(const std::vector<Multisegment>& factors);
std::optional<Partition> in_G(const Multisegment& m);

struct SubquotientSet {
    std::vector<Multisegment> items;
    // False once the input leaves the range where the lists are known exactly.
    bool certified = true;
};

SubquotientSet enumerate_subquotients(const std::vector<Segment>& factors, Form form = Form::Z);

Multisegment zelevinsky_dual(const Multisegment& m);
// Same representation, Z-labelled: Q(a) = Z(dual(a)).
Multisegment to_Z_form(const Multisegment& m);
Multisegment contragredient(const Multisegment& m);

// Quotient-order product of single-segment factors whose unique irreducible
// quotient is m.
FormalProduct presentation(const Multisegment& m);

std::vector<JacquetTerm> jacquet_ss(const FormalProduct& p, int k);

using SupportPoint = std::pair<std::string, int>;  // (line label, doubled exponent)
std::vector<SupportPoint> cuspidal_support(const Multisegment& m);
std::vector<SupportPoint> cuspidal_support(const FormalProduct& p);
// Only claim available for non-segment irreducibles: the Jacquet pieces live on
// a subset of the cuspidal support.
bool jacquet_support_within(const Multisegment& theta, const JacquetTerm& t);

}  // namespace zel
