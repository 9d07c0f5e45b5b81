#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zel/classifier.hpp"
#include "zel/mackey.hpp"
#include "zel/notation.hpp"
#include "zel/report.hpp"

using namespace zel;

namespace {

constexpr int kParseExit = 2;
constexpr int kPreconditionExit = 3;
constexpr int kMismatchExit = 4;

struct Flags {
    std::string expr;
    std::string format = "text";
    bool trace = false;
    int window = 6;
    std::vector<int> ranks;
    int split = 0;
    int n = 0;
    int k = 0;
};

// Segments of a product of single-segment factors, moved to a common twist.
std::pair<std::vector<Segment>, Form> segment_factors(const FormalProduct& p) {
    auto fs = p.absolute_factors();
    if (fs.empty()) throw std::invalid_argument("empty product");
    std::vector<Segment> out;
    Form form = fs.front().form();
    int t0 = fs.front().twist2();
    for (const auto& f : fs) {
        if (f.form() != form) throw std::invalid_argument("factors must share one form");
        int d = f.twist2() - t0;
        if (d % 2 != 0) throw std::invalid_argument("factor twists differ by a half-integer");
        Multisegment g = f.shifted(d / 2);
        out.insert(out.end(), g.segments().begin(), g.segments().end());
        if (fs.size() > 1 && f.size() != 1) throw std::invalid_argument("factors must be segments");
    }
    return {out, form};
}

Multisegment single_input(const FormalProduct& p) {
    if (p.factors.size() == 1) return p.factors.front();
    if (!certified_irreducible(p.absolute_factors()))
        throw std::invalid_argument("product is not certified irreducible");
    return merged(p.absolute_factors());
}

void print_verdict(const std::string& input, const Multisegment& m, Classifier& c, const Flags& f) {
    if (f.format == "records") {
        std::cout << record_line(make_record(input, m, c)) << "\n";
        return;
    }
    Multisegment z = normalized(to_Z_form(m));
    Verdict v = c.classify(z);
    std::cout << to_text(z) << ": " << to_string(v.status);
    if (!v.trace.empty()) std::cout << " via " << v.trace.front().rule;
    std::cout << "\n";
    if (f.trace)
        for (const auto& s : v.trace)
            std::cout << "  " << s.rule << " \"" << s.anchor << "\"\n    " << s.detail << "\n";
}

int cmd_classify(const Flags& f) {
    Classifier c;
    print_verdict(f.expr, single_input(parse_product(f.expr)), c, f);
    return 0;
}

int cmd_decompose(const Flags& f) {
    auto [segs, form] = segment_factors(parse_product(f.expr));
    if (segs.size() != 2) throw std::invalid_argument("decompose needs exactly two segments");
    auto cs = decompose_pair(segs[0], segs[1], form);
    std::cout << "length: " << cs.length << "\n";
    std::cout << "socle: " << to_text(*cs.socle) << "\n";
    std::cout << "cosocle: " << to_text(*cs.cosocle) << "\n";
    for (const auto& x : cs.all_factors) std::cout << "factor: " << to_text(x) << "\n";
    return 0;
}

int cmd_subquotients(const Flags& f) {
    auto [segs, form] = segment_factors(parse_product(f.expr));
    auto set = enumerate_subquotients(segs, form);
    std::cout << set.items.size() << " subquotients" << (set.certified ? "" : " (uncertified)") << "\n";
    for (const auto& x : set.items) std::cout << to_text(x) << "\n";
    return 0;
}

int cmd_dual(const Flags& f) {
    Multisegment m = parse_multisegment(f.expr);
    Multisegment d = zelevinsky_dual(m);
    std::cout << "dual: " << to_text(d) << "\n";
    std::cout << "same representation: " << to_text(to_Z_form(m)) << "\n";
    return 0;
}

int cmd_jacquet(const Flags& f) {
    FormalProduct p = parse_product(f.expr);
    auto terms = jacquet_ss(p, f.split);
    std::cout << terms.size() << " terms\n";
    for (const auto& t : terms) std::cout << to_text(t.left) << " (x) " << to_text(t.right) << "\n";
    return 0;
}

int cmd_orbits(const Flags& f) {
    for (const auto& o : orbit_parameters(f.n, f.k)) {
        auto e = modular_exponents(o);
        std::cout << "r=" << o.r << " GL_" << o.gl_rank() << " x Sp_" << o.sp_left() << " x Sp_"
                  << o.sp_right() << "  delta exponent " << e.delta_kr << ", twist " << e.twist << "\n";
    }
    return 0;
}

std::vector<int> ranks_or_default(const Flags& f) {
    return f.ranks.empty() ? std::vector<int>{2, 4, 6} : f.ranks;
}

int cmd_scan(const Flags& f) {
    Classifier c;
    for (int rank : ranks_or_default(f)) {
        for (const auto& m : scan_corpus(rank, f.window)) {
            std::string text = to_text(m);
            if (f.format == "records") {
                std::cout << record_line(make_record(text, m, c)) << "\n";
            } else {
                print_verdict(text, m, c, f);
            }
        }
    }
    return 0;
}

int cmd_verify(const Flags& f) {
    Classifier c;
    auto rep = verify_conjectures(f.window, ranks_or_default(f), c);
    for (const auto& r : rep.ranks)
        std::cout << "rank " << r.rank << ": " << r.inputs << " inputs, " << r.distinguished
                  << " distinguished, " << r.not_distinguished << " not distinguished, " << r.unknown
                  << " unknown, " << r.g_members << " in G, " << r.table_verdicts << " by table\n";
    for (const auto& m : rep.mismatches)
        std::cout << "mismatch: " << to_text(m.input) << " " << to_string(m.status)
                  << (m.in_g ? " but in G" : " but not in G") << "\n";
    for (const auto& m : rep.reduction_failures) std::cout << "reduction failure: " << to_text(m) << "\n";
    for (const auto& m : rep.unknowns) std::cout << "unknown: " << to_text(m) << "\n";
    std::cout << "mismatches " << rep.mismatches.size() << ", unknown " << rep.unknowns.size()
              << ", reduction failures " << rep.reduction_failures.size() << "\n";
    return rep.ok() ? 0 : kMismatchExit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zelevinsky multisegment calculator for symplectic periods"};
    app.require_subcommand(1);
    Flags f;

    auto add_expr = [&](CLI::App* sub) { sub->add_option("expr", f.expr, "multisegment or product")->required(); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", f.format, "text or records")->check(CLI::IsMember({"text", "records"}));
        sub->add_flag("--trace", f.trace, "print every trace step");
    };

    auto* classify = app.add_subcommand("classify", "classify an irreducible representation");
    add_expr(classify);
    add_format(classify);
    auto* decompose = app.add_subcommand("decompose", "composition series of two segments");
    add_expr(decompose);
    auto* subq = app.add_subcommand("subquotients", "irreducible subquotients of a segment product");
    add_expr(subq);
    auto* dual = app.add_subcommand("dual", "Moeglin-Waldspurger involution");
    add_expr(dual);
    auto* jacquet = app.add_subcommand("jacquet", "semisimplified Jacquet module of a segment product");
    add_expr(jacquet);
    jacquet->add_option("--split", f.split, "size of the first block")->required();
    auto* orbits = app.add_subcommand("orbits", "Sp-orbits for a maximal parabolic");
    orbits->add_option("--n", f.n, "half the rank")->required();
    orbits->add_option("--k", f.k, "size of the first block")->required();
    auto* scan = app.add_subcommand("scan", "classify the scan corpus");
    scan->add_option("--window", f.window, "largest exponent");
    scan->add_option("--rank", f.ranks, "ranks to scan")->check(CLI::IsMember({2, 4, 6}));
    add_format(scan);
    auto* verify = app.add_subcommand("verify-conjectures", "check Distinguished against G-membership");
    verify->add_option("--window", f.window, "largest exponent");
    verify->add_option("--rank", f.ranks, "ranks to check")->check(CLI::IsMember({2, 4, 6}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParseExit;
    }

    try {
        if (*classify) return cmd_classify(f);
        if (*decompose) return cmd_decompose(f);
        if (*subq) return cmd_subquotients(f);
        if (*dual) return cmd_dual(f);
        if (*jacquet) return cmd_jacquet(f);
        if (*orbits) return cmd_orbits(f);
        if (*scan) return cmd_scan(f);
        if (*verify) return cmd_verify(f);
    } catch (const ParseError& e) {
        std::cerr << caret_message(f.expr, e) << "\n";
        return kParseExit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPreconditionExit;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPreconditionExit;
    }
    return 0;
}
