#include "zel/notation.hpp"

#include <cctype>
#include <charconv>

namespace zel {

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : t_(t) {}

    FormalProduct product() {
        std::vector<Multisegment> fs{multisegment()};
        while (true) {
            skip();
            if (at_end()) break;
            if (t_[i_] != 'x') fail("expected 'x' or end of input");
            ++i_;
            fs.push_back(multisegment());
        }
        return FormalProduct(std::move(fs));
    }

    Multisegment single() {
        Multisegment m = multisegment();
        skip();
        if (!at_end()) fail("unexpected trailing input");
        return m;
    }

private:
    Multisegment multisegment() {
        skip();
        std::size_t begin = i_;
        Form form;
        if (peek('Z')) form = Form::Z;
        else if (peek('Q')) form = Form::Q;
        else fail("expected 'Z' or 'Q'");
        ++i_;
        expect('{');
        std::vector<Segment> segs{segment()};
        while (true) {
            skip();
            if (peek(',')) {
                ++i_;
                segs.push_back(segment());
                continue;
            }
            expect('}');
            break;
        }
        int twist2 = 0;
        skip();
        if (peek('*')) {
            ++i_;
            expect('v');
            expect('^');
            twist2 = rational();
        }
        try {
            return Multisegment(std::move(segs), form, twist2);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), begin);
        }
    }

    Segment segment() {
        skip();
        std::size_t begin = i_;
        expect('[');
        int b = integer();
        expect(',');
        int e = integer();
        expect(']');
        if (b > e) throw ParseError("segment start exceeds end", begin);
        CuspidalLine line;
        skip();
        if (peek('@')) {
            ++i_;
            skip();
            std::size_t lb = i_;
            while (i_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[i_])) ||
                                      t_[i_] == '_' || t_[i_] == '\''))
                ++i_;
            if (lb == i_ || !std::isalpha(static_cast<unsigned char>(t_[lb])))
                throw ParseError("expected line label", lb);
            std::string label(t_.substr(lb, i_ - lb));
            expect(':');
            std::size_t dp = i_;
            int degree = integer();
            if (degree < 1) throw ParseError("degree must be positive", dp);
            line = CuspidalLine(label, degree);
        }
        return Segment(line, b, e);
    }

    // Doubled value of p or p/q with q in {1, 2}.
    int rational() {
        int p = integer();
        skip();
        if (!peek('/')) return 2 * p;
        ++i_;
        std::size_t qp = i_;
        int q = integer();
        if (q == 1) return 2 * p;
        if (q == 2) return p;
        throw ParseError("twist must be a half-integer", qp);
    }

    int integer() {
        skip();
        std::size_t begin = i_;
        if (peek('-') || peek('+')) ++i_;
        std::size_t digits = i_;
        while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
        if (digits == i_) throw ParseError("expected integer", begin);
        int v = 0;
        const char* first = t_.data() + (t_[begin] == '+' ? begin + 1 : begin);
        auto [ptr, ec] = std::from_chars(first, t_.data() + i_, v);
        if (ec != std::errc() || ptr != t_.data() + i_) throw ParseError("integer out of range", begin);
        return v;
    }

    void expect(char c) {
        skip();
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    bool peek(char c) const { return i_ < t_.size() && t_[i_] == c; }
    bool at_end() const { return i_ >= t_.size(); }
    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    std::string_view t_;
    std::size_t i_ = 0;
};

}  // namespace

Multisegment parse_multisegment(std::string_view text) { return Parser(text).single(); }

FormalProduct parse_product(std::string_view text) { return Parser(text).product(); }

std::string twist_text(int twist2) {
    if (twist2 % 2 == 0) return std::to_string(twist2 / 2);
    return std::to_string(twist2) + "/2";
}

std::string to_text(const Segment& s) {
    std::string out = "[" + std::to_string(s.start) + "," + std::to_string(s.end) + "]";
    if (!(s.line.label == "c1" && s.line.degree == 1))
        out += "@" + s.line.label + ":" + std::to_string(s.line.degree);
    return out;
}

std::string to_text(const Multisegment& m) {
    std::string out = m.form() == Form::Z ? "Z{" : "Q{";
    bool first = true;
    for (const auto& s : m.segments()) {
        if (!first) out += ",";
        out += to_text(s);
        first = false;
    }
    out += "}";
    if (m.twist2() != 0) out += "*v^" + twist_text(m.twist2());
    return out;
}

std::string to_text(const FormalProduct& p) {
    if (p.empty()) return "1";
    std::string out;
    for (const auto& f : p.absolute_factors()) {
        if (!out.empty()) out += " x ";
        out += to_text(f);
    }
    return out;
}

std::string caret_message(std::string_view text, const ParseError& e) {
    std::string out = "parse error at position " + std::to_string(e.position()) + ": " + e.what() + "\n";
    out += "  " + std::string(text) + "\n";
    out += "  " + std::string(std::min(e.position(), text.size()), ' ') + "^";
    return out;
}

}  // namespace zel
