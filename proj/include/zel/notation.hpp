#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zel/product.hpp"
#include "zel/segment.hpp"

namespace zel {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// segment      := '[' int ',' int ']' ('@' label ':' degree)?
// multisegment := ('Z'|'Q') '{' segment (',' segment)* '}' ('*' 'v^' p ('/' q)?)?
// product      := multisegment ('x' multisegment)*
Multisegment parse_multisegment(std::string_view text);
FormalProduct parse_product(std::string_view text);

std::string to_text(const Segment& s);
std::string to_text(const Multisegment& m);
std::string to_text(const FormalProduct& p);
// Twist written as an exponent of v: "2", "-3/2".
std::string twist_text(int twist2);

// Source line followed by a caret under the failing position.
std::string caret_message(std::string_view text, const ParseError& e);

}  // namespace zel
