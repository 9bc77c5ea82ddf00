#pragma once

#include <string>
#include <vector>

#include "sallylab/ring.hpp"

namespace sally {

// Parses the ASCII expression grammar: integers, declared variables,
// `+ - * ^ ( )`, unary minus, `^` tighter than `*` tighter than `+`/`-`.
// Implicit multiplication is a syntax error.  parse-print-parse is a
// fixed point.
Polynomial parse_poly(const std::string& text, const RingSpec& spec,
                      MonomialOrder ord = MonomialOrder::degrevlex());

inline std::string poly_to_string(const Polynomial& f, const RingSpec& spec) {
    return f.str(spec.variables());
}

// Convenience for building generator lists from expression strings.
std::vector<Polynomial> parse_polys(const std::vector<std::string>& texts, const RingSpec& spec);

}  // namespace sally
