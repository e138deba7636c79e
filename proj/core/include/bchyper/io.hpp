#pragma once

#include <string>
#include <string_view>

#include "bchyper/numbers.hpp"

namespace bchyper {

/// "a+bi1+ci2+dk" with 17 significant digits, so the text re-parses exactly.
std::string to_string(const BiComplex& z);
std::string to_string(const Hyperbolic& h);

/// {"re1":[a,b],"re2":[c,d]}
std::string to_json(const BiComplex& z);

/// Parses either a JSON object ({"re1":[a,b],"re2":[c,d]} or
/// {"idem1":[a,b],"idem2":[c,d]}) or an arithmetic literal over the units
/// i1 (alias i), i2 (alias j), k, e1, e2, e.g. "1+2i1-0.5i2+3k",
/// "0.5e1+0.25e2", "(1+2i)*e1 + 3*e2". Throws ParseError.
BiComplex parse_bicomplex(std::string_view text);

}  // namespace bchyper
