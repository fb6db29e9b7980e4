#pragma once

#include <stdexcept>
#include <string>

#include "crmodel/vfield.hpp"

namespace crmodel {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// Expression language over a session variable table. Literals: integers, i,
// sqrt2; rationals are written with '/'. Operators + - * / ^ with ^ binding
// tighter than unary minus; implicit multiplication is rejected. Wrappers:
// conj(...), Re(...), Im(...). Division only by literal (constant) nonzero
// scalars. Derivations are written d/d<var>.
Poly parse_poly(const std::string& text, const VarTablePtr& table);
HoloVField parse_field(const std::string& text, const VarTablePtr& table);

}  // namespace crmodel
