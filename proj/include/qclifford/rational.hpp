#pragma once

#include <gmpxx.h>

#include <string>

#include "qclifford/errors.hpp"

namespace qcl {

// Exact rational scalar. GMP keeps every coefficient exact; nothing in the
// library ever rounds.
using Rational = mpq_class;

// Parse "p", "-p", or "p/q" into a canonicalized rational. Rejects q == 0 and
// anything mpq does not understand.
inline Rational parse_rational(const std::string& text) {
    mpq_class value;
    if (text.empty() || value.set_str(text, 10) != 0)
        throw input_error("bad rational literal: '" + text + "'");
    if (value.get_den() == 0)
        throw input_error("zero denominator in rational literal: '" + text + "'");
    value.canonicalize();
    return value;
}

inline std::string rational_str(const Rational& value) {
    return value.get_str();
}

} // namespace qcl
