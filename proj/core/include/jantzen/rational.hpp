#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jantzen {

// Exact rational scalar. cpp_rational keeps the fraction reduced with a
// positive denominator, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& text);

}  // namespace jantzen
