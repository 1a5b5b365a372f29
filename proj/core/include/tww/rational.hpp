#pragma once

#include <gmpxx.h>

#include <string>

namespace tww {

using Rational = mpq_class;

// Parses "p", "p/q" or a finite decimal such as "-2.75".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

}  // namespace tww
