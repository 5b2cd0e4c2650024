#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fg {

/// Exact rational coefficient type. All algebraic identities in this
/// library are exact; no floating point is used anywhere.
using Rat = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0, or plain "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// Accepts "p", "p/q" and optional leading '-'.
Rat rat_from_string(const std::string& text);

}  // namespace fg
