#include "fg/rational.hpp"

#include "fg/errors.hpp"

namespace fg {

std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw JsonError("rational with zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::exception& e) {
    throw JsonError("bad rational '" + text + "': " + e.what());
  }
}

}  // namespace fg
