#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace rht {

// Exact rational coefficients. cpp_rational keeps the invariants we rely on
// everywhere (lowest terms, positive denominator), so no wrapper is needed;
// parse/format live here so every module prints rationals the same way.
using Scalar = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using VecQ = std::vector<Scalar>;

inline Scalar scalar_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (s.empty() || slash == 0 || slash == s.size() - 1)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  try {
    if (slash == std::string::npos) return Scalar(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

// Lowest terms; "p" when the denominator is 1, "p/q" otherwise.
inline std::string scalar_to_string(const Scalar& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace rht
