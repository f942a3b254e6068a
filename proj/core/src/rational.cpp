#include "lexsemi/rational.hpp"

namespace lexsemi {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace lexsemi
