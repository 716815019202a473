#ifndef GRAPHLIM_NUMBERS_HPP
#define GRAPHLIM_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace graphlim {

// All counting is done in arbitrary precision; all probabilities, cumulants
// and matrix entries over them are exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serialized form used in every JSON/CSV document: "numerator/denominator",
// always reduced, denominator positive.
inline std::string ratio_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q", "p", and plain integer strings.
Rational parse_ratio(const std::string& text);

// Exact conversion; doubles are dyadic rationals.
inline Rational exact_rational(double x) { return Rational(x); }

BigInt binomial(unsigned n, unsigned k);
BigInt integer_pow(const BigInt& base, unsigned exp);

}  // namespace graphlim

#endif
