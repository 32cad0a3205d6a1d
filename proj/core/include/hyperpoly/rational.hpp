#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt pow3(unsigned exponent);
// "p/q" with q > 0, always showing the denominator.
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& text);

// Rank of a dense rational matrix, by exact elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);
// Solves a square system; returns false if singular.
bool exact_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x);

}  // namespace hyperpoly
