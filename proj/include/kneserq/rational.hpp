#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace kq {

using BigInt = boost::multiprecision::mpz_int;

// Always in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

inline BigRational make_rational(long long num, long long den = 1) { return BigRational(BigInt(num), BigInt(den)); }

inline BigInt numerator_of(const BigRational &r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const BigRational &r) { return boost::multiprecision::denominator(r); }

// "p/q" always, including integers ("3/1").
std::string to_fraction_string(const BigRational &r);

// Accepts "p/q" or a bare integer "p". Throws Error(ParseError) otherwise.
BigRational parse_rational(std::string_view text);

// Smallest integer >= r.
BigInt ceil_of(const BigRational &r);

} // namespace kq
