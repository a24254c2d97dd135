#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace autcount {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace autcount
