#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace ddc {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

}  // namespace ddc
