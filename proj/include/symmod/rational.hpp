#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace symmod {

using Rat = mpq_class;

// Parses "p", "-p/q" etc.; throws std::invalid_argument on malformed input or q == 0.
Rat parse_rational(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
std::string rat_str(const Rat& x);

double to_double(const Rat& x);

// Scalar conversion used by code generic over exact/floating scalars.
template <class S>
S from_rat(const Rat& x);
template <>
inline Rat from_rat<Rat>(const Rat& x) { return x; }
template <>
inline double from_rat<double>(const Rat& x) { return x.get_d(); }

Rat rat_pow(const Rat& base, unsigned exp);

Rat factorial(unsigned m);

// m! = prod_i m_i! for an exponent vector.
Rat factorial_vec(const std::vector<int>& m);

// Rising factorial (x)_m = x (x+1) ... (x+m-1), with (x)_0 = 1.
Rat pochhammer(const Rat& x, unsigned m);

// (x)_m = prod_i (x)_{m_i} for an exponent vector.
Rat pochhammer_vec(const Rat& x, const std::vector<int>& m);

} // namespace symmod
