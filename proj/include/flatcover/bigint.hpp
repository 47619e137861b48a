#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace flatcover {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
// Sum_{j=0}^{d} C(r, j); zero when d < 0.
BigInt binomial_sum(int r, int d);
BigInt pow2(int e);
BigInt ipow(const BigInt& base, unsigned e);
// Number of d-dimensional subspaces of F_2^r.
BigInt gaussian_binomial(int r, int d);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace flatcover
