#pragma once

// Exact integer/rational scalars plus the handful of number-theoretic
// helpers used across the library. Everything here is small-input exact
// arithmetic; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace cyclesieve {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Moebius function; n >= 1.
int moebius(long long n);

// Product of the distinct primes dividing n (rad(1) = 1); n >= 1.
long long rad(long long n);

// Divisors of n >= 1 in increasing order.
std::vector<long long> divisors(long long n);

Int factorial(int n);
Int binomial(int n, int k);

// n! / (parts[0]! * parts[1]! * ...) with sum(parts) == n required.
Int multinomial(int n, std::span<const int> parts);

// True iff the rational is an integer.
bool is_integer(const Rat& x);

// Numerator of an integral rational; throws std::logic_error otherwise.
Int to_integer(const Rat& x);

}  // namespace cyclesieve
