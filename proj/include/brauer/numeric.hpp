/*
   Copyright 2026 the brauercalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_NUMERIC_HPP
#define BRAUER_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals throughout, no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown on invalid input (bad descriptors, mismatched fields, parse errors).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a request exceeds a configured size or degree limit.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(long n);

/// Prime factorization by trial division, (prime, exponent) pairs in
/// ascending prime order. Requires n >= 1.
std::vector<std::pair<long, long>> factorize(long n);

/// All positive divisors of n in ascending order.
std::vector<long> divisors_sorted(long n);

/// Product of the distinct prime factors of n (radical); radical(1) = 1.
long radical_of(long n);

struct ExtendedGcd {
  long g;
  long x;
  long y;  // g = x*a + y*b
};
ExtendedGcd extended_gcd(long a, long b);

Integer integer_pow(const Integer& base, long exp);

std::string integer_str(const Integer& n);

}  // namespace brauer

#endif  // BRAUER_NUMERIC_HPP
