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

#ifndef BRAUER_POLYNOMIAL_HPP
#define BRAUER_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "brauer/field.hpp"

namespace brauer {

/// Dense univariate polynomial over an exact field, constant-first.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);  // zero polynomial
  Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);
  static Polynomial x(const FieldPtr& field);
  static Polynomial constant(const FieldElement& c);

  const FieldPtr& field() const { return field_; }
  long degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(long i) const;
  const FieldElement& leading() const;

  FieldElement operator()(const FieldElement& at) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& o) const;
  Polynomial operator%(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  Polynomial make_monic() const;
  Polynomial derivative() const;

  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::string str(const char* var = "x") const;

 private:
  FieldPtr field_;
  std::vector<FieldElement> c_;
};

/**
 * Exact irreducibility test for a monic polynomial. Over finite fields:
 * no-root check plus exhaustive trial division by low-degree factors. Over Q:
 * rational root test, supported through degree 3. Unsupported degree/field
 * combinations raise UnsupportedError rather than guessing.
 */
bool is_irreducible(const Polynomial& f);

/// Roots in the coefficient field (finite fields by scan, Q by the rational
/// root test on monic polynomials).
std::vector<FieldElement> poly_roots(const Polynomial& f);

/// All monic polynomials of the given degree over a finite field, in
/// lexicographic constant-first order.
std::vector<Polynomial> enumerate_monic(const FieldPtr& field, long degree);

/// Factorization into monic irreducibles by exhaustive trial division
/// (finite fields, small degrees).
std::vector<std::pair<Polynomial, long>> factor_into_irreducibles(const Polynomial& f);

}  // namespace brauer

#endif  // BRAUER_POLYNOMIAL_HPP
