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

#ifndef BRAUER_CYCLIC_HPP
#define BRAUER_CYCLIC_HPP

#include <map>
#include <string>
#include <vector>

#include "brauer/algebra.hpp"

namespace brauer {

/**
 * A Brauer class relative to a fixed cyclic extension K/k: the pair
 * (K/k, a) with a in k*. Two classes over the same extension are equal iff
 * a1/a2 is a norm from K*, which is itself only a Verdict over infinite
 * fields.
 */
struct CyclicBrauerClass {
  FieldPtr ext;
  FieldElement a;
};

CyclicBrauerClass make_class(FieldPtr ext, FieldElement a);
CyclicBrauerClass multiply_classes(const CyclicBrauerClass& c1, const CyclicBrauerClass& c2);
CyclicBrauerClass invert_class(const CyclicBrauerClass& c);
/// Verdict-valued equality: decides whether a1/a2 is a norm.
NormMembership classes_equal(const CyclicBrauerClass& c1, const CyclicBrauerClass& c2,
                             long bound);

/**
 * The cyclic algebra (K/k, sigma, a) as a structure-constant algebra over k:
 * basis {x^j u^i} with i major (index i*m + j), relations u^m = a and
 * u x = sigma(x) u.
 */
StructureConstantAlgebra build_cyclic_algebra(const FieldPtr& ext, const FieldElement& a);

/**
 * The splitting representation over K: x in K acts as
 * diag(x, sigma(x), ..., sigma^{m-1}(x)) and u as the cyclic shift matrix
 * with a single entry a. Verified to be an injective algebra homomorphism.
 */
struct SplittingRep {
  FieldPtr ext;
  FieldElement a;
  std::vector<Matrix> basis_images;  // image of basis x^j u^i at index i*m+j
  /// Image of the element with the given coordinates over the base field.
  Matrix represent(const std::vector<FieldElement>& coords) const;
};
SplittingRep splitting_representation(const FieldPtr& ext, const FieldElement& a);

/// Reduced norm of the element with the given base-field coordinates:
/// determinant through the splitting representation (always lies in k).
FieldElement reduced_norm_value(const SplittingRep& rep,
                                const std::vector<FieldElement>& coords);

/**
 * The reduced norm as an explicit degree-m form on m^2 variables, stored as
 * a coefficient map (exponent vector -> base-field coefficient). Symbolic
 * expansion is intended for small m.
 */
class ReducedNormForm {
 public:
  ReducedNormForm(FieldPtr base, long m, std::map<std::vector<uint8_t>, FieldElement> coeffs);
  long degree() const { return m_; }
  long variables() const { return m_ * m_; }
  const std::map<std::vector<uint8_t>, FieldElement>& coefficients() const { return coeffs_; }
  FieldElement evaluate(const std::vector<FieldElement>& coords) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  FieldPtr base_;
  long m_;
  std::map<std::vector<uint8_t>, FieldElement> coeffs_;
};
ReducedNormForm reduced_norm_form(const FieldPtr& ext, const FieldElement& a);

/**
 * Split test by Theorem-of-norms: delegates to norm membership of a; when a
 * preimage b is found, the explicit zero divisor u - b (annihilated by
 * sum_i (b sigma(b) ... sigma^{i-1}(b))^{-1} u^i) is verified in the algebra.
 */
struct SplitVerdict {
  Outcome outcome = Outcome::Unknown;
  NormMembership membership;
  std::vector<FieldElement> zero_divisor_x, zero_divisor_y;  // when cross-checked
  bool cross_checked = false;
};
SplitVerdict is_split(const CyclicBrauerClass& c, long bound);

/// Zero-divisor search that layers the class-level certificates on top of the
/// generic algebra search: a norm preimage yields an explicit zero divisor;
/// a positive-definite reduced norm form (imaginary quadratic K/Q, a < 0)
/// yields a decisive Refuted.
ZeroDivisorResult find_zero_divisor(const CyclicBrauerClass& c, long bound);

/**
 * The least d >= 1 with a^d a norm. Always divides m (a^m = norm(a)).
 * Decided when every divisor test below the answer is decisively Refuted.
 */
struct PeriodResult {
  bool decided = false;
  long value = 0;        // the period when decided; the largest excluded
                         // lower bound + 1 otherwise
  long bound = 0;
  std::string certificate;
  std::optional<FieldElement> witness;  // norm preimage of a^value when decided
};
PeriodResult period(const CyclicBrauerClass& c, long bound);

/**
 * Bounds on the index. lower = period when decided. upper starts at m and is
 * refined to the largest divisor of m with the same prime factors as the
 * period (period | index | period^(m-1)); when the algebra is explicitly
 * constructible and a zero divisor is found, a minimal right ideal of
 * dimension m*index pins the index exactly.
 */
struct IndexBounds {
  long lower = 1;
  long upper = 1;
  bool lower_decided = false;
  bool exact = false;
  std::string note;
};
IndexBounds index_bounds(const CyclicBrauerClass& c, long bound);

/**
 * Primary decomposition of a class with decisively computed period
 * n = prod p_i^{c_i}: parts (ext, a^{e_i a_i}) with a_i = n / p_i^{c_i} and
 * sum e_i a_i = 1. The part periods are exactly p_i^{c_i} and the product of
 * the parts is the original class.
 */
struct PrimaryPart {
  CyclicBrauerClass cls;
  long prime = 0;
  long prime_power = 0;  // p^c, the period of this part
};
std::vector<PrimaryPart> primary_decomposition(const CyclicBrauerClass& c, long bound);

/// Divisibility constraints on a curve of degree degC and Euler
/// characteristic chi inside a variety of index ind:
/// odd ind:  ind | degC and ind | chi;
/// even ind: ind | degC + chi and ind/2 | chi.
bool curve_constraints(long ind, long deg_c, long chi);

}  // namespace brauer

#endif  // BRAUER_CYCLIC_HPP
