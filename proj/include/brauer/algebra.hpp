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

#ifndef BRAUER_ALGEBRA_HPP
#define BRAUER_ALGEBRA_HPP

#include <set>
#include <string>
#include <vector>

#include "brauer/matrix.hpp"
#include "brauer/verdict.hpp"

namespace brauer {

/**
 * Finite-dimensional associative unital algebra over an exact field, given by
 * a dense rank-3 multiplication table: b_i * b_j = sum_k c(i,j,k) b_k.
 * Associativity and the unit laws are verified on all basis triples at
 * construction.
 */
class StructureConstantAlgebra {
 public:
  StructureConstantAlgebra(FieldPtr field, long dim, std::vector<FieldElement> table,
                           std::vector<FieldElement> unit,
                           std::vector<std::string> basis_names = {});

  const FieldPtr& field() const { return field_; }
  long dim() const { return dim_; }
  const FieldElement& c(long i, long j, long k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<FieldElement>& table() const { return table_; }
  const std::vector<FieldElement>& unit() const { return unit_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  std::vector<FieldElement> multiply(const std::vector<FieldElement>& x,
                                     const std::vector<FieldElement>& y) const;
  std::vector<FieldElement> basis_element(long i) const;
  std::vector<FieldElement> zero_element() const;
  /// Matrix of left multiplication y -> x*y over the base field.
  Matrix left_regular(const std::vector<FieldElement>& x) const;
  Matrix right_regular(const std::vector<FieldElement>& x) const;
  bool is_zero_vec(const std::vector<FieldElement>& x) const;
  std::string element_str(const std::vector<FieldElement>& x) const;

  /// Full matrix algebra M_n with the matrix-unit basis e_rc at index r*n+c.
  static StructureConstantAlgebra matrix_algebra(const FieldPtr& field, long n);
  /// An extension field as an algebra over its base (regular representation).
  static StructureConstantAlgebra field_as_algebra(const FieldPtr& ext);

 private:
  FieldPtr field_;
  long dim_;
  std::vector<FieldElement> table_;
  std::vector<FieldElement> unit_;
  std::vector<std::string> names_;
};

/// Elements commuting with every basis element, as a canonical subspace.
Subspace center(const StructureConstantAlgebra& a);

/**
 * Radical via the trace bilinear form (x,y) -> tr(L_{xy}). A trivial kernel
 * proves semisimplicity in every characteristic (the Jacobson radical is
 * always contained in the kernel). A nontrivial kernel equals the radical
 * when char = 0 or char > dim; otherwise the answer would be unreliable and
 * an UnsupportedError is raised instead.
 */
Subspace radical(const StructureConstantAlgebra& a);

/// True iff radical zero and 1-dimensional center. Checks that the dimension
/// is then a perfect square.
bool is_central_simple(const StructureConstantAlgebra& a);

StructureConstantAlgebra tensor_product(const StructureConstantAlgebra& a,
                                        const StructureConstantAlgebra& b);
StructureConstantAlgebra opposite(const StructureConstantAlgebra& a);

/// The bilinear action x (x) y -> (z -> x z y) as a dim^2 x dim^2 matrix;
/// full rank certifies A (x) A^opp = End_k(A).
struct SandwichResult {
  Matrix map;
  long rank = 0;
  bool full = false;
};
SandwichResult sandwich_map(const StructureConstantAlgebra& a);

struct ZeroDivisorResult {
  Outcome outcome = Outcome::Unknown;
  std::vector<FieldElement> x, y;  // Proved: x*y = 0 with x, y nonzero
  std::string certificate;
  long bound = 0;
};
/**
 * Search for a zero divisor. Decisive over finite fields (deterministic
 * enumeration; exhaustive when the algebra is small enough). Over infinite
 * fields, enumerates integer coordinate vectors of max-norm <= bound (zero
 * divisors are scale invariant) and reports Unknown when exhausted.
 */
ZeroDivisorResult find_zero_divisor(const StructureConstantAlgebra& a, long bound);

/// Minimal right ideal inside z*A, shrunk by iterated multiplication. Over a
/// finite field z may be omitted and is found by enumeration. Throws if the
/// algebra is a division algebra (no zero divisor available).
Subspace minimal_right_ideal(const StructureConstantAlgebra& a,
                             const std::vector<FieldElement>* z = nullptr);

/// Dimensions of right ideals generated by single elements (exhaustive over
/// all elements of a small finite algebra).
std::set<long> right_ideal_dimensions(const StructureConstantAlgebra& a);

}  // namespace brauer

#endif  // BRAUER_ALGEBRA_HPP
