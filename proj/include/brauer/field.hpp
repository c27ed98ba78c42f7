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

#ifndef BRAUER_FIELD_HPP
#define BRAUER_FIELD_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "brauer/numeric.hpp"
#include "brauer/verdict.hpp"

namespace brauer {

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

enum class FieldKind {
  Rationals,          // Q
  PrimeField,         // F_p
  FiniteField,        // F_{p^k}, canonical modulus over F_p
  RationalFunctions,  // base(t)
  CyclicExtension     // degree-m cyclic extension of the base with explicit sigma
};

/**
 * A value in an exact field tower. Canonical form is unique per value, so
 * equality is plain representational equality:
 *  - rationals are reduced with positive denominator,
 *  - prime-field values are the integer representative in [0, p),
 *  - extension elements are coefficient vectors of length m over the base,
 *  - rational functions are reduced fractions with monic denominator.
 */
class FieldElement {
 public:
  FieldElement() = default;  // detached placeholder; any arithmetic throws

  static FieldElement zero(const FieldPtr& f);
  static FieldElement one(const FieldPtr& f);
  static FieldElement from_integer(const FieldPtr& f, const Integer& n);
  static FieldElement from_rational(const FieldPtr& f, const Rational& q);
  static FieldElement from_prime_value(const FieldPtr& f, long v);
  /// Extension element from coordinates over the base (constant-first);
  /// shorter vectors are zero-padded to length m.
  static FieldElement from_coords(const FieldPtr& f, std::vector<FieldElement> coords);
  /// Rational function from raw coefficient vectors (constant-first);
  /// reduces to lowest terms with monic denominator.
  static FieldElement from_fraction(const FieldPtr& f, std::vector<FieldElement> num,
                                    std::vector<FieldElement> den);
  /// The distinguished generator: the class of x in an extension, or t in a
  /// rational function field.
  static FieldElement generator(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;
  FieldElement pow(const Integer& e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Height: max(|num|, |den|) for rationals, integer representative for
  /// prime fields, max coordinate/coefficient height for compound values.
  Integer height() const;

  std::string str() const;

  // representation accessors (throw on kind mismatch)
  const Rational& rat() const;
  long prime_value() const;
  const std::vector<FieldElement>& coords() const;
  const std::vector<FieldElement>& num() const;
  const std::vector<FieldElement>& den() const;

 private:
  struct Ext {
    std::vector<FieldElement> c;
    bool operator==(const Ext&) const = default;
  };
  struct RatFn {
    std::vector<FieldElement> num;  // trimmed, empty = zero
    std::vector<FieldElement> den;  // monic, never empty
    bool operator==(const RatFn&) const = default;
  };
  using Rep = std::variant<std::monostate, Rational, long, Ext, RatFn>;

  FieldElement(FieldPtr f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}

  FieldPtr field_;
  Rep rep_;
};

/**
 * Immutable description of a field in the tower. Descriptors are shared and
 * compared structurally; all derived data (reduction tables, the sigma
 * action as a base-linear map) is precomputed at construction, so instances
 * are safe to share across threads.
 */
class FieldDescriptor {
 public:
  FieldKind kind() const { return kind_; }
  long characteristic() const { return char_; }
  /// Extension degree m (1 for Q, F_p and rational function fields).
  long degree() const { return degree_; }
  const FieldPtr& base() const { return base_; }
  /// Monic modulus polynomial over the base, constant-first, length m+1.
  const std::vector<FieldElement>& modulus() const { return modulus_; }
  /// Coordinates of sigma(xbar) over the base.
  const std::vector<FieldElement>& sigma_image() const { return sigma_image_; }
  /// Coordinates of sigma(xbar^j) for j < m.
  const std::vector<std::vector<FieldElement>>& sigma_basis_images() const {
    return sigma_basis_images_;
  }
  /// Coordinates of xbar^(m+i) for i < m-1 (multiplication reduction table).
  const std::vector<std::vector<FieldElement>>& high_power_coords() const {
    return high_power_coords_;
  }

  bool is_finite() const;
  Integer cardinality() const;  // finite fields only
  bool is_extension() const {
    return kind_ == FieldKind::FiniteField || kind_ == FieldKind::CyclicExtension;
  }
  /// True for cyclic extensions of a rational function field whose modulus
  /// and sigma have constant coefficients (the degree law
  /// deg(norm(f)) = m*deg(f) holds for these).
  bool is_constant_field_extension() const { return constant_field_ext_; }

  bool same_field(const FieldDescriptor& o) const;
  std::string short_name() const;

  static FieldPtr rationals();
  static FieldPtr prime_field(long p);
  /// F_{p^k} with the canonical modulus: the lexicographically smallest monic
  /// irreducible of degree k (coefficients constant-first, elements ordered
  /// by integer representative). k = 1 returns the prime field.
  static FieldPtr finite_field(long p, long k);
  static FieldPtr rational_functions(FieldPtr base);
  /// Degree-m cyclic extension with explicit generator automorphism, given by
  /// the image of xbar. Validates: modulus monic irreducible, sigma fixes the
  /// base, maps xbar to a modulus root, and has exact order m.
  static FieldPtr cyclic_extension(FieldPtr base, long m, std::vector<FieldElement> modulus,
                                   std::vector<FieldElement> sigma_image);
  /// F_{q^m}/F_q with canonical modulus and sigma = Frobenius x -> x^q.
  static FieldPtr finite_extension(FieldPtr base, long m);
  /// F_{p^m}(t)/F_p(t): constant-field extension, sigma = Frobenius on
  /// constants (fixes t).
  static FieldPtr constant_extension(FieldPtr ratfn_base, long m);
  /// Q(i)/Q with modulus x^2+1 and sigma = complex conjugation.
  static FieldPtr gaussian_rationals();

  static constexpr long kMaxFiniteCardinality = 1 << 20;

 private:
  FieldDescriptor() = default;
  void finalize_extension();  // precomputes tables, validates sigma

  FieldKind kind_ = FieldKind::Rationals;
  long char_ = 0;
  long degree_ = 1;
  FieldPtr base_;
  std::vector<FieldElement> modulus_;
  std::vector<FieldElement> sigma_image_;
  std::vector<std::vector<FieldElement>> sigma_basis_images_;
  std::vector<std::vector<FieldElement>> high_power_coords_;
  bool constant_field_ext_ = false;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// --- Galois action, norm and trace -----------------------------------------

FieldElement apply_sigma(const FieldElement& x);
FieldElement apply_sigma_pow(const FieldElement& x, long i);
/// norm(x) = prod_{i<m} sigma^i(x); lands in the base field.
FieldElement norm(const FieldPtr& ext, const FieldElement& x);
/// trace(x) = sum_{i<m} sigma^i(x); lands in the base field.
FieldElement trace(const FieldPtr& ext, const FieldElement& x);
/// Image of a base-field element one level up the tower.
FieldElement embed(const FieldPtr& into, const FieldElement& x);
/// Image of an element of any field below `into` in the same tower.
FieldElement lift_to(const FieldPtr& into, const FieldElement& x);
/// Inverse of embed when the value lies in the base; nullopt otherwise.
std::optional<FieldElement> try_contract(const FieldElement& x);

// --- enumeration and ordering -----------------------------------------------

Integer integer_rep(const FieldElement& x);
FieldElement element_from_rep(const FieldPtr& f, const Integer& rep);
/// All elements of a finite field ordered by integer representative.
std::vector<FieldElement> enumerate_field(const FieldPtr& f);
std::vector<FieldElement> enumerate_units(const FieldPtr& f);
/// Elements of exact height h (infinite fields: Q and extensions of Q).
std::vector<FieldElement> elements_of_height(const FieldPtr& f, long h);
/// deg(num) - deg(den) for rational functions, extended to elements of a
/// constant-field extension (degree over the extended constant field).
long fraction_degree(const FieldElement& x);

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng);
FieldElement random_unit(const FieldPtr& f, std::mt19937_64& rng);

// --- norm membership and Hilbert 90 ----------------------------------------

/**
 * Bounded decision of "a in norm(K*)".
 *
 * Proved carries a preimage f with norm(f) = a. Refuted carries one of the
 * three supported decisive certificates:
 *   - "exhaustive enumeration" over a finite field,
 *   - "degree certificate" over a constant-field extension of F_p(t)
 *     (deg norm(f) = m * deg f, so m must divide deg a),
 *   - "sign certificate" over Q with imaginary quadratic K (norms are
 *     non-negative, a < 0).
 * Everything else is Unknown after exhausting candidates of height <= bound.
 */
struct NormMembership {
  Outcome outcome = Outcome::Unknown;
  std::optional<FieldElement> witness;
  std::string certificate;
  long bound = 0;
};
NormMembership norm_membership(const FieldPtr& ext, const FieldElement& a, long bound);

/// Constructive Hilbert 90: given norm(lambda) = 1, returns f != 0 with
/// lambda = f / sigma(f), via the resolvent
/// f = sum_i (prod_{j<i} sigma^j(lambda)) sigma^i(c) over a spanning set of c.
FieldElement hilbert90_witness(const FieldPtr& ext, const FieldElement& lambda);

}  // namespace brauer

#endif  // BRAUER_FIELD_HPP
