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

#ifndef BRAUER_SBFINITE_HPP
#define BRAUER_SBFINITE_HPP

#include <map>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/matrix.hpp"

namespace brauer {

/// A point of P^n over a finite field, normalized so the first nonzero
/// coordinate is 1. Normalization makes the representation unique.
struct ProjectivePoint {
  FieldPtr field;
  std::vector<FieldElement> coords;

  bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
  bool operator<(const ProjectivePoint& o) const;
  std::string str() const;
};

ProjectivePoint normalize_point(const FieldPtr& field, std::vector<FieldElement> coords);

/// All points of P^n(F_q) in lexicographic order of normalized coordinates.
/// The count is (q^(n+1) - 1) / (q - 1).
std::vector<ProjectivePoint> projective_points(long n, const FieldPtr& field);

/**
 * A global tangent vector field on P^n, identified with an (n+1)x(n+1)
 * matrix modulo scalars. The canonical representative subtracts
 * (trace/(n+1)) * identity when the characteristic does not divide n+1;
 * otherwise the matrix is stored verbatim and compared modulo scalars.
 */
struct TangentSection {
  Matrix a;
  bool traceless_normalized = false;

  long n() const { return static_cast<long>(a.rows()) - 1; }
  bool is_scalar() const { return a.is_scalar(); }
};
TangentSection make_tangent_section(Matrix a);
bool same_section(const TangentSection& s1, const TangentSection& s2);

/**
 * Zero locus of the section: the points p with A p in span(p), i.e. the
 * eigenvector points of A. Computed two ways (per-point membership test and
 * eigenspace analysis through the characteristic polynomial) and
 * cross-checked. A scalar matrix is the zero section: its locus is
 * everything, reported as the distinct scalar_section outcome.
 */
struct ZeroLocus {
  bool scalar_section = false;
  std::vector<ProjectivePoint> zeros;
};
ZeroLocus section_zero_locus(const TangentSection& s, const FieldPtr& field);

/**
 * Zero-count statistics. For diagonal sections with distinct entries the
 * count is exactly n+1 (checked on `trials` deterministic draws); for random
 * non-scalar matrices a histogram of counts is collected.
 */
struct SectionZeroStats {
  long diagonal_trials = 0;
  bool diagonal_always_n_plus_1 = true;
  std::map<long, long> histogram;  // zero count -> occurrences (random draws)
};
SectionZeroStats general_section_zero_count(long n, const FieldPtr& field, long trials,
                                            uint64_t seed = 20260810);

/**
 * The summand-to-span dictionary: B must have r+1 simple nonzero eigenvalues
 * in F_q and an (n-r)-dimensional kernel eigenspace. Returns the span of the
 * r+1 isolated eigenvectors as an echelon-basis subspace.
 */
Subspace summand_to_span(const Matrix& b);

/**
 * The minimal-right-ideal <-> point dictionary for M_{n+1}(F_q): each point p
 * corresponds to the right ideal of matrices whose column space lies in the
 * line spanned by p (dimension n+1). Counts are checked equal and each ideal
 * is verified to be minimal and generated by a single element.
 */
struct IdealPointDictionary {
  std::vector<ProjectivePoint> points;
  std::vector<Subspace> ideals;  // ideals[i] corresponds to points[i]
  long matrix_size = 0;          // n+1
};
IdealPointDictionary ideal_point_dictionary(long n, const FieldPtr& field);

}  // namespace brauer

#endif  // BRAUER_SBFINITE_HPP
