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

#ifndef BRAUER_CIRCLES_HPP
#define BRAUER_CIRCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "brauer/cyclic.hpp"

namespace brauer {

/**
 * A circle of rational curves with all components and nodes defined over the
 * base field: components C_0, ..., C_{m-1} in a cycle, node i gluing infinity
 * of component i-1 to 0 of component i. Length 1 is the nodal curve.
 */
struct SplitCircle {
  FieldPtr field;
  long length = 0;
};
SplitCircle make_split_circle(FieldPtr field, long length);

/// A circle whose components are permuted cyclically by Gal(K/k); determined
/// by the cyclic extension descriptor (the chosen sigma maps C_i to C_{i+1}).
struct GaloisCircle {
  FieldPtr ext;
  long length() const { return ext->degree(); }
};
GaloisCircle make_galois_circle(FieldPtr ext);

/// Degree-0 line bundle on a split circle: gluing scalars lambda_i at the
/// nodes, all nonzero.
struct SplitLineBundle {
  SplitCircle circle;
  std::vector<FieldElement> lambda;
};
SplitLineBundle make_split_line_bundle(SplitCircle circle, std::vector<FieldElement> lambda);

/// Degree-0 line bundle on a Galois circle: the gluing is sigma-semilinear
/// and determined by lambda(1) in K*.
struct GaloisLineBundle {
  GaloisCircle circle;
  FieldElement lambda1;
};
GaloisLineBundle make_galois_line_bundle(GaloisCircle circle, FieldElement lambda1);

/**
 * Rank-r bundle on a Galois circle by gluing data: an invertible
 * sigma-semilinear operator on K^r, stored as a matrix over K composed with
 * coordinatewise sigma (Lambda(w) = M * sigma(w)).
 */
struct GluedBundle {
  GaloisCircle circle;
  long rank = 0;
  Matrix mat;
};
GluedBundle make_glued_bundle(GaloisCircle circle, Matrix mat);

/// c1 of a split line bundle: the product of the gluing scalars. The bundle
/// is trivial iff the product is 1, and then an explicit section witness
/// (alpha_0 = 1, alpha_{i+1} = lambda_i alpha_i) is produced.
struct SplitClassResult {
  FieldElement c1;
  bool trivial = false;
  std::vector<FieldElement> section;  // nonempty iff trivial
};
SplitClassResult c1_split(const SplitLineBundle& l);

/// Class of a Galois line bundle: norm(lambda1) in k*. Trivial iff the norm
/// is 1, witnessed by a Hilbert-90 element f with lambda1 = f / sigma(f).
struct GaloisClassResult {
  FieldElement cls;
  bool trivial = false;
  std::optional<FieldElement> witness;
};
GaloisClassResult galois_class(const GaloisLineBundle& l);

/// Base change of a Galois line bundle to the split circle over K: gluing
/// tuple (lambda1, sigma(lambda1), ..., sigma^{m-1}(lambda1)).
SplitLineBundle pullback(const GaloisLineBundle& l);

/**
 * Pushforward of a degree-0 line bundle on C(m, K) along C(m,K) -> C(K/k):
 * the rank-m glued bundle with Lambda(w)_{i+1} = sigma^{i+1}(lambda_i) *
 * sigma(w_i). The convention-independent postconditions hold: the base
 * change decomposes as the direct sum of the Galois conjugates of L, and the
 * result is geometrically split iff prod lambda_i lies in k*.
 */
GluedBundle pushforward(const FieldPtr& ext, const SplitLineBundle& l_over_k_big);

/**
 * c1 invariants of the line-bundle summands of the base change to K: the
 * eigenvalues of the twisted monodromy T = M sigma(M) ... sigma^{m-1}(M),
 * when T is diagonalizable over K (nullopt otherwise).
 */
std::optional<std::vector<FieldElement>> base_change_classes(const GluedBundle& b);

/// All base-change summands isomorphic: T diagonalizable with one eigenvalue.
bool geometrically_split(const GluedBundle& b);

/**
 * Global endomorphism algebra: { Phi in End_K(K^r) : Phi Lambda = Lambda Phi }
 * as a k-algebra (the commutation condition reads Phi M = M sigma(Phi)).
 * For a geometrically split bundle of rank m this is a central simple
 * algebra of dimension m^2 whose class matches norm membership of c1.
 */
StructureConstantAlgebra global_end_algebra(const GluedBundle& b);

/**
 * Degree-0 Abel invariant from zero/pole data: points are given by affine
 * coordinates in K* (never at a node), zeros[i] and poles[i] listing the
 * data on component i with equal counts per component. The invariant is
 * (prod poles)/(prod zeros); on a split circle a rational section with this
 * data exists iff the invariant is 1 (the gluing recurrence for the
 * per-component constants is solvable), and the witness constants are
 * returned.
 */
struct AbelResult {
  FieldElement invariant;
  bool realizable = false;
  std::vector<FieldElement> section_constants;
};
AbelResult abel_invariant_split(const SplitCircle& circle,
                                const std::vector<std::vector<FieldElement>>& zeros,
                                const std::vector<std::vector<FieldElement>>& poles);

/// Galois circle: conjugation generates the data on the other components
/// from component 0, and the invariant is norm((prod poles)/(prod zeros)).
FieldElement abel_invariant_galois(const GaloisCircle& circle,
                                   const std::vector<FieldElement>& zeros0,
                                   const std::vector<FieldElement>& poles0);

/// The Brauer class of a split line bundle over K whose c1 lies in k*:
/// (K/k, prod lambda_i).
CyclicBrauerClass class_of_circle_bundle(const FieldPtr& ext, const SplitLineBundle& l);

/// A finite group by multiplication table over indices 0..order-1.
struct GroupTable {
  long order = 0;
  std::vector<long> mul;  // mul[a * order + b]
  long identity = 0;
  std::vector<long> inverse;

  long times(long a, long b) const { return mul[a * order + b]; }
  static GroupTable from_table(std::vector<long> mul);
  static GroupTable cyclic(long n);
  static GroupTable symmetric3();
};

/**
 * The universal-curve graph for (G, g): vertices are the group elements (a
 * principal homogeneous G-space), edges are the pairs (gamma, s*gamma) for s
 * in the conjugation-invariant generating set g. Each edge is one rational
 * component joining node gamma (its 0) to node s*gamma (its infinity). The
 * G-action h.(gamma, s) = (h*gamma, h s h^-1) partitions the edges into |g|
 * free orbits; the graph is connected since g generates.
 */
struct CurveEdge {
  long src = 0;        // gamma, carrying 0 of the component
  long dst = 0;        // s * gamma, carrying infinity
  long generator = 0;  // s
  long orbit = 0;      // index into the generating set of gamma^-1 s gamma
};
struct CurveGraph {
  GroupTable group;
  std::vector<long> generators;  // sorted
  std::vector<CurveEdge> edges;  // ordered by (src, generator)
  long vertex_count() const { return group.order; }
  long edge_count() const { return static_cast<long>(edges.size()); }
  long orbit_count() const { return static_cast<long>(generators.size()); }
  bool connected = false;
};
CurveGraph build_universal_curve(const GroupTable& g, std::vector<long> generators);

}  // namespace brauer

#endif  // BRAUER_CIRCLES_HPP
