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

#include "brauer/sbfinite.hpp"

#include <algorithm>
#include <sstream>

#include "brauer/polynomial.hpp"

namespace brauer {

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
  if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    Integer a = integer_rep(coords[i]), b = integer_rep(o.coords[i]);
    if (a != b) return a < b;
  }
  return false;
}

std::string ProjectivePoint::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ":";
    os << coords[i].str();
  }
  os << ")";
  return os.str();
}

ProjectivePoint normalize_point(const FieldPtr& field, std::vector<FieldElement> coords) {
  size_t lead = coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == coords.size()) throw ValidationError("projective point has all coordinates zero");
  FieldElement inv = coords[lead].inverse();
  for (auto& c : coords) c = c * inv;
  return ProjectivePoint{field, std::move(coords)};
}

std::vector<ProjectivePoint> projective_points(long n, const FieldPtr& field) {
  if (n < 0) throw ValidationError("negative projective dimension");
  if (!field->is_finite()) throw ValidationError("point enumeration needs a finite field");
  Integer count = (integer_pow(field->cardinality(), n + 1) - 1) / (field->cardinality() - 1);
  if (count > FieldDescriptor::kMaxFiniteCardinality)
    throw UnsupportedError("too many projective points to enumerate");
  std::vector<FieldElement> elems = enumerate_field(field);
  std::vector<ProjectivePoint> out;
  // normalized form: leading coordinate 1 at position `lead`, zeros before,
  // free coordinates after; lexicographic order by normalized coordinates
  // means iterating lead ascending after all-zero prefixes
  for (long lead = 0; lead <= n; ++lead) {
    long free = n - lead;
    std::vector<size_t> digits(free, 0);
    while (true) {
      std::vector<FieldElement> coords;
      coords.reserve(n + 1);
      for (long i = 0; i < lead; ++i) coords.push_back(FieldElement::zero(field));
      coords.push_back(FieldElement::one(field));
      for (long i = 0; i < free; ++i) coords.push_back(elems[digits[i]]);
      out.push_back(ProjectivePoint{field, std::move(coords)});
      long pos = free - 1;
      while (pos >= 0) {
        if (++digits[pos] < elems.size()) break;
        digits[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TangentSection make_tangent_section(Matrix a) {
  if (a.rows() != a.cols()) throw ValidationError("tangent section needs a square matrix");
  long np1 = static_cast<long>(a.rows());
  const FieldPtr& f = a.field();
  long p = f->characteristic();
  TangentSection s;
  if (p == 0 || np1 % p != 0) {
    // subtract (trace / (n+1)) * identity: unique traceless representative
    FieldElement shift = a.trace() / FieldElement::from_integer(f, np1);
    for (long i = 0; i < np1; ++i) a.at(i, i) = a.at(i, i) - shift;
    s.traceless_normalized = true;
  }
  s.a = std::move(a);
  return s;
}

bool same_section(const TangentSection& s1, const TangentSection& s2) {
  if (s1.a.rows() != s2.a.rows()) return false;
  if (s1.traceless_normalized && s2.traceless_normalized) return s1.a == s2.a;
  // compare modulo scalar matrices: the difference must be scalar
  return (s1.a - s2.a).is_scalar();
}

namespace {

std::vector<ProjectivePoint> locus_by_membership(const Matrix& a, const FieldPtr& field) {
  long n = static_cast<long>(a.rows()) - 1;
  std::vector<ProjectivePoint> zeros;
  for (const ProjectivePoint& pt : projective_points(n, field)) {
    std::vector<FieldElement> img = a.apply(pt.coords);
    // A p in span(p): the 2 x (n+1) matrix [p; Ap] has rank <= 1
    Matrix two = Matrix::from_rows(field, {pt.coords, img});
    if (two.rank() <= 1) zeros.push_back(pt);
  }
  return zeros;
}

std::vector<ProjectivePoint> locus_by_eigenspaces(const Matrix& a, const FieldPtr& field) {
  long np1 = static_cast<long>(a.rows());
  std::vector<ProjectivePoint> zeros;
  Polynomial cp(field, char_poly(a));
  for (const FieldElement& lambda : poly_roots(cp)) {
    Matrix shifted = a;
    for (long i = 0; i < np1; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
    auto kernel = shifted.kernel_basis();
    if (kernel.empty()) continue;
    // all projective points of the eigenspace: nonzero combinations of the
    // kernel basis, normalized and deduplicated
    std::vector<FieldElement> elems = enumerate_field(field);
    std::vector<size_t> digits(kernel.size(), 0);
    while (true) {
      long pos = 0;
      while (pos < static_cast<long>(kernel.size())) {
        if (++digits[pos] < elems.size()) break;
        digits[pos] = 0;
        ++pos;
      }
      if (pos == static_cast<long>(kernel.size())) break;
      std::vector<FieldElement> v(np1, FieldElement::zero(field));
      for (size_t i = 0; i < kernel.size(); ++i) {
        if (elems[digits[i]].is_zero()) continue;
        for (long k = 0; k < np1; ++k) v[k] = v[k] + elems[digits[i]] * kernel[i][k];
      }
      zeros.push_back(normalize_point(field, std::move(v)));
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  return zeros;
}

}  // namespace

ZeroLocus section_zero_locus(const TangentSection& s, const FieldPtr& field) {
  ZeroLocus out;
  if (s.is_scalar()) {
    out.scalar_section = true;  // the zero section vanishes everywhere
    return out;
  }
  out.zeros = locus_by_membership(s.a, field);
  std::vector<ProjectivePoint> eig = locus_by_eigenspaces(s.a, field);
  if (out.zeros != eig)
    throw std::logic_error("zero locus double computation disagreed");
  return out;
}

SectionZeroStats general_section_zero_count(long n, const FieldPtr& field, long trials,
                                            uint64_t seed) {
  if (!field->is_finite()) throw ValidationError("zero-count statistics need a finite field");
  Integer q = field->cardinality();
  if (q <= n + 1) throw ValidationError("q must exceed n+1 so distinct diagonal entries exist");
  std::mt19937_64 rng(seed);
  std::vector<FieldElement> elems = enumerate_field(field);
  SectionZeroStats stats;
  for (long t = 0; t < trials; ++t) {
    // diagonal with distinct entries: draw n+1 distinct field elements
    std::vector<size_t> picks;
    while (picks.size() < static_cast<size_t>(n + 1)) {
      size_t cand = static_cast<size_t>(rng() % elems.size());
      if (std::find(picks.begin(), picks.end(), cand) == picks.end()) picks.push_back(cand);
    }
    Matrix diag(field, n + 1, n + 1);
    for (long i = 0; i <= n; ++i) diag.at(i, i) = elems[picks[i]];
    ZeroLocus locus = section_zero_locus(make_tangent_section(diag), field);
    ++stats.diagonal_trials;
    if (static_cast<long>(locus.zeros.size()) != n + 1) stats.diagonal_always_n_plus_1 = false;
    // a random matrix for the histogram
    Matrix rnd(field, n + 1, n + 1);
    for (long r = 0; r <= n; ++r)
      for (long c = 0; c <= n; ++c) rnd.at(r, c) = elems[rng() % elems.size()];
    if (rnd.is_scalar()) continue;
    ZeroLocus rl = section_zero_locus(make_tangent_section(rnd), field);
    ++stats.histogram[static_cast<long>(rl.zeros.size())];
  }
  return stats;
}

Subspace summand_to_span(const Matrix& b) {
  if (b.rows() != b.cols()) throw ValidationError("summand_to_span needs a square matrix");
  const FieldPtr& field = b.field();
  long np1 = static_cast<long>(b.rows());
  Polynomial cp(field, char_poly(b));
  // validate the eigenstructure: char poly = x^(n-r) * prod (x - lambda_i)
  // with distinct nonzero lambda_i in the field
  std::vector<FieldElement> roots = poly_roots(cp);
  std::vector<FieldElement> nonzero;
  long zero_mult = 0;
  Polynomial rest = cp;
  Polynomial xpoly = Polynomial::x(field);
  while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
    rest = rest.divmod(xpoly).first;
    ++zero_mult;
  }
  for (const FieldElement& r : roots) {
    if (r.is_zero()) continue;
    Polynomial lin(field, {-r, FieldElement::one(field)});
    Polynomial quo = rest.divmod(lin).first;
    if ((rest % lin).is_zero()) {
      if ((quo % lin).is_zero())
        throw ValidationError("eigenvalue of multiplicity > 1 is nonzero");
      nonzero.push_back(r);
      rest = quo;
    }
  }
  if (rest.degree() != 0)
    throw ValidationError("matrix has eigenvalues outside the base field");
  long r_plus_1 = static_cast<long>(nonzero.size());
  if (r_plus_1 == 0) throw ValidationError("no nonzero eigenvalues");
  if (zero_mult != np1 - r_plus_1)
    throw ValidationError("kernel eigenspace has the wrong dimension");
  // the kernel must be exactly (n+1) - (r+1)-dimensional (no nilpotence)
  if (static_cast<long>(b.kernel_basis().size()) != zero_mult)
    throw ValidationError("kernel eigenspace is not semisimple");

  // span of the isolated eigenvectors
  std::vector<std::vector<FieldElement>> vectors;
  for (const FieldElement& lambda : nonzero) {
    Matrix shifted = b;
    for (long i = 0; i < np1; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
    auto kernel = shifted.kernel_basis();
    if (kernel.size() != 1) throw std::logic_error("simple eigenvalue with bad eigenspace");
    vectors.push_back(kernel.front());
  }
  return Subspace(field, np1, std::move(vectors));
}

IdealPointDictionary ideal_point_dictionary(long n, const FieldPtr& field) {
  if (!field->is_finite()) throw ValidationError("dictionary needs a finite field");
  if (n > 3 || field->cardinality() > 4)
    throw UnsupportedError("dictionary enumeration limited to n <= 3, q <= 4");
  IdealPointDictionary dict;
  dict.matrix_size = n + 1;
  dict.points = projective_points(n, field);
  StructureConstantAlgebra alg = StructureConstantAlgebra::matrix_algebra(field, n + 1);
  for (const ProjectivePoint& pt : dict.points) {
    // the right ideal of matrices with column space inside span(pt) is
    // generated by the single rank-1 matrix pt * e_0^T
    std::vector<FieldElement> gen(alg.dim(), FieldElement::zero(field));
    for (long r = 0; r <= n; ++r) gen[r * (n + 1) + 0] = pt.coords[r];
    Subspace ideal = minimal_right_ideal(alg, &gen);
    if (ideal.dim() != static_cast<size_t>(n + 1))
      throw std::logic_error("point ideal is not minimal of dimension n+1");
    dict.ideals.push_back(std::move(ideal));
  }
  // the assignment is injective: pairwise distinct ideals
  for (size_t i = 0; i < dict.ideals.size(); ++i)
    for (size_t j = i + 1; j < dict.ideals.size(); ++j)
      if (dict.ideals[i] == dict.ideals[j])
        throw std::logic_error("distinct points produced the same ideal");
  // counts agree: points of P^n(F_q) <-> minimal right ideals reachable from
  // rank-1 generators; every single-generated ideal of minimal dimension n+1
  // arises this way because column spaces of rank-1 matrices are lines
  return dict;
}

}  // namespace brauer
