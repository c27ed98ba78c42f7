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

#include "brauer/cyclic.hpp"

#include <sstream>

namespace brauer {

namespace {

void require_class_inputs(const FieldPtr& ext, const FieldElement& a) {
  if (!ext || !ext->is_extension() || ext->sigma_image().empty())
    throw ValidationError("a cyclic extension descriptor is required");
  if (!a.valid() || !a.field()->same_field(*ext->base()))
    throw ValidationError("class element must lie in the base field");
  if (a.is_zero()) throw ValidationError("class element must be nonzero");
}

bool algebra_constructible(const FieldPtr& ext) {
  return ext->degree() <= 6 &&
         (ext->is_finite() || ext->base()->kind() == FieldKind::Rationals);
}

}  // namespace

CyclicBrauerClass make_class(FieldPtr ext, FieldElement a) {
  require_class_inputs(ext, a);
  return CyclicBrauerClass{std::move(ext), std::move(a)};
}

CyclicBrauerClass multiply_classes(const CyclicBrauerClass& c1, const CyclicBrauerClass& c2) {
  if (!c1.ext->same_field(*c2.ext))
    throw ValidationError("classes over different cyclic extensions are not composable");
  return CyclicBrauerClass{c1.ext, c1.a * c2.a};
}

CyclicBrauerClass invert_class(const CyclicBrauerClass& c) {
  return CyclicBrauerClass{c.ext, c.a.inverse()};
}

NormMembership classes_equal(const CyclicBrauerClass& c1, const CyclicBrauerClass& c2,
                             long bound) {
  if (!c1.ext->same_field(*c2.ext))
    throw ValidationError("classes over different cyclic extensions are not comparable");
  return norm_membership(c1.ext, c1.a / c2.a, bound);
}

StructureConstantAlgebra build_cyclic_algebra(const FieldPtr& ext, const FieldElement& a) {
  require_class_inputs(ext, a);
  long m = ext->degree();
  long n = m * m;
  const FieldPtr& base = ext->base();
  FieldElement gen = FieldElement::generator(ext);
  // basis x^j u^i at index i*m + j; (x^j u^i)(x^l u^h) = x^j sigma^i(x^l) u^(i+h)
  // with u^m = a
  std::vector<FieldElement> table(static_cast<size_t>(n) * n * n, FieldElement::zero(base));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      for (long h = 0; h < m; ++h)
        for (long l = 0; l < m; ++l) {
          FieldElement kelt = gen.pow(j) * apply_sigma_pow(gen.pow(l), i);
          long power = i + h;
          if (power >= m) kelt = kelt * embed(ext, a);
          long iw = power % m;
          const auto& coords = kelt.coords();
          for (long r = 0; r < m; ++r)
            table[(static_cast<size_t>(i * m + j) * n + (h * m + l)) * n + (iw * m + r)] =
                coords[r];
        }
  std::vector<FieldElement> unit(n, FieldElement::zero(base));
  unit[0] = FieldElement::one(base);
  std::vector<std::string> names;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      std::string s;
      if (j == 1) s += "x";
      if (j > 1) s += "x^" + std::to_string(j);
      if (i == 1) s += "u";
      if (i > 1) s += "u^" + std::to_string(i);
      if (s.empty()) s = "1";
      names.push_back(s);
    }
  return StructureConstantAlgebra(base, n, std::move(table), std::move(unit), std::move(names));
}

Matrix SplittingRep::represent(const std::vector<FieldElement>& coords) const {
  long n = static_cast<long>(basis_images.size());
  if (static_cast<long>(coords.size()) != n)
    throw ValidationError("coordinate vector has the wrong length");
  Matrix out(ext, ext->degree(), ext->degree());
  for (long i = 0; i < n; ++i) {
    if (coords[i].is_zero()) continue;
    FieldElement scale = embed(ext, coords[i]);
    for (size_t r = 0; r < out.rows(); ++r)
      for (size_t c = 0; c < out.cols(); ++c)
        out.at(r, c) = out.at(r, c) + scale * basis_images[i].at(r, c);
  }
  return out;
}

SplittingRep splitting_representation(const FieldPtr& ext, const FieldElement& a) {
  require_class_inputs(ext, a);
  long m = ext->degree();
  FieldElement gen = FieldElement::generator(ext);
  // image of x: diag(x, sigma x, ..., sigma^{m-1} x)
  Matrix dx(ext, m, m);
  for (long r = 0; r < m; ++r) dx.at(r, r) = apply_sigma_pow(gen, r);
  // image of u: cyclic shift with a single entry a
  Matrix su(ext, m, m);
  for (long r = 0; r + 1 < m; ++r) su.at(r, r + 1) = FieldElement::one(ext);
  su.at(m - 1, 0) = embed(ext, a);

  SplittingRep rep;
  rep.ext = ext;
  rep.a = a;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      Matrix img = Matrix::identity(ext, m);
      for (long t = 0; t < j; ++t) img = img * dx;
      for (long t = 0; t < i; ++t) img = img * su;
      rep.basis_images.push_back(img);
    }

  // homomorphism check on all basis pairs against the abstract algebra
  StructureConstantAlgebra alg = build_cyclic_algebra(ext, a);
  long n = m * m;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Matrix lhs = rep.basis_images[i] * rep.basis_images[j];
      std::vector<FieldElement> prod = alg.multiply(alg.basis_element(i), alg.basis_element(j));
      Matrix rhs = rep.represent(prod);
      if (!(lhs == rhs)) throw std::logic_error("splitting representation is not a homomorphism");
    }
  // injectivity: flatten the images over the base and check full rank
  Matrix flat(ext->base(), n, n * m);
  for (long bidx = 0; bidx < n; ++bidx)
    for (long r = 0; r < m; ++r)
      for (long c = 0; c < m; ++c) {
        const auto& coords = rep.basis_images[bidx].at(r, c).coords();
        for (long t = 0; t < m; ++t) flat.at(bidx, (r * m + c) * m + t) = coords[t];
      }
  if (flat.rank() != static_cast<size_t>(n))
    throw std::logic_error("splitting representation is not injective");
  return rep;
}

FieldElement reduced_norm_value(const SplittingRep& rep,
                                const std::vector<FieldElement>& coords) {
  FieldElement det = rep.represent(coords).det();
  auto down = try_contract(det);
  if (!down) throw std::logic_error("reduced norm did not land in the base field");
  return *down;
}

ReducedNormForm::ReducedNormForm(FieldPtr base, long m,
                                 std::map<std::vector<uint8_t>, FieldElement> coeffs)
    : base_(std::move(base)), m_(m), coeffs_(std::move(coeffs)) {}

FieldElement ReducedNormForm::evaluate(const std::vector<FieldElement>& coords) const {
  if (static_cast<long>(coords.size()) != m_ * m_)
    throw ValidationError("coordinate vector has the wrong length");
  FieldElement acc = FieldElement::zero(base_);
  for (auto& [expo, coeff] : coeffs_) {
    FieldElement term = coeff;
    for (long v = 0; v < m_ * m_; ++v)
      for (uint8_t e = 0; e < expo[v]; ++e) term = term * coords[v];
    acc = acc + term;
  }
  return acc;
}

std::string ReducedNormForm::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  // reverse map order puts low-index variables first
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [expo, coeff] = *it;
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (!coeff.is_one()) {
      os << coeff.str();
      printed = true;
    }
    for (long v = 0; v < m_ * m_; ++v) {
      if (expo[v] == 0) continue;
      if (printed) os << "*";
      os << names[v];
      if (expo[v] > 1) os << "^" << static_cast<int>(expo[v]);
      printed = true;
    }
    if (!printed) os << "1";
  }
  if (first) return "0";
  return os.str();
}

namespace {

// sparse multivariate polynomial over K, fixed-length exponent vectors
using MPoly = std::map<std::vector<uint8_t>, FieldElement>;

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<uint8_t> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint8_t>(e[i] + eb[i]);
      FieldElement prod = ca * cb;
      auto it = out.find(e);
      if (it == out.end())
        out.emplace(std::move(e), prod);
      else {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

void mpoly_accumulate(MPoly& acc, const MPoly& a, bool negate) {
  for (auto& [e, c] : a) {
    FieldElement v = negate ? -c : c;
    auto it = acc.find(e);
    if (it == acc.end())
      acc.emplace(e, v);
    else {
      it->second = it->second + v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  MPoly acc;
  for (size_t r = 0; r < n; ++r) {
    if (m[r][0].empty()) continue;
    std::vector<std::vector<MPoly>> minor;
    minor.reserve(n - 1);
    for (size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    mpoly_accumulate(acc, mpoly_mul(m[r][0], mpoly_det(minor)), r % 2 == 1);
  }
  return acc;
}

}  // namespace

ReducedNormForm reduced_norm_form(const FieldPtr& ext, const FieldElement& a) {
  require_class_inputs(ext, a);
  long m = ext->degree();
  if (m > 4) throw UnsupportedError("symbolic reduced norm supported up to degree 4");
  SplittingRep rep = splitting_representation(ext, a);
  long nvars = m * m;
  // generic element sum_v X_v * basis_images[v]: every entry is a linear form
  std::vector<std::vector<MPoly>> mat(m, std::vector<MPoly>(m));
  for (long v = 0; v < nvars; ++v)
    for (long r = 0; r < m; ++r)
      for (long c = 0; c < m; ++c) {
        const FieldElement& entry = rep.basis_images[v].at(r, c);
        if (entry.is_zero()) continue;
        std::vector<uint8_t> e(nvars, 0);
        e[v] = 1;
        auto it = mat[r][c].find(e);
        if (it == mat[r][c].end())
          mat[r][c].emplace(std::move(e), entry);
        else
          it->second = it->second + entry;
      }
  MPoly det = mpoly_det(mat);
  std::map<std::vector<uint8_t>, FieldElement> coeffs;
  for (auto& [e, c] : det) {
    auto down = try_contract(c);
    if (!down) throw std::logic_error("reduced norm coefficient outside the base field");
    coeffs.emplace(e, *down);
  }
  ReducedNormForm form(ext->base(), m, std::move(coeffs));
  std::vector<FieldElement> unit(nvars, FieldElement::zero(ext->base()));
  unit[0] = FieldElement::one(ext->base());
  if (!form.evaluate(unit).is_one()) throw std::logic_error("reduced norm of the unit is not 1");
  return form;
}

namespace {

// right annihilator of u - b when norm(b) = a:
// w = sum_i w_i u^i with w_0 = 1, w_i = sigma(w_{i-1}) / b
std::vector<FieldElement> explicit_zero_divisor_partner(const FieldPtr& ext,
                                                        const FieldElement& b) {
  long m = ext->degree();
  std::vector<FieldElement> w{FieldElement::one(ext)};
  for (long i = 1; i < m; ++i) w.push_back(apply_sigma(w[i - 1]) / b);
  std::vector<FieldElement> coords(m * m, FieldElement::zero(ext->base()));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) coords[i * m + j] = w[i].coords()[j];
  return coords;
}

std::vector<FieldElement> u_minus_b_coords(const FieldPtr& ext, const FieldElement& b) {
  long m = ext->degree();
  std::vector<FieldElement> coords(m * m, FieldElement::zero(ext->base()));
  coords[m] = FieldElement::one(ext->base());  // u = x^0 u^1
  for (long j = 0; j < m; ++j) coords[j] = coords[j] - b.coords()[j];
  return coords;
}

bool positive_definite_quaternion(const CyclicBrauerClass& c) {
  // K imaginary quadratic over Q and a < 0: Nrd = N(x0+x1 w) - a N(x2+x3 w)
  // is positive definite, so the algebra has no zero divisors at all
  const FieldPtr& ext = c.ext;
  if (ext->degree() != 2) return false;
  if (ext->base()->kind() != FieldKind::Rationals) return false;
  const auto& mod = ext->modulus();
  Rational b = mod[1].rat(), cc = mod[0].rat();
  if (b * b - 4 * cc >= 0) return false;
  return c.a.rat() < 0;
}

}  // namespace

SplitVerdict is_split(const CyclicBrauerClass& c, long bound) {
  SplitVerdict v;
  v.membership = norm_membership(c.ext, c.a, bound);
  v.outcome = v.membership.outcome;
  if (v.outcome == Outcome::Proved && algebra_constructible(c.ext)) {
    // cross-check with the explicit zero divisor (u - b) * w = 0
    StructureConstantAlgebra alg = build_cyclic_algebra(c.ext, c.a);
    std::vector<FieldElement> x = u_minus_b_coords(c.ext, *v.membership.witness);
    std::vector<FieldElement> y = explicit_zero_divisor_partner(c.ext, *v.membership.witness);
    if (alg.is_zero_vec(x) || alg.is_zero_vec(y))
      throw std::logic_error("degenerate explicit zero divisor");
    if (!alg.is_zero_vec(alg.multiply(x, y)))
      throw std::logic_error("explicit zero divisor failed to annihilate");
    v.zero_divisor_x = std::move(x);
    v.zero_divisor_y = std::move(y);
    v.cross_checked = true;
  }
  return v;
}

ZeroDivisorResult find_zero_divisor(const CyclicBrauerClass& c, long bound) {
  if (positive_definite_quaternion(c)) {
    ZeroDivisorResult res;
    res.outcome = Outcome::Refuted;
    res.certificate = "positive-definite reduced norm";
    res.bound = bound;
    return res;
  }
  SplitVerdict sv = is_split(c, bound);
  if (sv.outcome == Outcome::Proved && sv.cross_checked) {
    ZeroDivisorResult res;
    res.outcome = Outcome::Proved;
    res.x = sv.zero_divisor_x;
    res.y = sv.zero_divisor_y;
    res.certificate = "norm-preimage zero divisor";
    res.bound = bound;
    return res;
  }
  if (!algebra_constructible(c.ext)) {
    ZeroDivisorResult res;
    res.outcome = Outcome::Unknown;
    res.certificate = "algebra search not feasible over this base";
    res.bound = bound;
    return res;
  }
  return find_zero_divisor(build_cyclic_algebra(c.ext, c.a), bound);
}

PeriodResult period(const CyclicBrauerClass& c, long bound) {
  long m = c.ext->degree();
  PeriodResult pr;
  pr.bound = bound;
  std::string refutation;  // how the smaller divisors were excluded
  for (long d : divisors_sorted(m)) {
    NormMembership nm;
    if (d == m) {
      // a^m = norm(a) always
      nm.outcome = Outcome::Proved;
      nm.witness = lift_to(c.ext, c.a);
      nm.certificate = "norm witness";
    } else {
      nm = norm_membership(c.ext, c.a.pow(d), bound);
    }
    if (nm.outcome == Outcome::Proved) {
      pr.decided = true;
      pr.value = d;
      // minimality rests on the refutations below d; name their certificate
      pr.certificate = refutation.empty() ? "norm witness" : refutation;
      pr.witness = nm.witness;
      return pr;
    }
    if (nm.outcome == Outcome::Unknown) {
      pr.decided = false;
      pr.value = d;  // smallest divisor not yet excluded
      pr.certificate = "undecided at divisor " + std::to_string(d);
      return pr;
    }
    if (refutation.empty()) refutation = nm.certificate;
  }
  throw std::logic_error("period: a^m must always be a norm");
}

IndexBounds index_bounds(const CyclicBrauerClass& c, long bound) {
  long m = c.ext->degree();
  IndexBounds ib;
  ib.upper = m;
  PeriodResult pr = period(c, bound);
  if (!pr.decided) {
    ib.lower = 1;
    ib.lower_decided = false;
    ib.note = "period undecided; bounds are generic";
    return ib;
  }
  ib.lower = pr.value;
  ib.lower_decided = true;
  // largest divisor of m that is a multiple of the period with the same
  // prime factors (period | index | period^(m-1) and index | m)
  long best = pr.value;
  for (long u : divisors_sorted(m))
    if (u % pr.value == 0 && radical_of(u) == radical_of(pr.value)) best = std::max(best, u);
  ib.upper = best;
  // over a finite field the explicit algebra is available and the minimal
  // right ideal has dimension m * index; use it to pin the index
  if (c.ext->is_finite() && m <= 4 &&
      integer_pow(c.ext->base()->cardinality(), m) <= (1 << 12)) {
    StructureConstantAlgebra alg = build_cyclic_algebra(c.ext, c.a);
    Subspace ideal = minimal_right_ideal(alg);
    long idx = static_cast<long>(ideal.dim()) / m;
    ib.upper = std::min(ib.upper, idx);
    ib.lower = std::max(ib.lower, idx);
    ib.note = "pinned by minimal right ideal dimension";
  }
  if (ib.lower == ib.upper) ib.exact = true;
  if (ib.upper % ib.lower != 0 || m % ib.upper != 0)
    throw std::logic_error("index bounds violate divisibility");
  Integer cap = integer_pow(Integer(pr.value), m - 1);
  if (cap % ib.upper != 0) throw std::logic_error("index bound exceeds period power");
  return ib;
}

std::vector<PrimaryPart> primary_decomposition(const CyclicBrauerClass& c, long bound) {
  PeriodResult pr = period(c, bound);
  if (!pr.decided) throw ValidationError("primary decomposition requires a decided period");
  long n = pr.value;
  std::vector<PrimaryPart> parts;
  if (n == 1) return parts;  // trivial class, empty decomposition
  auto factors = factorize(n);
  if (factors.size() == 1) {
    parts.push_back({c, factors[0].first, n});
    return parts;
  }
  // a_i = n / p_i^{c_i}; solve sum e_i a_i = 1 by iterated extended gcd
  std::vector<long> ai;
  for (auto& [p, e] : factors) {
    long pe = 1;
    for (long t = 0; t < e; ++t) pe *= p;
    ai.push_back(n / pe);
  }
  std::vector<long> ei(ai.size(), 0);
  long g = ai[0];
  ei[0] = 1;
  for (size_t i = 1; i < ai.size(); ++i) {
    ExtendedGcd eg = extended_gcd(g, ai[i]);
    for (size_t j = 0; j < i; ++j) ei[j] *= eg.x;
    ei[i] = eg.y;
    g = eg.g;
  }
  if (g != 1) throw std::logic_error("gcd of period cofactors is not 1");
  for (size_t i = 0; i < ai.size(); ++i) {
    long pe = n / ai[i];
    CyclicBrauerClass part{c.ext, c.a.pow(Integer(ei[i]) * ai[i])};
    parts.push_back({part, factors[i].first, pe});
  }
  // reconstruction: the parts multiply back to the original class exactly
  FieldElement prod = FieldElement::one(c.a.field());
  for (auto& p : parts) prod = prod * p.cls.a;
  if (prod != c.a) throw std::logic_error("primary parts do not multiply back");
  return parts;
}

bool curve_constraints(long ind, long deg_c, long chi) {
  if (ind < 1) throw ValidationError("index must be positive");
  if (ind % 2 == 1) return deg_c % ind == 0 && chi % ind == 0;
  return (deg_c + chi) % ind == 0 && chi % (ind / 2) == 0;
}

}  // namespace brauer
