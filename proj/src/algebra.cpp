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

#include "brauer/algebra.hpp"

#include <sstream>

namespace brauer {

namespace {

constexpr long kMaxAssociativityDim = 64;
const Integer kMaxEnumeration = 1 << 20;

}  // namespace

StructureConstantAlgebra::StructureConstantAlgebra(FieldPtr field, long dim,
                                                   std::vector<FieldElement> table,
                                                   std::vector<FieldElement> unit,
                                                   std::vector<std::string> basis_names)
    : field_(std::move(field)), dim_(dim), table_(std::move(table)), unit_(std::move(unit)),
      names_(std::move(basis_names)) {
  if (dim_ < 1) throw ValidationError("algebra dimension must be positive");
  if (dim_ > kMaxAssociativityDim) throw UnsupportedError("algebra dimension beyond limit");
  if (static_cast<long>(table_.size()) != dim_ * dim_ * dim_)
    throw ValidationError("multiplication table has the wrong size");
  if (static_cast<long>(unit_.size()) != dim_) throw ValidationError("unit vector size mismatch");
  for (auto& x : table_)
    if (!x.valid() || !x.field()->same_field(*field_))
      throw ValidationError("table entry not in the base field");
  for (auto& x : unit_)
    if (!x.valid() || !x.field()->same_field(*field_))
      throw ValidationError("unit coordinate not in the base field");
  if (names_.empty()) {
    for (long i = 0; i < dim_; ++i) names_.push_back("b" + std::to_string(i));
  } else if (static_cast<long>(names_.size()) != dim_) {
    throw ValidationError("basis name count mismatch");
  }

  // unit laws on all basis elements
  for (long i = 0; i < dim_; ++i) {
    std::vector<FieldElement> bi = basis_element(i);
    if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
      throw ValidationError("unit laws fail on the proposed unit");
  }
  // associativity on all basis triples
  for (long i = 0; i < dim_; ++i) {
    std::vector<FieldElement> bi = basis_element(i);
    for (long j = 0; j < dim_; ++j) {
      std::vector<FieldElement> bj = basis_element(j);
      std::vector<FieldElement> bij = multiply(bi, bj);
      for (long k = 0; k < dim_; ++k) {
        std::vector<FieldElement> bk = basis_element(k);
        if (multiply(bij, bk) != multiply(bi, multiply(bj, bk)))
          throw ValidationError("multiplication table is not associative");
      }
    }
  }
}

std::vector<FieldElement> StructureConstantAlgebra::multiply(
    const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) const {
  if (static_cast<long>(x.size()) != dim_ || static_cast<long>(y.size()) != dim_)
    throw ValidationError("element dimension mismatch");
  std::vector<FieldElement> out(dim_, FieldElement::zero(field_));
  for (long i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (long j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      FieldElement xy = x[i] * y[j];
      for (long k = 0; k < dim_; ++k) {
        const FieldElement& cijk = c(i, j, k);
        if (!cijk.is_zero()) out[k] = out[k] + xy * cijk;
      }
    }
  }
  return out;
}

std::vector<FieldElement> StructureConstantAlgebra::basis_element(long i) const {
  std::vector<FieldElement> v(dim_, FieldElement::zero(field_));
  v[i] = FieldElement::one(field_);
  return v;
}

std::vector<FieldElement> StructureConstantAlgebra::zero_element() const {
  return std::vector<FieldElement>(dim_, FieldElement::zero(field_));
}

Matrix StructureConstantAlgebra::left_regular(const std::vector<FieldElement>& x) const {
  Matrix m(field_, dim_, dim_);
  for (long j = 0; j < dim_; ++j) {
    std::vector<FieldElement> col = multiply(x, basis_element(j));
    for (long i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix StructureConstantAlgebra::right_regular(const std::vector<FieldElement>& x) const {
  Matrix m(field_, dim_, dim_);
  for (long j = 0; j < dim_; ++j) {
    std::vector<FieldElement> col = multiply(basis_element(j), x);
    for (long i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool StructureConstantAlgebra::is_zero_vec(const std::vector<FieldElement>& x) const {
  for (auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

std::string StructureConstantAlgebra::element_str(const std::vector<FieldElement>& x) const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!x[i].is_one()) os << x[i].str() << "*";
    os << names_[i];
  }
  if (first) return "0";
  return os.str();
}

StructureConstantAlgebra StructureConstantAlgebra::matrix_algebra(const FieldPtr& field, long n) {
  long dim = n * n;
  std::vector<FieldElement> table(static_cast<size_t>(dim) * dim * dim,
                                  FieldElement::zero(field));
  auto idx = [n](long r, long c) { return r * n + c; };
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c2 = 0; c2 < n; ++c2)
        for (long d = 0; d < n; ++d)
          if (b == c2)  // e_ab * e_cd = delta(b,c) e_ad
            table[(static_cast<size_t>(idx(a, b)) * dim + idx(c2, d)) * dim + idx(a, d)] =
                FieldElement::one(field);
  std::vector<FieldElement> unit(dim, FieldElement::zero(field));
  for (long a = 0; a < n; ++a) unit[idx(a, a)] = FieldElement::one(field);
  std::vector<std::string> names;
  for (long r = 0; r < n; ++r)
    for (long c2 = 0; c2 < n; ++c2)
      names.push_back("e" + std::to_string(r + 1) + std::to_string(c2 + 1));
  return StructureConstantAlgebra(field, dim, std::move(table), std::move(unit),
                                  std::move(names));
}

StructureConstantAlgebra StructureConstantAlgebra::field_as_algebra(const FieldPtr& ext) {
  if (!ext->is_extension()) throw ValidationError("field_as_algebra needs an extension");
  long m = ext->degree();
  const FieldPtr& base = ext->base();
  std::vector<FieldElement> table(static_cast<size_t>(m) * m * m, FieldElement::zero(base));
  FieldElement gen = FieldElement::generator(ext);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      FieldElement prod = gen.pow(i) * gen.pow(j);
      for (long k = 0; k < m; ++k) table[(static_cast<size_t>(i) * m + j) * m + k] =
          prod.coords()[k];
    }
  std::vector<FieldElement> unit(m, FieldElement::zero(base));
  unit[0] = FieldElement::one(base);
  std::vector<std::string> names{"1"};
  for (long i = 1; i < m; ++i) names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  return StructureConstantAlgebra(base, m, std::move(table), std::move(unit), std::move(names));
}

Subspace center(const StructureConstantAlgebra& a) {
  long n = a.dim();
  // stack (L_{b_i} - R_{b_i}) over all i and take the kernel
  Matrix big(a.field(), n * n, n);
  for (long i = 0; i < n; ++i) {
    Matrix l = a.left_regular(a.basis_element(i));
    Matrix r = a.right_regular(a.basis_element(i));
    for (long row = 0; row < n; ++row)
      for (long col = 0; col < n; ++col)
        big.at(i * n + row, col) = l.at(row, col) - r.at(row, col);
  }
  return Subspace(a.field(), n, big.kernel_basis());
}

Subspace radical(const StructureConstantAlgebra& a) {
  long n = a.dim();
  std::vector<Matrix> lmats;
  lmats.reserve(n);
  for (long i = 0; i < n; ++i) lmats.push_back(a.left_regular(a.basis_element(i)));
  Matrix form(a.field(), n, n);
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) {
      // tr(L_{b_i b_j}) = tr(L_{b_i} L_{b_j})
      FieldElement t = FieldElement::zero(a.field());
      for (long r = 0; r < n; ++r)
        for (long c2 = 0; c2 < n; ++c2) {
          if (lmats[i].at(r, c2).is_zero()) continue;
          t = t + lmats[i].at(r, c2) * lmats[j].at(c2, r);
        }
      form.at(i, j) = t;
      form.at(j, i) = t;
    }
  auto kernel = form.kernel_basis();
  // the Jacobson radical is contained in the kernel in every characteristic,
  // so a trivial kernel proves semisimplicity unconditionally
  if (kernel.empty()) return Subspace(a.field(), n, {});
  long p = a.field()->characteristic();
  if (p != 0 && p <= n)
    throw UnsupportedError(
        "radical: degenerate trace form with characteristic <= dimension; result would be "
        "unreliable");
  return Subspace(a.field(), n, std::move(kernel));
}

bool is_central_simple(const StructureConstantAlgebra& a) {
  if (center(a).dim() != 1) return false;
  if (radical(a).dim() != 0) return false;
  long n = a.dim();
  long root = 0;
  while (root * root < n) ++root;
  if (root * root != n)
    throw std::logic_error("semisimple with 1-dimensional center but non-square dimension");
  return true;
}

StructureConstantAlgebra tensor_product(const StructureConstantAlgebra& a,
                                        const StructureConstantAlgebra& b) {
  if (!a.field()->same_field(*b.field())) throw ValidationError("tensor product base mismatch");
  long na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<FieldElement> table(static_cast<size_t>(n) * n * n, FieldElement::zero(a.field()));
  auto idx = [nb](long i, long j) { return i * nb + j; };
  for (long i1 = 0; i1 < na; ++i1)
    for (long j1 = 0; j1 < nb; ++j1)
      for (long i2 = 0; i2 < na; ++i2)
        for (long j2 = 0; j2 < nb; ++j2)
          for (long k1 = 0; k1 < na; ++k1) {
            const FieldElement& ca = a.c(i1, i2, k1);
            if (ca.is_zero()) continue;
            for (long k2 = 0; k2 < nb; ++k2) {
              const FieldElement& cb = b.c(j1, j2, k2);
              if (cb.is_zero()) continue;
              table[(static_cast<size_t>(idx(i1, j1)) * n + idx(i2, j2)) * n + idx(k1, k2)] =
                  ca * cb;
            }
          }
  std::vector<FieldElement> unit(n, FieldElement::zero(a.field()));
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j) {
      FieldElement u = a.unit()[i] * b.unit()[j];
      if (!u.is_zero()) unit[idx(i, j)] = u;
    }
  std::vector<std::string> names;
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < nb; ++j)
      names.push_back(a.basis_names()[i] + "(x)" + b.basis_names()[j]);
  return StructureConstantAlgebra(a.field(), n, std::move(table), std::move(unit),
                                  std::move(names));
}

StructureConstantAlgebra opposite(const StructureConstantAlgebra& a) {
  long n = a.dim();
  std::vector<FieldElement> table(static_cast<size_t>(n) * n * n, FieldElement::zero(a.field()));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k)
        table[(static_cast<size_t>(i) * n + j) * n + k] = a.c(j, i, k);
  return StructureConstantAlgebra(a.field(), n, std::move(table), a.unit(), a.basis_names());
}

SandwichResult sandwich_map(const StructureConstantAlgebra& a) {
  long n = a.dim();
  SandwichResult res;
  res.map = Matrix(a.field(), n * n, n * n);
  // column (i,j) is the map z -> b_i z b_j flattened with rows s*n+t
  for (long i = 0; i < n; ++i) {
    std::vector<FieldElement> bi = a.basis_element(i);
    for (long j = 0; j < n; ++j) {
      std::vector<FieldElement> bj = a.basis_element(j);
      for (long t = 0; t < n; ++t) {
        std::vector<FieldElement> img = a.multiply(a.multiply(bi, a.basis_element(t)), bj);
        for (long s = 0; s < n; ++s) res.map.at(s * n + t, i * n + j) = img[s];
      }
    }
  }
  res.rank = static_cast<long>(res.map.rank());
  res.full = (res.rank == n * n);
  return res;
}

namespace {

// deterministic enumeration of coordinate vectors over a finite field
// (odometer with coordinate 0 fastest, elements by integer representative);
// starts just after the zero vector
class FiniteVectorEnum {
 public:
  explicit FiniteVectorEnum(const StructureConstantAlgebra& a)
      : a_(a), elems_(enumerate_field(a.field())) {
    digits_.assign(a.dim(), 0);
  }
  bool next(std::vector<FieldElement>& out) {
    long pos = 0;
    while (pos < a_.dim()) {
      if (++digits_[pos] < elems_.size()) break;
      digits_[pos] = 0;
      ++pos;
    }
    if (pos == a_.dim()) return false;
    out.clear();
    for (long i = 0; i < a_.dim(); ++i) out.push_back(elems_[digits_[i]]);
    return true;
  }

 private:
  const StructureConstantAlgebra& a_;
  std::vector<FieldElement> elems_;
  std::vector<size_t> digits_;
};

// nonzero integer vectors ordered by increasing max-norm, then odometer order
class IntegerVectorEnum {
 public:
  IntegerVectorEnum(long dim, long bound) : dim_(dim), bound_(bound) {}
  bool next(std::vector<long>& out) {
    while (true) {
      if (!advance()) return false;
      long mx = 0;
      for (long v : current_) mx = std::max(mx, std::abs(v));
      if (mx == height_) {
        out = current_;
        return true;
      }
    }
  }

 private:
  bool advance() {
    if (height_ == 0) {
      ++height_;
      if (height_ > bound_) return false;
      current_.assign(dim_, -height_);
      return true;
    }
    long pos = 0;
    while (pos < dim_) {
      if (++current_[pos] <= height_) break;
      current_[pos] = -height_;
      ++pos;
    }
    if (pos < dim_) return true;
    ++height_;
    if (height_ > bound_) return false;
    current_.assign(dim_, -height_);
    return true;
  }
  long dim_, bound_;
  long height_ = 0;
  std::vector<long> current_;
};

std::optional<std::vector<FieldElement>> kernel_partner(const StructureConstantAlgebra& a,
                                                        const std::vector<FieldElement>& x) {
  auto ker = a.left_regular(x).kernel_basis();
  if (ker.empty()) return std::nullopt;
  return ker.front();
}

}  // namespace

ZeroDivisorResult find_zero_divisor(const StructureConstantAlgebra& a, long bound) {
  ZeroDivisorResult res;
  res.bound = bound;
  if (a.field()->is_finite()) {
    Integer total = integer_pow(a.field()->cardinality(), a.dim());
    bool exhaustive = total <= kMaxEnumeration;
    FiniteVectorEnum en(a);
    std::vector<FieldElement> x;
    long seen = 0;
    while (en.next(x)) {
      ++seen;
      if (!exhaustive && seen > (1L << 16)) break;  // cap; CSAs hit long before
      auto y = kernel_partner(a, x);
      if (y) {
        if (!a.is_zero_vec(a.multiply(x, *y)))
          throw std::logic_error("kernel partner does not annihilate");
        res.outcome = Outcome::Proved;
        res.x = x;
        res.y = *y;
        res.certificate = "enumeration";
        return res;
      }
    }
    if (exhaustive) {
      res.outcome = Outcome::Refuted;
      res.certificate = "exhaustive enumeration";
    } else {
      res.outcome = Outcome::Unknown;
      res.certificate = "enumeration cap reached";
    }
    return res;
  }

  // infinite base field: integer vectors suffice, zero divisors are scale invariant
  IntegerVectorEnum en(a.dim(), bound);
  std::vector<long> v;
  while (en.next(v)) {
    std::vector<FieldElement> x;
    x.reserve(a.dim());
    for (long c : v) x.push_back(FieldElement::from_integer(a.field(), c));
    auto y = kernel_partner(a, x);
    if (y) {
      res.outcome = Outcome::Proved;
      res.x = x;
      res.y = *y;
      res.certificate = "bounded integer search";
      return res;
    }
  }
  res.outcome = Outcome::Unknown;
  res.certificate = "bounded search exhausted";
  return res;
}

namespace {

Subspace right_ideal_of(const StructureConstantAlgebra& a, const std::vector<FieldElement>& z) {
  std::vector<std::vector<FieldElement>> rows;
  for (long j = 0; j < a.dim(); ++j) rows.push_back(a.multiply(z, a.basis_element(j)));
  return Subspace(a.field(), a.dim(), std::move(rows));
}

}  // namespace

Subspace minimal_right_ideal(const StructureConstantAlgebra& a,
                             const std::vector<FieldElement>* z) {
  std::vector<FieldElement> gen;
  if (z != nullptr) {
    gen = *z;
    if (a.is_zero_vec(gen)) throw ValidationError("zero element generates the zero ideal");
  } else {
    if (!a.field()->is_finite())
      throw ValidationError("no zero divisor available (division algebra or infinite search)");
    ZeroDivisorResult zd = find_zero_divisor(a, 0);
    if (zd.outcome != Outcome::Proved)
      throw ValidationError("no zero divisor available (division algebra)");
    gen = zd.x;
  }
  Subspace ideal = right_ideal_of(a, gen);

  bool improved = true;
  while (improved) {
    improved = false;
    if (a.field()->is_finite()) {
      Integer combos = integer_pow(a.field()->cardinality(), ideal.dim());
      if (combos > kMaxEnumeration) throw UnsupportedError("ideal too large to shrink");
      std::vector<FieldElement> elems = enumerate_field(a.field());
      std::vector<size_t> digits(ideal.dim(), 0);
      while (!improved) {
        long pos = 0;
        while (pos < static_cast<long>(ideal.dim())) {
          if (++digits[pos] < elems.size()) break;
          digits[pos] = 0;
          ++pos;
        }
        if (pos == static_cast<long>(ideal.dim())) break;
        std::vector<FieldElement> w = a.zero_element();
        for (size_t i = 0; i < ideal.dim(); ++i) {
          if (elems[digits[i]].is_zero()) continue;
          for (long k = 0; k < a.dim(); ++k)
            w[k] = w[k] + elems[digits[i]] * ideal.basis()[i][k];
        }
        if (a.is_zero_vec(w)) continue;
        Subspace sub = right_ideal_of(a, w);
        if (sub.dim() > 0 && sub.dim() < ideal.dim()) {
          ideal = sub;
          improved = true;
        }
      }
    } else {
      IntegerVectorEnum en(static_cast<long>(ideal.dim()), 2);
      std::vector<long> v;
      while (!improved && en.next(v)) {
        std::vector<FieldElement> w = a.zero_element();
        for (size_t i = 0; i < ideal.dim(); ++i)
          for (long k = 0; k < a.dim(); ++k)
            w[k] = w[k] + FieldElement::from_integer(a.field(), v[i]) * ideal.basis()[i][k];
        if (a.is_zero_vec(w)) continue;
        Subspace sub = right_ideal_of(a, w);
        if (sub.dim() > 0 && sub.dim() < ideal.dim()) {
          ideal = sub;
          improved = true;
        }
      }
    }
  }
  return ideal;
}

std::set<long> right_ideal_dimensions(const StructureConstantAlgebra& a) {
  if (!a.field()->is_finite())
    throw ValidationError("right ideal enumeration needs a finite base field");
  Integer total = integer_pow(a.field()->cardinality(), a.dim());
  if (total > kMaxEnumeration) throw UnsupportedError("algebra too large to enumerate");
  std::set<long> dims{0};
  FiniteVectorEnum en(a);
  std::vector<FieldElement> x;
  while (en.next(x)) dims.insert(static_cast<long>(right_ideal_of(a, x).dim()));
  return dims;
}

}  // namespace brauer
