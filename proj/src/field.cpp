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

#include "brauer/field.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "brauer/detail/polyops.hpp"

namespace brauer {

// ===========================================================================
// numeric.hpp implementations
// ===========================================================================

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, long>> factorize(long n) {
  if (n < 1) throw ValidationError("factorize: argument must be positive");
  std::vector<std::pair<long, long>> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      long e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors_sorted(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long radical_of(long n) {
  long r = 1;
  for (auto& [p, e] : factorize(n)) r *= p;
  return r;
}

ExtendedGcd extended_gcd(long a, long b) {
  if (b == 0) return {a, 1, 0};
  ExtendedGcd sub = extended_gcd(b, a % b);
  return {sub.g, sub.y, sub.x - (a / b) * sub.y};
}

Integer integer_pow(const Integer& base, long exp) {
  Integer r = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string integer_str(const Integer& n) { return n.str(); }

// ===========================================================================
// raw polynomial helpers
// ===========================================================================

namespace detail {

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

long deg(const Coeffs& c) { return static_cast<long>(c.size()) - 1; }

bool is_zero_poly(const Coeffs& c) { return c.empty(); }

Coeffs poly_add(const FieldPtr& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), FieldElement::zero(f));
  for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
  trim(out);
  return out;
}

Coeffs poly_sub(const FieldPtr& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), FieldElement::zero(f));
  for (size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
  trim(out);
  return out;
}

Coeffs poly_mul(const FieldPtr& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, FieldElement::zero(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  }
  trim(out);
  return out;
}

Coeffs poly_scale(const Coeffs& a, const FieldElement& s) {
  Coeffs out;
  out.reserve(a.size());
  for (auto& c : a) out.push_back(c * s);
  trim(out);
  return out;
}

std::pair<Coeffs, Coeffs> poly_divmod(const FieldPtr& f, const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw ValidationError("polynomial division by zero");
  Coeffs r = a, q;
  long db = deg(b);
  FieldElement lead_inv = b.back().inverse();
  if (deg(r) >= db) q.assign(deg(r) - db + 1, FieldElement::zero(f));
  while (deg(r) >= db) {
    long shift = deg(r) - db;
    FieldElement c = r.back() * lead_inv;
    q[shift] = c;
    for (long i = 0; i <= db; ++i) r[shift + i] = r[shift + i] - c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

Coeffs poly_mod(const FieldPtr& f, const Coeffs& a, const Coeffs& b) {
  return poly_divmod(f, a, b).second;
}

Coeffs poly_make_monic(const Coeffs& a) {
  if (a.empty()) return a;
  if (a.back().is_one()) return a;
  return poly_scale(a, a.back().inverse());
}

Coeffs poly_gcd(const FieldPtr& f, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    Coeffs r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(a);
}

Coeffs poly_pow_mod(const FieldPtr& f, Coeffs base, Integer e, const Coeffs& mod) {
  Coeffs result{FieldElement::one(f)};
  base = poly_mod(f, base, mod);
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mod(f, poly_mul(f, result, base), mod);
    base = poly_mod(f, poly_mul(f, base, base), mod);
    e >>= 1;
  }
  return result;
}

FieldElement poly_eval(const FieldPtr& f, const Coeffs& a, const FieldElement& at) {
  FieldElement acc = FieldElement::zero(f);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * at + *it;
  return acc;
}

}  // namespace detail

using detail::Coeffs;

// ===========================================================================
// FieldElement
// ===========================================================================

namespace {

void require_valid(const FieldElement& x) {
  if (!x.valid()) throw ValidationError("use of detached field element");
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  require_valid(a);
  require_valid(b);
  if (a.field().get() == b.field().get()) return;
  if (!a.field()->same_field(*b.field()))
    throw ValidationError("field mismatch between operands");
}

long mod_positive(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

FieldElement FieldElement::zero(const FieldPtr& f) {
  if (!f) throw ValidationError("null field descriptor");
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, Rational(0));
    case FieldKind::PrimeField:
      return FieldElement(f, 0L);
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      Ext e;
      e.c.assign(f->degree(), FieldElement::zero(f->base()));
      return FieldElement(f, std::move(e));
    }
    case FieldKind::RationalFunctions: {
      RatFn r;
      r.den = {FieldElement::one(f->base())};
      return FieldElement(f, std::move(r));
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement FieldElement::one(const FieldPtr& f) {
  return from_integer(f, 1);
}

FieldElement FieldElement::from_integer(const FieldPtr& f, const Integer& n) {
  if (!f) throw ValidationError("null field descriptor");
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, Rational(n));
    case FieldKind::PrimeField: {
      Integer r = n % f->characteristic();
      if (r < 0) r += f->characteristic();
      return FieldElement(f, static_cast<long>(r));
    }
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      FieldElement x = zero(f);
      auto& e = std::get<Ext>(x.rep_);
      e.c[0] = from_integer(f->base(), n);
      return x;
    }
    case FieldKind::RationalFunctions: {
      FieldElement c0 = from_integer(f->base(), n);
      RatFn r;
      if (!c0.is_zero()) r.num = {c0};
      r.den = {FieldElement::one(f->base())};
      return FieldElement(f, std::move(r));
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement FieldElement::from_rational(const FieldPtr& f, const Rational& q) {
  if (!f || f->kind() != FieldKind::Rationals)
    throw ValidationError("from_rational requires the rational field");
  return FieldElement(f, q);
}

FieldElement FieldElement::from_prime_value(const FieldPtr& f, long v) {
  if (!f || f->kind() != FieldKind::PrimeField)
    throw ValidationError("from_prime_value requires a prime field");
  return FieldElement(f, mod_positive(v, f->characteristic()));
}

FieldElement FieldElement::from_coords(const FieldPtr& f, std::vector<FieldElement> coords) {
  if (!f || !f->is_extension())
    throw ValidationError("from_coords requires an extension field");
  long m = f->degree();
  if (static_cast<long>(coords.size()) > m)
    throw ValidationError("coordinate vector longer than extension degree");
  for (auto& c : coords) {
    require_valid(c);
    if (!c.field()->same_field(*f->base()))
      throw ValidationError("coordinate not in the base field");
  }
  while (static_cast<long>(coords.size()) < m) coords.push_back(FieldElement::zero(f->base()));
  Ext e;
  e.c = std::move(coords);
  return FieldElement(f, std::move(e));
}

FieldElement FieldElement::from_fraction(const FieldPtr& f, std::vector<FieldElement> num,
                                         std::vector<FieldElement> den) {
  if (!f || f->kind() != FieldKind::RationalFunctions)
    throw ValidationError("from_fraction requires a rational function field");
  const FieldPtr& b = f->base();
  detail::trim(num);
  detail::trim(den);
  if (den.empty()) throw ValidationError("zero denominator");
  if (num.empty()) return zero(f);
  Coeffs g = detail::poly_gcd(b, num, den);
  if (detail::deg(g) > 0) {
    num = detail::poly_divmod(b, num, g).first;
    den = detail::poly_divmod(b, den, g).first;
  }
  if (!den.back().is_one()) {
    FieldElement inv = den.back().inverse();
    num = detail::poly_scale(num, inv);
    den = detail::poly_scale(den, inv);
  }
  RatFn r;
  r.num = std::move(num);
  r.den = std::move(den);
  return FieldElement(f, std::move(r));
}

FieldElement FieldElement::generator(const FieldPtr& f) {
  if (!f) throw ValidationError("null field descriptor");
  if (f->is_extension()) {
    FieldElement x = zero(f);
    auto& e = std::get<Ext>(x.rep_);
    if (f->degree() < 2) throw ValidationError("degree-1 extension has no generator");
    e.c[1] = FieldElement::one(f->base());
    return x;
  }
  if (f->kind() == FieldKind::RationalFunctions) {
    RatFn r;
    r.num = {FieldElement::zero(f->base()), FieldElement::one(f->base())};
    r.den = {FieldElement::one(f->base())};
    return FieldElement(f, std::move(r));
  }
  throw ValidationError("field has no distinguished generator");
}

bool FieldElement::is_zero() const {
  require_valid(*this);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(rep_) == 0;
    case FieldKind::PrimeField:
      return std::get<long>(rep_) == 0;
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      for (auto& c : std::get<Ext>(rep_).c)
        if (!c.is_zero()) return false;
      return true;
    }
    case FieldKind::RationalFunctions:
      return std::get<RatFn>(rep_).num.empty();
  }
  return false;
}

bool FieldElement::is_one() const {
  require_valid(*this);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return std::get<Rational>(rep_) == 1;
    case FieldKind::PrimeField:
      return std::get<long>(rep_) == 1;
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      const auto& c = std::get<Ext>(rep_).c;
      if (!c[0].is_one()) return false;
      for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      return true;
    }
    case FieldKind::RationalFunctions: {
      const auto& r = std::get<RatFn>(rep_);
      return r.num.size() == 1 && r.num[0].is_one() && r.den.size() == 1;
    }
  }
  return false;
}

FieldElement FieldElement::operator-() const {
  require_valid(*this);
  switch (field_->kind()) {
    case FieldKind::Rationals:
      return FieldElement(field_, -std::get<Rational>(rep_));
    case FieldKind::PrimeField:
      return FieldElement(field_, mod_positive(-std::get<long>(rep_), field_->characteristic()));
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      Ext e;
      for (auto& c : std::get<Ext>(rep_).c) e.c.push_back(-c);
      return FieldElement(field_, std::move(e));
    }
    case FieldKind::RationalFunctions: {
      const auto& r = std::get<RatFn>(rep_);
      RatFn out;
      for (auto& c : r.num) out.num.push_back(-c);
      out.den = r.den;
      return FieldElement(field_, std::move(out));
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FieldPtr& f = a.field_;
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, std::get<Rational>(a.rep_) + std::get<Rational>(b.rep_));
    case FieldKind::PrimeField:
      return FieldElement(
          f, mod_positive(std::get<long>(a.rep_) + std::get<long>(b.rep_), f->characteristic()));
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      FieldElement::Ext e;
      const auto& ca = std::get<FieldElement::Ext>(a.rep_).c;
      const auto& cb = std::get<FieldElement::Ext>(b.rep_).c;
      e.c.reserve(ca.size());
      for (size_t i = 0; i < ca.size(); ++i) e.c.push_back(ca[i] + cb[i]);
      return FieldElement(f, std::move(e));
    }
    case FieldKind::RationalFunctions: {
      const auto& ra = std::get<FieldElement::RatFn>(a.rep_);
      const auto& rb = std::get<FieldElement::RatFn>(b.rep_);
      const FieldPtr& base = f->base();
      Coeffs num = detail::poly_add(base, detail::poly_mul(base, ra.num, rb.den),
                                    detail::poly_mul(base, rb.num, ra.den));
      Coeffs den = detail::poly_mul(base, ra.den, rb.den);
      return FieldElement::from_fraction(f, std::move(num), std::move(den));
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FieldPtr& f = a.field_;
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, std::get<Rational>(a.rep_) * std::get<Rational>(b.rep_));
    case FieldKind::PrimeField:
      return FieldElement(
          f, (std::get<long>(a.rep_) * std::get<long>(b.rep_)) % f->characteristic());
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      const auto& ca = std::get<FieldElement::Ext>(a.rep_).c;
      const auto& cb = std::get<FieldElement::Ext>(b.rep_).c;
      const FieldPtr& base = f->base();
      long m = f->degree();
      // schoolbook product, then reduce x^(m+i) via the precomputed table
      std::vector<FieldElement> prod(2 * m - 1, FieldElement::zero(base));
      for (long i = 0; i < m; ++i) {
        if (ca[i].is_zero()) continue;
        for (long j = 0; j < m; ++j) prod[i + j] = prod[i + j] + ca[i] * cb[j];
      }
      std::vector<FieldElement> out(prod.begin(), prod.begin() + m);
      const auto& high = f->high_power_coords();
      for (long i = 0; i < m - 1; ++i) {
        if (prod[m + i].is_zero()) continue;
        for (long j = 0; j < m; ++j) out[j] = out[j] + prod[m + i] * high[i][j];
      }
      FieldElement::Ext e;
      e.c = std::move(out);
      return FieldElement(f, std::move(e));
    }
    case FieldKind::RationalFunctions: {
      const auto& ra = std::get<FieldElement::RatFn>(a.rep_);
      const auto& rb = std::get<FieldElement::RatFn>(b.rep_);
      const FieldPtr& base = f->base();
      return FieldElement::from_fraction(f, detail::poly_mul(base, ra.num, rb.num),
                                         detail::poly_mul(base, ra.den, rb.den));
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
  require_valid(*this);
  if (is_zero()) throw ValidationError("division by zero");
  const FieldPtr& f = field_;
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, 1 / std::get<Rational>(rep_));
    case FieldKind::PrimeField: {
      ExtendedGcd e = extended_gcd(std::get<long>(rep_), f->characteristic());
      return FieldElement(f, mod_positive(e.x, f->characteristic()));
    }
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      // extended Euclid against the modulus over the base field
      const FieldPtr& base = f->base();
      Coeffs r0(f->modulus());
      Coeffs r1(std::get<Ext>(rep_).c);
      detail::trim(r1);
      Coeffs s0, s1{FieldElement::one(base)};
      while (detail::deg(r1) > 0) {
        auto [q, r] = detail::poly_divmod(base, r0, r1);
        Coeffs s2 = detail::poly_sub(base, s0, detail::poly_mul(base, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r1 is a nonzero constant (modulus irreducible)
      Coeffs inv = detail::poly_scale(s1, r1[0].inverse());
      return FieldElement::from_coords(f, std::move(inv));
    }
    case FieldKind::RationalFunctions: {
      const auto& r = std::get<RatFn>(rep_);
      return FieldElement::from_fraction(f, r.den, r.num);
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement FieldElement::pow(const Integer& e) const {
  require_valid(*this);
  if (e < 0) return inverse().pow(-e);
  FieldElement result = FieldElement::one(field_);
  FieldElement base = *this;
  Integer k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  if (a.field_.get() != b.field_.get() && !a.field_->same_field(*b.field_)) return false;
  return a.rep_ == b.rep_;
}

Integer FieldElement::height() const {
  require_valid(*this);
  switch (field_->kind()) {
    case FieldKind::Rationals: {
      const Rational& q = std::get<Rational>(rep_);
      Integer n = boost::multiprecision::abs(boost::multiprecision::numerator(q));
      Integer d = boost::multiprecision::denominator(q);
      return std::max(n, d);
    }
    case FieldKind::PrimeField:
      return Integer(std::get<long>(rep_));
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      Integer h = 0;
      for (auto& c : std::get<Ext>(rep_).c) h = std::max(h, c.height());
      return h;
    }
    case FieldKind::RationalFunctions: {
      Integer h = 0;
      for (auto& c : std::get<RatFn>(rep_).num) h = std::max(h, c.height());
      for (auto& c : std::get<RatFn>(rep_).den) h = std::max(h, c.height());
      return h;
    }
  }
  return 0;
}

const Rational& FieldElement::rat() const {
  require_valid(*this);
  if (field_->kind() != FieldKind::Rationals) throw ValidationError("not a rational");
  return std::get<Rational>(rep_);
}

long FieldElement::prime_value() const {
  require_valid(*this);
  if (field_->kind() != FieldKind::PrimeField) throw ValidationError("not a prime field value");
  return std::get<long>(rep_);
}

const std::vector<FieldElement>& FieldElement::coords() const {
  require_valid(*this);
  if (!field_->is_extension()) throw ValidationError("not an extension element");
  return std::get<Ext>(rep_).c;
}

const std::vector<FieldElement>& FieldElement::num() const {
  require_valid(*this);
  if (field_->kind() != FieldKind::RationalFunctions)
    throw ValidationError("not a rational function");
  return std::get<RatFn>(rep_).num;
}

const std::vector<FieldElement>& FieldElement::den() const {
  require_valid(*this);
  if (field_->kind() != FieldKind::RationalFunctions)
    throw ValidationError("not a rational function");
  return std::get<RatFn>(rep_).den;
}

namespace {

std::string poly_str(const std::vector<FieldElement>& c, const char* var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || !c[i].is_one()) os << c[i].str();
    if (i > 0) {
      if (!c[i].is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

std::string FieldElement::str() const {
  if (!valid()) return "<detached>";
  switch (field_->kind()) {
    case FieldKind::Rationals: {
      const Rational& q = std::get<Rational>(rep_);
      if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
      return boost::multiprecision::numerator(q).str() + "/" +
             boost::multiprecision::denominator(q).str();
    }
    case FieldKind::PrimeField:
      return std::to_string(std::get<long>(rep_));
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      std::ostringstream os;
      os << "[";
      const auto& c = std::get<Ext>(rep_).c;
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].str();
      }
      os << "]";
      return os.str();
    }
    case FieldKind::RationalFunctions: {
      const auto& r = std::get<RatFn>(rep_);
      std::string n = poly_str(r.num, "t");
      if (r.den.size() == 1) return n;
      return "(" + n + ")/(" + poly_str(r.den, "t") + ")";
    }
  }
  return "?";
}

// ===========================================================================
// FieldDescriptor
// ===========================================================================

bool FieldDescriptor::is_finite() const {
  switch (kind_) {
    case FieldKind::PrimeField:
      return true;
    case FieldKind::FiniteField:
      return true;
    case FieldKind::CyclicExtension:
      return base_->is_finite();
    default:
      return false;
  }
}

Integer FieldDescriptor::cardinality() const {
  switch (kind_) {
    case FieldKind::PrimeField:
      return Integer(char_);
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      if (!is_finite()) throw ValidationError("cardinality of an infinite field");
      return integer_pow(base_->cardinality(), degree_);
    }
    default:
      throw ValidationError("cardinality of an infinite field");
  }
}

bool FieldDescriptor::same_field(const FieldDescriptor& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || char_ != o.char_ || degree_ != o.degree_) return false;
  switch (kind_) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return true;
    default:
      break;
  }
  if (!base_->same_field(*o.base_)) return false;
  if (modulus_.size() != o.modulus_.size() || sigma_image_.size() != o.sigma_image_.size())
    return false;
  for (size_t i = 0; i < modulus_.size(); ++i)
    if (modulus_[i] != o.modulus_[i]) return false;
  for (size_t i = 0; i < sigma_image_.size(); ++i)
    if (sigma_image_[i] != o.sigma_image_[i]) return false;
  return true;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->same_field(*b);
}

std::string FieldDescriptor::short_name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "F" + std::to_string(char_);
    case FieldKind::FiniteField:
      return "F" + cardinality().str();
    case FieldKind::RationalFunctions:
      return base_->short_name() + "t";
    case FieldKind::CyclicExtension: {
      if (is_finite()) return "F" + cardinality().str();
      if (base_->kind() == FieldKind::RationalFunctions && base_->base() &&
          constant_field_ext_) {
        Integer q = integer_pow(base_->base()->cardinality(), degree_);
        return "F" + q.str() + "t";
      }
      if (base_->kind() == FieldKind::Rationals && degree_ == 2 && modulus_.size() == 3 &&
          modulus_[0].is_one() && modulus_[1].is_zero())
        return "Qi";
      return base_->short_name() + "[x^" + std::to_string(degree_) + "]";
    }
  }
  return "?";
}

FieldPtr FieldDescriptor::rationals() {
  static FieldPtr q = [] {
    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::Rationals;
    return FieldPtr(d);
  }();
  return q;
}

FieldPtr FieldDescriptor::prime_field(long p) {
  if (!is_prime(p)) throw ValidationError("prime field characteristic must be prime");
  auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  d->kind_ = FieldKind::PrimeField;
  d->char_ = p;
  return d;
}

namespace {

// Lexicographically smallest monic irreducible of degree m over a finite
// base: coefficient tuples constant-first, field elements ordered by integer
// representative. Irreducibility by no-root + trial division.
bool raw_poly_irreducible_finite(const FieldPtr& base, const Coeffs& f);

Coeffs canonical_modulus(const FieldPtr& base, long m) {
  std::vector<FieldElement> elems = enumerate_field(base);
  std::vector<size_t> digits(m, 0);
  while (true) {
    Coeffs f;
    f.reserve(m + 1);
    for (long i = 0; i < m; ++i) f.push_back(elems[digits[i]]);
    f.push_back(FieldElement::one(base));
    if (raw_poly_irreducible_finite(base, f)) return f;
    // odometer with the last (leading-side) coordinate fastest: this walks
    // tuples (c_0,...,c_{m-1}) in lexicographic order
    long pos = m - 1;
    while (pos >= 0) {
      if (++digits[pos] < elems.size()) break;
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) throw ValidationError("no irreducible polynomial found");
  }
}

bool raw_poly_irreducible_finite(const FieldPtr& base, const Coeffs& f) {
  long d = detail::deg(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  // no roots
  for (const FieldElement& x : enumerate_field(base))
    if (detail::poly_eval(base, f, x).is_zero()) return false;
  if (d <= 3) return true;
  // trial division by all monic polynomials of degree 2..d/2
  Integer q = base->cardinality();
  for (long e = 2; 2 * e <= d; ++e) {
    if (integer_pow(q, e) > FieldDescriptor::kMaxFiniteCardinality)
      throw UnsupportedError("irreducibility test beyond supported size");
    std::vector<FieldElement> elems = enumerate_field(base);
    std::vector<size_t> digits(e, 0);
    while (true) {
      Coeffs g;
      g.reserve(e + 1);
      for (long i = 0; i < e; ++i) g.push_back(elems[digits[i]]);
      g.push_back(FieldElement::one(base));
      if (detail::poly_mod(base, f, g).empty()) return false;
      long pos = e - 1;
      while (pos >= 0) {
        if (++digits[pos] < elems.size()) break;
        digits[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return true;
}

}  // namespace

FieldPtr FieldDescriptor::finite_field(long p, long k) {
  if (!is_prime(p)) throw ValidationError("finite field characteristic must be prime");
  if (k < 1) throw ValidationError("finite field degree must be positive");
  if (integer_pow(p, k) > kMaxFiniteCardinality)
    throw UnsupportedError("finite field beyond supported size");
  if (k == 1) return prime_field(p);
  FieldPtr base = prime_field(p);
  auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  d->kind_ = FieldKind::FiniteField;
  d->char_ = p;
  d->degree_ = k;
  d->base_ = base;
  d->modulus_ = canonical_modulus(base, k);
  d->finalize_extension();
  // sigma = Frobenius x -> x^p
  Coeffs xbar{FieldElement::zero(base), FieldElement::one(base)};
  d->sigma_image_ = detail::poly_pow_mod(base, xbar, Integer(p), d->modulus_);
  while (static_cast<long>(d->sigma_image_.size()) < k)
    d->sigma_image_.push_back(FieldElement::zero(base));
  d->finalize_extension();
  return d;
}

FieldPtr FieldDescriptor::rational_functions(FieldPtr base) {
  if (!base) throw ValidationError("null base field");
  if (base->kind() == FieldKind::RationalFunctions)
    throw UnsupportedError("iterated rational function fields not supported");
  auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  d->kind_ = FieldKind::RationalFunctions;
  d->char_ = base->characteristic();
  d->base_ = std::move(base);
  return d;
}

void FieldDescriptor::finalize_extension() {
  long m = degree_;
  const FieldPtr& base = base_;
  // reduction table: coords of xbar^(m+i), i = 0..m-2
  high_power_coords_.clear();
  Coeffs prev(modulus_.begin(), modulus_.end() - 1);  // x^m = -(low part), modulus monic
  for (auto& c : prev) c = -c;
  high_power_coords_.push_back(prev);
  for (long i = 1; i < m - 1; ++i) {
    // x^(m+i) = x * x^(m+i-1)
    Coeffs shifted(m + 1, FieldElement::zero(base));
    for (long j = 0; j < m; ++j) shifted[j + 1] = prev[j];
    Coeffs next(m, FieldElement::zero(base));
    for (long j = 0; j < m; ++j) next[j] = shifted[j];
    if (!shifted[m].is_zero())
      for (long j = 0; j < m; ++j)
        next[j] = next[j] + shifted[m] * high_power_coords_[0][j];
    high_power_coords_.push_back(next);
    prev = next;
  }
  // sigma images of basis powers
  sigma_basis_images_.clear();
  if (!sigma_image_.empty()) {
    Coeffs gen_img(sigma_image_);
    detail::trim(gen_img);
    Coeffs acc{FieldElement::one(base)};
    for (long j = 0; j < m; ++j) {
      Coeffs padded = acc;
      while (static_cast<long>(padded.size()) < m) padded.push_back(FieldElement::zero(base));
      sigma_basis_images_.push_back(padded);
      if (j + 1 < m) acc = detail::poly_mod(base, detail::poly_mul(base, acc, gen_img), modulus_);
    }
  }
}

FieldPtr FieldDescriptor::cyclic_extension(FieldPtr base, long m, std::vector<FieldElement> modulus,
                                           std::vector<FieldElement> sigma_image) {
  if (!base) throw ValidationError("null base field");
  if (m < 2) throw ValidationError("cyclic extension degree must be >= 2");
  detail::trim(modulus);
  if (detail::deg(modulus) != m || !modulus.back().is_one())
    throw ValidationError("modulus must be monic of the stated degree");
  for (auto& c : modulus)
    if (!c.field()->same_field(*base)) throw ValidationError("modulus coefficient not in base");

  // irreducibility over the base
  if (base->is_finite()) {
    if (!raw_poly_irreducible_finite(base, modulus))
      throw ValidationError("modulus is reducible over the base");
  } else if (base->kind() == FieldKind::Rationals) {
    if (m > 3) throw UnsupportedError("irreducibility over Q supported up to degree 3");
    // degree <= 3: reducible iff there is a rational root; scale to integers
    // and test divisor candidates
    Integer lcm_den = 1;
    for (auto& c : modulus)
      lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c.rat()));
    std::vector<Integer> ic;
    for (auto& c : modulus)
      ic.push_back(boost::multiprecision::numerator(c.rat()) *
                   (lcm_den / boost::multiprecision::denominator(c.rat())));
    Integer a0 = boost::multiprecision::abs(ic[0]);
    Integer an = boost::multiprecision::abs(ic.back());
    if (a0 == 0) throw ValidationError("modulus is reducible over the base");
    auto has_root = [&](const Rational& r) {
      Rational acc = 0;
      for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * r + Rational(*it);
      return acc == 0;
    };
    for (Integer p = 1; p <= a0; ++p) {
      if (a0 % p != 0) continue;
      for (Integer q = 1; q <= an; ++q) {
        if (an % q != 0) continue;
        if (has_root(Rational(p, q)) || has_root(Rational(-p, q)))
          throw ValidationError("modulus is reducible over the base");
      }
    }
  } else if (base->kind() == FieldKind::RationalFunctions) {
    // supported for constant-coefficient moduli: irreducible over F_p(t) iff
    // irreducible over the constants (Gauss)
    FieldPtr constants = base->base();
    Coeffs cmod;
    for (auto& c : modulus) {
      if (detail::deg(c.num()) > 0 || c.den().size() != 1)
        throw UnsupportedError("non-constant modulus over a rational function field");
      cmod.push_back(c.num().empty() ? FieldElement::zero(constants) : c.num()[0]);
    }
    if (!constants->is_finite() || !raw_poly_irreducible_finite(constants, cmod))
      throw ValidationError("modulus is reducible over the base");
  } else {
    throw UnsupportedError("unsupported base field for a cyclic extension");
  }

  detail::trim(sigma_image);
  if (detail::deg(sigma_image) >= m) throw ValidationError("sigma image degree too large");
  for (auto& c : sigma_image)
    if (!c.field()->same_field(*base)) throw ValidationError("sigma coefficient not in base");

  auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
  d->kind_ = FieldKind::CyclicExtension;
  d->char_ = base->characteristic();
  d->degree_ = m;
  d->base_ = base;
  d->modulus_ = std::move(modulus);
  while (static_cast<long>(sigma_image.size()) < m)
    sigma_image.push_back(FieldElement::zero(base));
  d->sigma_image_ = std::move(sigma_image);
  // constant-field extension flag
  if (base->kind() == FieldKind::RationalFunctions) {
    bool all_const = true;
    for (auto& c : d->modulus_)
      if (detail::deg(c.num()) > 0 || c.den().size() != 1) all_const = false;
    for (auto& c : d->sigma_image_)
      if (detail::deg(c.num()) > 0 || c.den().size() != 1) all_const = false;
    d->constant_field_ext_ = all_const;
  }
  d->finalize_extension();
  FieldPtr self = d;

  // sigma must map the generator to a root of the modulus
  FieldElement sg = FieldElement::from_coords(self, d->sigma_image_);
  FieldElement val = FieldElement::zero(self);
  for (auto it = d->modulus_.rbegin(); it != d->modulus_.rend(); ++it)
    val = val * sg + embed(self, *it);
  if (!val.is_zero()) throw ValidationError("sigma image is not a root of the modulus");
  // exact order m
  for (long dd : divisors_sorted(m)) {
    FieldElement gen = FieldElement::generator(self);
    FieldElement img = apply_sigma_pow(gen, dd);
    bool identity = (img == gen);
    if (dd < m && identity) throw ValidationError("sigma has order smaller than the degree");
    if (dd == m && !identity) throw ValidationError("sigma does not have order m");
  }
  return self;
}

FieldPtr FieldDescriptor::finite_extension(FieldPtr base, long m) {
  if (!base || !base->is_finite()) throw ValidationError("finite extension needs a finite base");
  if (m < 2) throw ValidationError("extension degree must be >= 2");
  if (integer_pow(base->cardinality(), m) > kMaxFiniteCardinality)
    throw UnsupportedError("finite field beyond supported size");
  Coeffs modulus = canonical_modulus(base, m);
  Coeffs xbar{FieldElement::zero(base), FieldElement::one(base)};
  Integer q = base->cardinality();
  Coeffs sigma = detail::poly_pow_mod(base, xbar, q, modulus);
  return cyclic_extension(std::move(base), m, std::move(modulus), std::move(sigma));
}

FieldPtr FieldDescriptor::constant_extension(FieldPtr ratfn_base, long m) {
  if (!ratfn_base || ratfn_base->kind() != FieldKind::RationalFunctions ||
      !ratfn_base->base()->is_finite())
    throw ValidationError("constant extension needs a rational function field over a finite field");
  FieldPtr constants = ratfn_base->base();
  Coeffs cmod = canonical_modulus(constants, m);
  Coeffs xbar{FieldElement::zero(constants), FieldElement::one(constants)};
  Coeffs csigma = detail::poly_pow_mod(constants, xbar, constants->cardinality(), cmod);
  Coeffs modulus, sigma;
  for (auto& c : cmod) modulus.push_back(embed(ratfn_base, c));
  for (auto& c : csigma) sigma.push_back(embed(ratfn_base, c));
  return cyclic_extension(std::move(ratfn_base), m, std::move(modulus), std::move(sigma));
}

FieldPtr FieldDescriptor::gaussian_rationals() {
  FieldPtr q = rationals();
  std::vector<FieldElement> modulus{FieldElement::one(q), FieldElement::zero(q),
                                    FieldElement::one(q)};
  std::vector<FieldElement> sigma{FieldElement::zero(q), -FieldElement::one(q)};
  return cyclic_extension(q, 2, std::move(modulus), std::move(sigma));
}

// ===========================================================================
// Galois action, norm, trace
// ===========================================================================

FieldElement apply_sigma(const FieldElement& x) {
  require_valid(x);
  const FieldPtr& f = x.field();
  if (!f->is_extension() || f->sigma_image().empty())
    throw ValidationError("element is not in an extension with a sigma action");
  const auto& images = f->sigma_basis_images();
  FieldElement out = FieldElement::zero(f);
  const auto& c = x.coords();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    std::vector<FieldElement> scaled;
    scaled.reserve(images[j].size());
    for (auto& v : images[j]) scaled.push_back(c[j] * v);
    out = out + FieldElement::from_coords(f, std::move(scaled));
  }
  return out;
}

FieldElement apply_sigma_pow(const FieldElement& x, long i) {
  long m = x.field()->degree();
  i = ((i % m) + m) % m;
  FieldElement out = x;
  for (long k = 0; k < i; ++k) out = apply_sigma(out);
  return out;
}

namespace {

void require_ext_member(const FieldPtr& ext, const FieldElement& x) {
  if (!ext || !ext->is_extension()) throw ValidationError("not an extension field");
  require_valid(x);
  if (!x.field()->same_field(*ext)) throw ValidationError("element not in the stated extension");
}

}  // namespace

FieldElement norm(const FieldPtr& ext, const FieldElement& x) {
  require_ext_member(ext, x);
  FieldElement prod = x;
  FieldElement conj = x;
  for (long i = 1; i < ext->degree(); ++i) {
    conj = apply_sigma(conj);
    prod = prod * conj;
  }
  auto down = try_contract(prod);
  if (!down) throw std::logic_error("norm did not land in the base field");
  return *down;
}

FieldElement trace(const FieldPtr& ext, const FieldElement& x) {
  require_ext_member(ext, x);
  FieldElement sum = x;
  FieldElement conj = x;
  for (long i = 1; i < ext->degree(); ++i) {
    conj = apply_sigma(conj);
    sum = sum + conj;
  }
  auto down = try_contract(sum);
  if (!down) throw std::logic_error("trace did not land in the base field");
  return *down;
}

FieldElement embed(const FieldPtr& into, const FieldElement& x) {
  require_valid(x);
  if (!into) throw ValidationError("null field descriptor");
  if (!into->base() || !x.field()->same_field(*into->base()))
    throw ValidationError("embed: element is not in the base field");
  if (into->is_extension()) {
    std::vector<FieldElement> c{x};
    return FieldElement::from_coords(into, std::move(c));
  }
  if (into->kind() == FieldKind::RationalFunctions) {
    std::vector<FieldElement> num;
    if (!x.is_zero()) num.push_back(x);
    return FieldElement::from_fraction(into, std::move(num), {FieldElement::one(x.field())});
  }
  throw ValidationError("embed: unsupported target field");
}

FieldElement lift_to(const FieldPtr& into, const FieldElement& x) {
  require_valid(x);
  if (x.field()->same_field(*into)) return x;
  if (!into->base()) throw ValidationError("lift_to: element is not below the target field");
  return embed(into, lift_to(into->base(), x));
}

std::optional<FieldElement> try_contract(const FieldElement& x) {
  require_valid(x);
  const FieldPtr& f = x.field();
  if (f->is_extension()) {
    const auto& c = x.coords();
    for (size_t i = 1; i < c.size(); ++i)
      if (!c[i].is_zero()) return std::nullopt;
    return c[0];
  }
  if (f->kind() == FieldKind::RationalFunctions) {
    if (x.den().size() != 1 || x.num().size() > 1) return std::nullopt;
    if (x.num().empty()) return FieldElement::zero(f->base());
    return x.num()[0];
  }
  return std::nullopt;
}

// ===========================================================================
// enumeration and ordering
// ===========================================================================

Integer integer_rep(const FieldElement& x) {
  require_valid(x);
  const FieldPtr& f = x.field();
  switch (f->kind()) {
    case FieldKind::PrimeField:
      return Integer(x.prime_value());
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      Integer q = f->base()->cardinality();
      Integer rep = 0;
      const auto& c = x.coords();
      for (size_t i = c.size(); i-- > 0;) rep = rep * q + integer_rep(c[i]);
      return rep;
    }
    default:
      throw ValidationError("integer representative requires a finite field");
  }
}

FieldElement element_from_rep(const FieldPtr& f, const Integer& rep) {
  switch (f->kind()) {
    case FieldKind::PrimeField:
      return FieldElement::from_prime_value(f, static_cast<long>(rep % f->characteristic()));
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      Integer q = f->base()->cardinality();
      Integer r = rep;
      std::vector<FieldElement> c;
      for (long i = 0; i < f->degree(); ++i) {
        c.push_back(element_from_rep(f->base(), r % q));
        r /= q;
      }
      return FieldElement::from_coords(f, std::move(c));
    }
    default:
      throw ValidationError("element_from_rep requires a finite field");
  }
}

std::vector<FieldElement> enumerate_field(const FieldPtr& f) {
  if (!f->is_finite()) throw ValidationError("cannot enumerate an infinite field");
  Integer card = f->cardinality();
  if (card > FieldDescriptor::kMaxFiniteCardinality)
    throw UnsupportedError("field too large to enumerate");
  std::vector<FieldElement> out;
  long n = static_cast<long>(card);
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(element_from_rep(f, i));
  return out;
}

std::vector<FieldElement> enumerate_units(const FieldPtr& f) {
  std::vector<FieldElement> all = enumerate_field(f);
  all.erase(all.begin());  // rep 0 is zero
  return all;
}

namespace {

std::vector<Rational> rationals_of_height(long h) {
  // ordered by (den, |num|, sign), positives first: 0, 1, -1, 2, -2, 1/2, ...
  std::vector<Rational> out;
  if (h < 1) return out;
  for (long den = 1; den <= h; ++den) {
    for (long mag = 0; mag <= h; ++mag) {
      if (std::max(mag, den) != h) continue;
      if (std::gcd(mag, den) != 1 && !(mag == 0 && den == 1)) continue;
      out.emplace_back(mag, den);
      if (mag != 0) out.emplace_back(-mag, den);
    }
  }
  return out;
}

}  // namespace

std::vector<FieldElement> elements_of_height(const FieldPtr& f, long h) {
  switch (f->kind()) {
    case FieldKind::Rationals: {
      std::vector<FieldElement> out;
      for (auto& q : rationals_of_height(h)) out.push_back(FieldElement::from_rational(f, q));
      return out;
    }
    case FieldKind::CyclicExtension: {
      if (f->is_finite()) throw ValidationError("height enumeration is for infinite fields");
      // coordinate tuples over the base with max height exactly h
      std::vector<FieldElement> pool;
      for (long hh = 1; hh <= h; ++hh)
        for (auto& e : elements_of_height(f->base(), hh)) pool.push_back(e);
      long m = f->degree();
      std::vector<size_t> digits(m, 0);
      std::vector<FieldElement> out;
      while (true) {
        Integer mx = 0;
        std::vector<FieldElement> c;
        c.reserve(m);
        for (long i = 0; i < m; ++i) {
          c.push_back(pool[digits[i]]);
          mx = std::max(mx, pool[digits[i]].height());
        }
        if (mx == h) out.push_back(FieldElement::from_coords(f, std::move(c)));
        long pos = m - 1;
        while (pos >= 0) {
          if (++digits[pos] < pool.size()) break;
          digits[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      return out;
    }
    default:
      throw ValidationError("height enumeration unsupported for this field");
  }
}

long fraction_degree(const FieldElement& x) {
  require_valid(x);
  const FieldPtr& f = x.field();
  if (x.is_zero()) throw ValidationError("degree of zero");
  if (f->kind() == FieldKind::RationalFunctions)
    return detail::deg(x.num()) - detail::deg(x.den());
  if (f->kind() == FieldKind::CyclicExtension &&
      f->base()->kind() == FieldKind::RationalFunctions) {
    // common denominator D, then max numerator degree minus deg D
    const FieldPtr& base = f->base();
    const FieldPtr& cf = base->base();
    Coeffs d{FieldElement::one(cf)};
    for (auto& c : x.coords()) {
      if (c.is_zero()) continue;
      Coeffs g = detail::poly_gcd(cf, d, c.den());
      Coeffs q = detail::poly_divmod(cf, c.den(), g).first;
      d = detail::poly_mul(cf, d, q);
    }
    long best = LONG_MIN;
    for (auto& c : x.coords()) {
      if (c.is_zero()) continue;
      Coeffs q = detail::poly_divmod(cf, d, c.den()).first;
      Coeffs n = detail::poly_mul(cf, c.num(), q);
      best = std::max(best, detail::deg(n));
    }
    return best - detail::deg(d);
  }
  throw ValidationError("degree is defined for rational function values");
}

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng) {
  if (f->is_finite()) {
    Integer card = f->cardinality();
    long n = static_cast<long>(card);
    return element_from_rep(f, Integer(static_cast<long>(rng() % static_cast<unsigned long>(n))));
  }
  switch (f->kind()) {
    case FieldKind::Rationals: {
      long num = static_cast<long>(rng() % 21) - 10;
      long den = static_cast<long>(rng() % 9) + 1;
      return FieldElement::from_rational(f, Rational(num, den));
    }
    case FieldKind::CyclicExtension: {
      std::vector<FieldElement> c;
      for (long i = 0; i < f->degree(); ++i) c.push_back(random_element(f->base(), rng));
      return FieldElement::from_coords(f, std::move(c));
    }
    case FieldKind::RationalFunctions: {
      Coeffs num, den;
      for (int i = 0; i < 3; ++i) num.push_back(random_element(f->base(), rng));
      for (int i = 0; i < 2; ++i) den.push_back(random_element(f->base(), rng));
      den.push_back(FieldElement::one(f->base()));
      return FieldElement::from_fraction(f, std::move(num), std::move(den));
    }
    default:
      throw ValidationError("random element unsupported for this field");
  }
}

FieldElement random_unit(const FieldPtr& f, std::mt19937_64& rng) {
  for (int tries = 0; tries < 256; ++tries) {
    FieldElement x = random_element(f, rng);
    if (!x.is_zero()) return x;
  }
  throw std::logic_error("random_unit: could not draw a nonzero element");
}

// ===========================================================================
// norm membership and Hilbert 90
// ===========================================================================

namespace {

// imaginary quadratic over Q: norm form u^2 - b*uv + c*v^2 positive definite
bool imaginary_quadratic(const FieldPtr& ext) {
  if (ext->degree() != 2) return false;
  if (ext->base()->kind() != FieldKind::Rationals) return false;
  const auto& mod = ext->modulus();
  Rational b = mod[1].rat(), c = mod[0].rat();
  return b * b - 4 * c < 0;
}

std::optional<FieldElement> monomial_norm_witness(const FieldPtr& ext, const FieldElement& a) {
  // a = c * t^d with m | d over a constant-field extension: witness
  // c' * t^(d/m) with norm(c') = c in the constant fields
  const FieldPtr& base = ext->base();
  const FieldPtr& cf = base->base();
  long m = ext->degree();
  const auto& num = a.num();
  const auto& den = a.den();
  if (den.size() != 1) return std::nullopt;
  long d = detail::deg(num);
  for (long i = 0; i < d; ++i)
    if (!num[i].is_zero()) return std::nullopt;
  if (d % m != 0) return std::nullopt;
  FieldElement c = num[d];
  // constants of K form the canonical extension of cf of degree m
  FieldPtr kconst = FieldDescriptor::finite_extension(cf, m);
  for (const FieldElement& u : enumerate_units(kconst)) {
    if (norm(kconst, u) == c) {
      // build c' * t^(d/m) inside ext: coords of u lifted to base(t)
      std::vector<FieldElement> coords;
      Coeffs tpow(d / m + 1, FieldElement::zero(cf));
      tpow[d / m] = FieldElement::one(cf);
      for (auto& uc : u.coords()) {
        Coeffs numv = detail::poly_scale(tpow, uc);
        coords.push_back(FieldElement::from_fraction(base, numv, {FieldElement::one(cf)}));
      }
      return FieldElement::from_coords(ext, std::move(coords));
    }
  }
  return std::nullopt;
}

}  // namespace

NormMembership norm_membership(const FieldPtr& ext, const FieldElement& a, long bound) {
  if (!ext || !ext->is_extension()) throw ValidationError("norm membership needs an extension");
  require_valid(a);
  if (!a.field()->same_field(*ext->base()))
    throw ValidationError("norm membership: element not in the base field");
  if (a.is_zero()) throw ValidationError("norm membership of zero");

  NormMembership r;
  r.bound = bound;
  if (a.is_one()) {
    r.outcome = Outcome::Proved;
    r.witness = FieldElement::one(ext);
    r.certificate = "norm witness";
    return r;
  }

  if (ext->is_finite()) {
    // exhaustive and decisive
    for (const FieldElement& x : enumerate_units(ext)) {
      if (norm(ext, x) == a) {
        r.outcome = Outcome::Proved;
        r.witness = x;
        r.certificate = "norm witness";
        return r;
      }
    }
    r.outcome = Outcome::Refuted;
    r.certificate = "exhaustive enumeration";
    return r;
  }

  if (ext->is_constant_field_extension()) {
    long m = ext->degree();
    long d = fraction_degree(a);
    if (d % m != 0) {
      r.outcome = Outcome::Refuted;
      r.certificate = "degree certificate";
      return r;
    }
    if (auto w = monomial_norm_witness(ext, a)) {
      r.outcome = Outcome::Proved;
      r.witness = *w;
      r.certificate = "norm witness";
      return r;
    }
    // denominator-side monomial: a = c / t^d
    FieldElement ainv = a.inverse();
    if (auto w = monomial_norm_witness(ext, ainv)) {
      r.outcome = Outcome::Proved;
      r.witness = w->inverse();
      r.certificate = "norm witness";
      return r;
    }
    r.outcome = Outcome::Unknown;
    r.certificate = "bounded search exhausted";
    return r;
  }

  if (ext->base()->kind() == FieldKind::Rationals) {
    if (imaginary_quadratic(ext) && a.rat() < 0) {
      r.outcome = Outcome::Refuted;
      r.certificate = "sign certificate";
      return r;
    }
    for (long h = 1; h <= bound; ++h) {
      for (const FieldElement& x : elements_of_height(ext, h)) {
        if (x.is_zero()) continue;
        if (norm(ext, x) == a) {
          r.outcome = Outcome::Proved;
          r.witness = x;
          r.certificate = "norm witness";
          return r;
        }
      }
    }
    r.outcome = Outcome::Unknown;
    r.certificate = "bounded search exhausted";
    return r;
  }

  throw UnsupportedError("norm membership unsupported over this base field");
}

FieldElement hilbert90_witness(const FieldPtr& ext, const FieldElement& lambda) {
  if (!ext || !ext->is_extension()) throw ValidationError("hilbert90 needs an extension");
  require_valid(lambda);
  if (!lambda.field()->same_field(*ext)) throw ValidationError("element not in the extension");
  if (!norm(ext, lambda).is_one()) throw ValidationError("hilbert90 requires norm 1");
  if (lambda.is_one()) return FieldElement::one(ext);
  long m = ext->degree();
  // b_i = prod_{j<i} sigma^j(lambda)
  std::vector<FieldElement> b{FieldElement::one(ext)};
  for (long i = 1; i < m; ++i) b.push_back(b[i - 1] * apply_sigma_pow(lambda, i - 1));
  // resolvent over the power basis
  for (long j = 0; j < m; ++j) {
    FieldElement c = (j == 0) ? FieldElement::one(ext)
                              : FieldElement::generator(ext).pow(j);
    FieldElement fsum = FieldElement::zero(ext);
    for (long i = 0; i < m; ++i) fsum = fsum + b[i] * apply_sigma_pow(c, i);
    if (!fsum.is_zero()) {
      // check the identity lambda = f / sigma(f)
      if (fsum != lambda * apply_sigma(fsum))
        throw std::logic_error("hilbert90 resolvent identity failed");
      return fsum;
    }
  }
  throw std::logic_error("hilbert90: no nonzero resolvent over the spanning set");
}

}  // namespace brauer
