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

#include "brauer/polynomial.hpp"

#include <sstream>

#include "brauer/detail/polyops.hpp"

namespace brauer {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_)
    if (!c.valid() || !c.field()->same_field(*field_))
      throw ValidationError("polynomial coefficient not in the stated field");
  detail::trim(c_);
}

Polynomial Polynomial::x(const FieldPtr& field) {
  return Polynomial(field, {FieldElement::zero(field), FieldElement::one(field)});
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), {c});
}

long Polynomial::degree() const { return detail::deg(c_); }

bool Polynomial::is_monic() const { return !c_.empty() && c_.back().is_one(); }

FieldElement Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return FieldElement::zero(field_);
  return c_[i];
}

const FieldElement& Polynomial::leading() const {
  if (c_.empty()) throw ValidationError("leading coefficient of zero polynomial");
  return c_.back();
}

FieldElement Polynomial::operator()(const FieldElement& at) const {
  return detail::poly_eval(field_, c_, at);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return Polynomial(field_, detail::poly_add(field_, c_, o.c_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return Polynomial(field_, detail::poly_sub(field_, c_, o.c_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  return Polynomial(field_, detail::poly_mul(field_, c_, o.c_));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& o) const {
  auto [q, r] = detail::poly_divmod(field_, c_, o.c_);
  return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

Polynomial Polynomial::operator%(const Polynomial& o) const { return divmod(o).second; }

bool Polynomial::operator==(const Polynomial& o) const { return c_ == o.c_; }

Polynomial Polynomial::make_monic() const {
  return Polynomial(field_, detail::poly_make_monic(c_));
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> out;
  for (size_t i = 1; i < c_.size(); ++i)
    out.push_back(FieldElement::from_integer(field_, static_cast<long>(i)) * c_[i]);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  return Polynomial(a.field_, detail::poly_gcd(a.field_, a.c_, b.c_));
}

std::string Polynomial::str(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) os << c_[i].str();
    if (i > 0) {
      if (!c_[i].is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<Polynomial> enumerate_monic(const FieldPtr& field, long degree) {
  if (!field->is_finite()) throw ValidationError("enumerate_monic needs a finite field");
  if (degree < 0) throw ValidationError("enumerate_monic: negative degree");
  Integer count = integer_pow(field->cardinality(), degree);
  if (count > FieldDescriptor::kMaxFiniteCardinality)
    throw UnsupportedError("too many polynomials to enumerate");
  std::vector<FieldElement> elems = enumerate_field(field);
  std::vector<Polynomial> out;
  std::vector<size_t> digits(degree, 0);
  while (true) {
    std::vector<FieldElement> c;
    c.reserve(degree + 1);
    for (long i = 0; i < degree; ++i) c.push_back(elems[digits[i]]);
    c.push_back(FieldElement::one(field));
    out.emplace_back(field, std::move(c));
    long pos = degree - 1;
    while (pos >= 0) {
      if (++digits[pos] < elems.size()) break;
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

bool is_irreducible(const Polynomial& f) {
  const FieldPtr& k = f.field();
  long d = f.degree();
  if (!f.is_monic()) throw ValidationError("irreducibility test requires a monic polynomial");
  if (d == 0) return false;
  if (d == 1) return true;

  if (k->is_finite()) {
    for (const FieldElement& x : enumerate_field(k))
      if (f(x).is_zero()) return false;
    if (d <= 3) return true;
    for (long e = 2; 2 * e <= d; ++e)
      for (const Polynomial& g : enumerate_monic(k, e))
        if ((f % g).is_zero()) return false;
    return true;
  }

  if (k->kind() == FieldKind::Rationals) {
    if (d > 3) throw UnsupportedError("irreducibility over Q supported up to degree 3");
    return poly_roots(f).empty();
  }

  throw UnsupportedError("irreducibility test unsupported over this field");
}

std::vector<FieldElement> poly_roots(const Polynomial& f) {
  const FieldPtr& k = f.field();
  std::vector<FieldElement> roots;
  if (f.is_zero()) throw ValidationError("roots of the zero polynomial");
  if (k->is_finite()) {
    for (const FieldElement& x : enumerate_field(k))
      if (f(x).is_zero()) roots.push_back(x);
    return roots;
  }
  if (k->kind() == FieldKind::Rationals) {
    // rational root test after clearing denominators
    Integer lcm_den = 1;
    for (auto& c : f.coeffs())
      lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c.rat()));
    std::vector<Integer> ic;
    for (auto& c : f.coeffs())
      ic.push_back(boost::multiprecision::numerator(c.rat()) *
                   (lcm_den / boost::multiprecision::denominator(c.rat())));
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(FieldElement::zero(k));
    Integer a0 = boost::multiprecision::abs(ic[low]);
    Integer an = boost::multiprecision::abs(ic.back());
    for (Integer p = 1; p <= a0; ++p) {
      if (a0 % p != 0) continue;
      for (Integer q = 1; q <= an; ++q) {
        if (an % q != 0) continue;
        if (boost::multiprecision::gcd(p, q) != 1) continue;
        for (int sign : {1, -1}) {
          FieldElement cand = FieldElement::from_rational(k, Rational(sign * p, q));
          if (f(cand).is_zero()) roots.push_back(cand);
        }
      }
    }
    return roots;
  }
  throw UnsupportedError("root finding unsupported over this field");
}

std::vector<std::pair<Polynomial, long>> factor_into_irreducibles(const Polynomial& f) {
  const FieldPtr& k = f.field();
  if (!k->is_finite()) throw UnsupportedError("factorization supported over finite fields");
  if (f.is_zero()) throw ValidationError("factorization of zero");
  std::vector<std::pair<Polynomial, long>> out;
  Polynomial rest = f.make_monic();
  for (long d = 1; rest.degree() > 0; ++d) {
    if (2 * d > rest.degree()) {
      out.emplace_back(rest, 1);  // what remains is irreducible
      break;
    }
    for (const Polynomial& g : enumerate_monic(k, d)) {
      if (rest.degree() < d) break;
      if (!is_irreducible(g)) continue;
      long e = 0;
      while (rest.degree() >= d && (rest % g).is_zero()) {
        rest = rest.divmod(g).first;
        ++e;
      }
      if (e > 0) out.emplace_back(g, e);
    }
  }
  return out;
}

}  // namespace brauer
