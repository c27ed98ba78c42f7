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

#include "brauer/io.hpp"

#include <algorithm>

#include "brauer/detail/polyops.hpp"

namespace brauer {

namespace {

std::string rational_str(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw ValidationError("rational literal needs a positive denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("malformed rational literal: " + s);
  }
}

Json coeffs_to_json(const std::vector<FieldElement>& c) {
  Json arr = Json::array();
  for (auto& x : c) arr.push_back(element_to_json(x));
  return arr;
}

std::vector<FieldElement> coeffs_from_json(const FieldPtr& base, const Json& j) {
  if (!j.is_array()) throw ValidationError("expected a coefficient array");
  std::vector<FieldElement> out;
  for (auto& e : j) out.push_back(element_from_json(base, e));
  return out;
}

}  // namespace

Json field_to_json(const FieldPtr& f) {
  Json j;
  switch (f->kind()) {
    case FieldKind::Rationals:
      j["kind"] = "rationals";
      break;
    case FieldKind::PrimeField:
      j["kind"] = "prime";
      j["p"] = f->characteristic();
      break;
    case FieldKind::FiniteField:
      j["kind"] = "finite";
      j["p"] = f->characteristic();
      j["k"] = f->degree();
      j["modulus"] = coeffs_to_json(f->modulus());
      break;
    case FieldKind::RationalFunctions:
      j["kind"] = "ratfn";
      j["base"] = field_to_json(f->base());
      break;
    case FieldKind::CyclicExtension:
      j["kind"] = "cyclic";
      j["base"] = field_to_json(f->base());
      j["degree"] = f->degree();
      j["modulus"] = coeffs_to_json(f->modulus());
      j["sigma"] = coeffs_to_json(f->sigma_image());
      break;
  }
  return j;
}

FieldPtr field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind"))
    throw ValidationError("field descriptor must be an object with a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return FieldDescriptor::rationals();
  if (kind == "prime") return FieldDescriptor::prime_field(j.at("p").get<long>());
  if (kind == "finite") {
    long p = j.at("p").get<long>();
    long k = j.at("k").get<long>();
    FieldPtr f = FieldDescriptor::finite_field(p, k);
    if (j.contains("modulus")) {
      // a stated modulus must match the canonical one
      auto given = coeffs_from_json(f->base(), j.at("modulus"));
      if (given != f->modulus())
        throw ValidationError("finite field modulus must be the canonical choice");
    }
    return f;
  }
  if (kind == "ratfn") return FieldDescriptor::rational_functions(field_from_json(j.at("base")));
  if (kind == "cyclic") {
    FieldPtr base = field_from_json(j.at("base"));
    long degree = j.at("degree").get<long>();
    auto modulus = coeffs_from_json(base, j.at("modulus"));
    auto sigma = coeffs_from_json(base, j.at("sigma"));
    return FieldDescriptor::cyclic_extension(base, degree, std::move(modulus), std::move(sigma));
  }
  throw ValidationError("unknown field kind: " + kind);
}

Json element_to_json(const FieldElement& x) {
  const FieldPtr& f = x.field();
  switch (f->kind()) {
    case FieldKind::Rationals:
      return rational_str(x.rat());
    case FieldKind::PrimeField:
      return x.prime_value();
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension:
      return coeffs_to_json(x.coords());
    case FieldKind::RationalFunctions: {
      Json j;
      j["num"] = coeffs_to_json(x.num());
      j["den"] = coeffs_to_json(x.den());
      return j;
    }
  }
  throw ValidationError("bad field kind");
}

FieldElement element_from_json(const FieldPtr& f, const Json& j) {
  switch (f->kind()) {
    case FieldKind::Rationals:
      if (j.is_number_integer()) return FieldElement::from_integer(f, Integer(j.get<long>()));
      if (j.is_string()) return FieldElement::from_rational(f, parse_rational(j.get<std::string>()));
      throw ValidationError("rational literal must be an integer or a num/den string");
    case FieldKind::PrimeField:
      if (!j.is_number_integer()) throw ValidationError("prime field literal must be an integer");
      return FieldElement::from_integer(f, Integer(j.get<long>()));
    case FieldKind::FiniteField:
    case FieldKind::CyclicExtension: {
      if (j.is_number_integer()) return FieldElement::from_integer(f, Integer(j.get<long>()));
      if (j.is_string())
        return embed(f, element_from_json(f->base(), j));  // base literal in a string
      if (!j.is_array()) throw ValidationError("extension literal must be a coefficient array");
      return FieldElement::from_coords(f, coeffs_from_json(f->base(), j));
    }
    case FieldKind::RationalFunctions: {
      if (j.is_number_integer()) return FieldElement::from_integer(f, Integer(j.get<long>()));
      if (j.is_object()) {
        auto num = coeffs_from_json(f->base(), j.at("num"));
        std::vector<FieldElement> den{FieldElement::one(f->base())};
        if (j.contains("den")) den = coeffs_from_json(f->base(), j.at("den"));
        FieldElement out = FieldElement::from_fraction(f, num, den);
        // the stated denominator must already be monic with gcd 1
        if (j.contains("den") && (out.num() != num || out.den() != den))
          throw ValidationError("rational function literal is not in lowest monic terms");
        return out;
      }
      if (j.is_array()) {
        auto num = coeffs_from_json(f->base(), j);
        return FieldElement::from_fraction(f, num, {FieldElement::one(f->base())});
      }
      throw ValidationError("rational function literal must be an object or array");
    }
  }
  throw ValidationError("bad field kind");
}

Json algebra_to_json(const StructureConstantAlgebra& a) {
  Json j;
  j["base"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  // unit as an index when it is a basis vector, else as coordinates
  long unit_index = -1;
  for (long i = 0; i < a.dim(); ++i)
    if (a.unit() == a.basis_element(i)) unit_index = i;
  if (unit_index >= 0)
    j["unit"] = unit_index;
  else
    j["unit"] = coeffs_to_json(a.unit());
  Json table = Json::array();
  for (long i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (long jj = 0; jj < a.dim(); ++jj) {
      Json cell = Json::array();
      for (long k = 0; k < a.dim(); ++k) cell.push_back(element_to_json(a.c(i, jj, k)));
      row.push_back(cell);
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

StructureConstantAlgebra algebra_from_json(const Json& j) {
  FieldPtr base = field_from_json(j.at("base"));
  long dim = j.at("dim").get<long>();
  std::vector<std::string> names;
  if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
  const Json& table = j.at("table");
  if (!table.is_array() || static_cast<long>(table.size()) != dim)
    throw ValidationError("algebra table must be a dim x dim x dim array");
  std::vector<FieldElement> flat;
  flat.reserve(dim * dim * dim);
  for (long i = 0; i < dim; ++i) {
    if (static_cast<long>(table[i].size()) != dim)
      throw ValidationError("algebra table must be a dim x dim x dim array");
    for (long jj = 0; jj < dim; ++jj) {
      if (static_cast<long>(table[i][jj].size()) != dim)
        throw ValidationError("algebra table must be a dim x dim x dim array");
      for (long k = 0; k < dim; ++k) flat.push_back(element_from_json(base, table[i][jj][k]));
    }
  }
  std::vector<FieldElement> unit;
  if (j.at("unit").is_number_integer()) {
    long idx = j.at("unit").get<long>();
    if (idx < 0 || idx >= dim) throw ValidationError("unit index out of range");
    unit.assign(dim, FieldElement::zero(base));
    unit[idx] = FieldElement::one(base);
  } else {
    unit = coeffs_from_json(base, j.at("unit"));
  }
  return StructureConstantAlgebra(base, dim, std::move(flat), std::move(unit), std::move(names));
}

Json class_to_json(const CyclicBrauerClass& c) {
  Json j;
  j["ext"] = field_to_json(c.ext);
  j["a"] = element_to_json(c.a);
  return j;
}

CyclicBrauerClass class_from_json(const Json& j) {
  FieldPtr ext = field_from_json(j.at("ext"));
  if (ext->kind() == FieldKind::FiniteField)
    throw ValidationError("class extension must carry an explicit sigma (use kind cyclic)");
  FieldElement a = element_from_json(ext->base(), j.at("a"));
  return make_class(std::move(ext), std::move(a));
}

Json split_bundle_to_json(const SplitLineBundle& l) {
  Json j;
  j["circle"] = {{"kind", "split"},
                 {"length", l.circle.length},
                 {"field", field_to_json(l.circle.field)}};
  Json lam = Json::array();
  for (auto& x : l.lambda) lam.push_back(element_to_json(x));
  j["lambda"] = lam;
  return j;
}

Json galois_bundle_to_json(const GaloisLineBundle& l) {
  Json j;
  j["circle"] = {{"kind", "galois"}, {"ext", field_to_json(l.circle.ext)}};
  j["lambda1"] = element_to_json(l.lambda1);
  return j;
}

SplitLineBundle split_bundle_from_json(const Json& j) {
  const Json& cj = j.at("circle");
  if (cj.value("kind", "split") != "split")
    throw ValidationError("expected a split circle literal");
  FieldPtr field = field_from_json(cj.at("field"));
  long length = cj.at("length").get<long>();
  std::vector<FieldElement> lambda;
  for (auto& e : j.at("lambda")) lambda.push_back(element_from_json(field, e));
  return make_split_line_bundle(make_split_circle(std::move(field), length),
                                std::move(lambda));
}

GaloisLineBundle galois_bundle_from_json(const Json& j) {
  const Json& cj = j.at("circle");
  if (cj.value("kind", "galois") != "galois")
    throw ValidationError("expected a Galois circle literal");
  FieldPtr ext = field_from_json(cj.at("ext"));
  FieldElement lambda1 = element_from_json(ext, j.at("lambda1"));
  return make_galois_line_bundle(make_galois_circle(std::move(ext)), std::move(lambda1));
}

Json curve_graph_to_json(const CurveGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["components"] = g.edge_count();
  j["orbits"] = g.orbit_count();
  j["connected"] = g.connected;
  Json edges = Json::array();
  for (auto& e : g.edges)
    edges.push_back({{"zero_at", e.src},
                     {"infinity_at", e.dst},
                     {"generator", e.generator},
                     {"orbit", e.orbit}});
  j["adjacency"] = edges;
  return j;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

FieldPtr parse_plain_field(const std::string& name) {
  if (name == "Q") return FieldDescriptor::rationals();
  if (name == "Qi") return FieldDescriptor::gaussian_rationals();
  if (name.size() >= 2 && name.front() == 'F') {
    std::string rest = name.substr(1);
    bool with_t = false;
    if (!rest.empty() && rest.back() == 't') {
      with_t = true;
      rest.pop_back();
    }
    if (!all_digits(rest)) throw ValidationError("malformed field name: " + name);
    long q = std::stol(rest);
    // factor q as p^k
    for (long p = 2; p <= q; ++p) {
      if (!is_prime(p)) continue;
      long k = 0, t = q;
      while (t % p == 0) {
        t /= p;
        ++k;
      }
      if (t == 1 && k >= 1) {
        FieldPtr f = FieldDescriptor::finite_field(p, k);
        if (with_t) return FieldDescriptor::rational_functions(f);
        return f;
      }
      if (q % p == 0) break;
    }
    throw ValidationError("field size is not a prime power: " + name);
  }
  throw ValidationError("unknown field name: " + name);
}

}  // namespace

FieldPtr parse_field_name(const std::string& name) {
  auto slash = name.find('/');
  if (slash == std::string::npos) return parse_plain_field(name);
  return parse_extension_name(name);
}

FieldPtr parse_extension_name(const std::string& name) {
  auto slash = name.find('/');
  if (slash == std::string::npos)
    throw ValidationError("an extension is written K/k, e.g. F9/F3: " + name);
  std::string big = name.substr(0, slash);
  std::string small = name.substr(slash + 1);
  if (big == "Qi" && small == "Q") return FieldDescriptor::gaussian_rationals();
  FieldPtr base = parse_plain_field(small);
  if (base->kind() == FieldKind::RationalFunctions) {
    // constant-field extension F{q^m}t/Fqt
    FieldPtr ktop = parse_plain_field(big);
    if (ktop->kind() != FieldKind::RationalFunctions)
      throw ValidationError("mismatched extension shorthand: " + name);
    Integer qbig = ktop->base()->cardinality();
    Integer qsmall = base->base()->cardinality();
    long m = 0;
    Integer acc = 1;
    while (acc < qbig) {
      acc *= qsmall;
      ++m;
    }
    if (acc != qbig || m < 2)
      throw ValidationError("constant extension degree is not integral: " + name);
    return FieldDescriptor::constant_extension(base, m);
  }
  if (base->is_finite()) {
    FieldPtr ktop = parse_plain_field(big);
    Integer qbig = ktop->cardinality();
    Integer qsmall = base->cardinality();
    long m = 0;
    Integer acc = 1;
    while (acc < qbig) {
      acc *= qsmall;
      ++m;
    }
    if (acc != qbig || m < 2) throw ValidationError("extension degree is not integral: " + name);
    return FieldDescriptor::finite_extension(base, m);
  }
  throw ValidationError("unsupported extension shorthand: " + name);
}

FieldElement parse_element(const FieldPtr& f, const std::string& text) {
  std::string s = text;
  // JSON forms pass straight through
  if (!s.empty() && (s.front() == '[' || s.front() == '{')) {
    Json j = Json::parse(s, nullptr, true);
    return element_from_json(f, j);
  }
  // polynomial in t over a rational function field: terms split on '+'
  if (f->kind() == FieldKind::RationalFunctions) {
    std::vector<FieldElement> coeffs;
    const FieldPtr& base = f->base();
    auto set_coeff = [&](long deg, const FieldElement& c) {
      if (static_cast<long>(coeffs.size()) <= deg)
        coeffs.resize(deg + 1, FieldElement::zero(base));
      coeffs[deg] = coeffs[deg] + c;
    };
    size_t pos = 0;
    bool ok = true;
    while (pos < s.size() && ok) {
      size_t next = s.find('+', pos);
      std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
      pos = next == std::string::npos ? s.size() : next + 1;
      auto tpos = term.find('t');
      if (tpos == std::string::npos) {
        try {
          set_coeff(0, FieldElement::from_integer(base, Integer(term)));
        } catch (...) {
          ok = false;
        }
        continue;
      }
      std::string cpart = term.substr(0, tpos);
      if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
      std::string epart = term.substr(tpos + 1);
      long deg = 1;
      if (!epart.empty()) {
        if (epart[0] != '^' || !all_digits(epart.substr(1))) {
          ok = false;
          continue;
        }
        deg = std::stol(epart.substr(1));
      }
      FieldElement c = FieldElement::one(base);
      if (!cpart.empty()) {
        try {
          c = FieldElement::from_integer(base, Integer(cpart));
        } catch (...) {
          ok = false;
          continue;
        }
      }
      set_coeff(deg, c);
    }
    if (ok && !coeffs.empty())
      return FieldElement::from_fraction(f, coeffs, {FieldElement::one(f->base())});
    throw ValidationError("malformed rational function literal: " + text);
  }
  // plain integer or num/den string
  if (f->kind() == FieldKind::Rationals)
    return FieldElement::from_rational(f, parse_rational(s));
  if (s.find('/') != std::string::npos)
    throw ValidationError("fraction literal outside the rational field: " + text);
  try {
    return FieldElement::from_integer(f, Integer(s));
  } catch (const std::runtime_error&) {
    throw ValidationError("malformed element literal: " + text);
  }
}

}  // namespace brauer
