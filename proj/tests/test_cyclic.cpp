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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/cyclic.hpp"

using namespace brauer;

namespace {

FieldPtr F(long p) { return FieldDescriptor::prime_field(p); }
FieldElement fe(const FieldPtr& f, long v) { return FieldElement::from_integer(f, v); }

FieldPtr Qi() { return FieldDescriptor::gaussian_rationals(); }
FieldPtr Q() { return FieldDescriptor::rationals(); }

}  // namespace

TEST_CASE("cyclic algebra construction") {
  // split case a = 1 over Q(i)/Q: u-1 and u+1 multiply to u^2 - 1 = 0
  auto alg1 = build_cyclic_algebra(Qi(), fe(Q(), 1));
  std::vector<FieldElement> um1 = alg1.zero_element(), up1 = alg1.zero_element();
  um1[2] = fe(Q(), 1);   // u
  um1[0] = fe(Q(), -1);  // -1
  up1[2] = fe(Q(), 1);
  up1[0] = fe(Q(), 1);
  CHECK(alg1.is_zero_vec(alg1.multiply(um1, up1)));

  // Hamilton quaternions: (Q(i)/Q, conj, -1) is central simple of dim 4
  auto ham = build_cyclic_algebra(Qi(), fe(Q(), -1));
  CHECK(ham.dim() == 4);
  CHECK(is_central_simple(ham));

  // (F9/F3, Frob, -1): central simple dim 4 with zero divisors
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  auto quat3 = build_cyclic_algebra(f9, fe(F(3), 2));
  CHECK(quat3.dim() == 4);
  CHECK(is_central_simple(quat3));
  CHECK(find_zero_divisor(quat3, 0).outcome == Outcome::Proved);

  CHECK_THROWS_AS(build_cyclic_algebra(f9, fe(F(3), 0)), ValidationError);
}

TEST_CASE("splitting representation") {
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  SplittingRep rep = splitting_representation(f9, fe(F(3), 2));
  // scalars map to scalar matrices
  std::vector<FieldElement> two(4, fe(F(3), 0));
  two[0] = fe(F(3), 2);
  Matrix m2 = rep.represent(two);
  CHECK(m2.is_scalar());
  // u^m = a * identity: image of u squares to 2 * I
  std::vector<FieldElement> u(4, fe(F(3), 0));
  u[2] = fe(F(3), 1);
  Matrix mu = rep.represent(u);
  Matrix musq = mu * mu;
  CHECK(musq.is_scalar());
  CHECK(musq.at(0, 0) == FieldElement::from_integer(f9, 2));
}

TEST_CASE("reduced norm form") {
  // Hamilton over Q: Nrd = x0^2 + x1^2 + x2^2 + x3^2 in the {1, x, u, xu}
  // basis (determinant expansion oracle frozen by hand)
  ReducedNormForm nrd = reduced_norm_form(Qi(), fe(Q(), -1));
  REQUIRE(nrd.degree() == 2);
  REQUIRE(nrd.variables() == 4);
  const auto& coeffs = nrd.coefficients();
  CHECK(coeffs.size() == 4);
  for (auto& [e, c] : coeffs) {
    int total = 0, maxe = 0;
    for (auto v : e) {
      total += v;
      maxe = std::max<int>(maxe, v);
    }
    CHECK(total == 2);
    CHECK(maxe == 2);  // pure squares only
    CHECK(c == fe(Q(), 1));
  }

  // degree-2 split case: Nrd(u - 1) = 0
  ReducedNormForm split = reduced_norm_form(Qi(), fe(Q(), 1));
  std::vector<FieldElement> um1{fe(Q(), -1), fe(Q(), 0), fe(Q(), 1), fe(Q(), 0)};
  CHECK(split.evaluate(um1).is_zero());

  // Nrd(unit) = 1
  std::vector<FieldElement> unit{fe(Q(), 1), fe(Q(), 0), fe(Q(), 0), fe(Q(), 0)};
  CHECK(nrd.evaluate(unit).is_one());

  // Nrd restricted to K equals the field norm, exhaustively for |K| <= 81
  for (auto [p, k, m] : std::vector<std::array<long, 3>>{
           {3, 1, 2}, {5, 1, 2}, {2, 1, 3}, {3, 1, 3}, {3, 2, 2}, {2, 2, 2}}) {
    FieldPtr base = k == 1 ? F(p) : FieldDescriptor::finite_field(p, k);
    FieldPtr ext = FieldDescriptor::finite_extension(base, m);
    SplittingRep rep = splitting_representation(ext, FieldElement::one(base));
    for (auto& x : enumerate_field(ext)) {
      std::vector<FieldElement> coords(m * m, FieldElement::zero(base));
      for (long j = 0; j < m; ++j) coords[j] = x.coords()[j];
      if (x.is_zero()) {
        CHECK(reduced_norm_value(rep, coords).is_zero());
      } else {
        CHECK(reduced_norm_value(rep, coords) == norm(ext, x));
      }
    }
  }

  // multiplicativity on 100 random pairs (form evaluation against the
  // algebra product)
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  auto alg = build_cyclic_algebra(f9, fe(F(3), 2));
  ReducedNormForm form9 = reduced_norm_form(f9, fe(F(3), 2));
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    std::vector<FieldElement> x, y;
    for (int i = 0; i < 4; ++i) x.push_back(random_element(F(3), rng));
    for (int i = 0; i < 4; ++i) y.push_back(random_element(F(3), rng));
    CHECK(form9.evaluate(alg.multiply(x, y)) == form9.evaluate(x) * form9.evaluate(y));
  }
}

TEST_CASE("split verdicts") {
  // finite fields: every class splits (norm surjectivity)
  for (long p : {2L, 3L, 5L}) {
    FieldPtr ext = FieldDescriptor::finite_extension(F(p), 2);
    for (long a = 1; a < p; ++a) {
      SplitVerdict v = is_split(make_class(ext, fe(F(p), a)), 5);
      CHECK(v.outcome == Outcome::Proved);
      CHECK(v.cross_checked);
    }
  }
  // (Q(i)/Q, -1): refuted by the sign certificate
  SplitVerdict neg = is_split(make_class(Qi(), fe(Q(), -1)), 10);
  CHECK(neg.outcome == Outcome::Refuted);
  CHECK(neg.membership.certificate == "sign certificate");
  // (Q(i)/Q, 2): proved with witness 1+i and a verified zero divisor
  SplitVerdict two = is_split(make_class(Qi(), fe(Q(), 2)), 10);
  REQUIRE(two.outcome == Outcome::Proved);
  CHECK(norm(Qi(), *two.membership.witness) == fe(Q(), 2));
  CHECK(two.cross_checked);
}

TEST_CASE("periods") {
  // function-field classes: period((F_{p^m}(t)/F_p(t), t)) = m, decisively,
  // via the degree-argument oracle (t^d is a norm iff m | d)
  for (long p : {2L, 3L, 5L}) {
    for (long m : {2L, 3L, 4L, 6L}) {
      FieldPtr rat = FieldDescriptor::rational_functions(F(p));
      FieldPtr ext = FieldDescriptor::constant_extension(rat, m);
      FieldElement t = FieldElement::generator(rat);
      PeriodResult pr = period(make_class(ext, t), 5);
      REQUIRE(pr.decided);
      CHECK(pr.value == m);
      CHECK(norm(ext, *pr.witness) == t.pow(m));
    }
  }
  // a = 1 has period 1
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  PeriodResult one = period(make_class(f9, fe(F(3), 1)), 5);
  CHECK(one.decided);
  CHECK(one.value == 1);
  // (Q(i)/Q, -1) has period 2: -1 is not a norm, (-1)^2 = 1 is
  PeriodResult h = period(make_class(Qi(), fe(Q(), -1)), 10);
  REQUIRE(h.decided);
  CHECK(h.value == 2);
}

TEST_CASE("period laws under the group operations") {
  FieldPtr rat = FieldDescriptor::rational_functions(F(3));
  FieldPtr ext = FieldDescriptor::constant_extension(rat, 2);
  FieldElement t = FieldElement::generator(rat);
  CyclicBrauerClass ct = make_class(ext, t);
  // [t]*[t] = [t^2] has period 1 (t^2 = norm(t))
  CyclicBrauerClass sq = multiply_classes(ct, ct);
  PeriodResult psq = period(sq, 5);
  REQUIRE(psq.decided);
  CHECK(psq.value == 1);
  PeriodResult pt = period(ct, 5);
  REQUIRE(pt.decided);
  CHECK(psq.value % 1 == 0);
  CHECK(pt.value % psq.value == 0);  // period of the square divides the period
  // inversion preserves the period and is an involution
  CyclicBrauerClass inv = invert_class(ct);
  PeriodResult pinv = period(inv, 5);
  REQUIRE(pinv.decided);
  CHECK(pinv.value == pt.value);
  CHECK(invert_class(inv).a == ct.a);
  // c * c^{-1} is the trivial class
  PeriodResult punit = period(multiply_classes(ct, inv), 5);
  CHECK(punit.decided);
  CHECK(punit.value == 1);
}

TEST_CASE("index bounds") {
  // split class: (1, 1)
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  IndexBounds split = index_bounds(make_class(f9, fe(F(3), 2)), 5);
  CHECK(split.lower == 1);
  CHECK(split.upper == 1);
  CHECK(split.exact);
  // Hamilton: (2, 2)
  IndexBounds ham = index_bounds(make_class(Qi(), fe(Q(), -1)), 10);
  CHECK(ham.lower == 2);
  CHECK(ham.upper == 2);
  // function field, m = 6, a = t: period 6 forces (6, 6)
  FieldPtr rat = FieldDescriptor::rational_functions(F(2));
  FieldPtr ext6 = FieldDescriptor::constant_extension(rat, 6);
  FieldElement t = FieldElement::generator(rat);
  IndexBounds ff = index_bounds(make_class(ext6, t), 5);
  CHECK(ff.lower == 6);
  CHECK(ff.upper == 6);
  // lower | upper, both divide m, same prime factors when decided
  for (auto& ib : {split, ham, ff}) {
    CHECK(ib.upper % ib.lower == 0);
    if (ib.lower_decided) CHECK(radical_of(ib.upper) == radical_of(ib.lower));
  }
}

TEST_CASE("primary decomposition") {
  // period-6 class [t] over F2(t), K = F64(t): parts [t^3] (period 2) and
  // [t^-2] (period 3), product = [t]
  FieldPtr rat = FieldDescriptor::rational_functions(F(2));
  FieldPtr ext = FieldDescriptor::constant_extension(rat, 6);
  FieldElement t = FieldElement::generator(rat);
  CyclicBrauerClass c = make_class(ext, t);
  auto parts = primary_decomposition(c, 5);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].prime == 2);
  CHECK(parts[0].prime_power == 2);
  CHECK(parts[0].cls.a == t.pow(3));
  CHECK(parts[1].prime == 3);
  CHECK(parts[1].prime_power == 3);
  CHECK(parts[1].cls.a == t.pow(-2));
  // degree-argument oracle for the part periods
  PeriodResult p0 = period(parts[0].cls, 5);
  REQUIRE(p0.decided);
  CHECK(p0.value == 2);
  PeriodResult p1 = period(parts[1].cls, 5);
  REQUIRE(p1.decided);
  CHECK(p1.value == 3);
  // product of the parts is norm-equivalent to the original class
  CyclicBrauerClass prod = multiply_classes(parts[0].cls, parts[1].cls);
  NormMembership eq = classes_equal(prod, c, 5);
  CHECK(eq.outcome == Outcome::Proved);

  // period 1: empty decomposition
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  CHECK(primary_decomposition(make_class(f9, fe(F(3), 2)), 5).empty());

  // prime period: a single part equal to the class
  CyclicBrauerClass ham = make_class(Qi(), fe(Q(), -1));
  auto hp = primary_decomposition(ham, 10);
  REQUIRE(hp.size() == 1);
  CHECK(hp[0].cls.a == ham.a);
  CHECK(hp[0].prime_power == 2);
}

TEST_CASE("curve constraints") {
  CHECK(curve_constraints(3, 6, 3));
  CHECK(!curve_constraints(3, 4, 3));
  CHECK(curve_constraints(2, 1, 1));  // 2 | 1+1 and 1 | 1
  CHECK(!curve_constraints(4, 3, 1));  // 4 | 4 but 2 does not divide 1
  CHECK_THROWS_AS(curve_constraints(0, 1, 1), ValidationError);
  // direct restatement oracle on random triples
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    long ind = 1 + static_cast<long>(rng() % 12);
    long degc = static_cast<long>(rng() % 41) - 20;
    long chi = static_cast<long>(rng() % 41) - 20;
    bool expect;
    if (ind % 2 == 1)
      expect = (degc % ind == 0) && (chi % ind == 0);
    else
      expect = ((degc + chi) % ind == 0) && (chi % (ind / 2) == 0);
    CHECK(curve_constraints(ind, degc, chi) == expect);
  }
}

TEST_CASE("inverse class is the opposite algebra up to splitting") {
  // build(a) (x) build(a^-1) is split: a zero divisor exists and the
  // sandwich-style full tensor with the opposite is the matrix algebra
  FieldPtr f25 = FieldDescriptor::finite_extension(F(5), 2);
  FieldElement a = fe(F(5), 2);
  auto alg = build_cyclic_algebra(f25, a);
  auto alg_inv = build_cyclic_algebra(f25, a.inverse());
  auto both = tensor_product(alg, alg_inv);
  CHECK(both.dim() == 16);
  ZeroDivisorResult zd = find_zero_divisor(both, 0);
  REQUIRE(zd.outcome == Outcome::Proved);
  CHECK(both.is_zero_vec(both.multiply(zd.x, zd.y)));
  // and the opposite algebra realizes the inverse class: its tensor with
  // the original splits as well
  auto with_opp = tensor_product(alg, opposite(alg));
  CHECK(find_zero_divisor(with_opp, 0).outcome == Outcome::Proved);
}

TEST_CASE("class equality is verdict-valued") {
  CyclicBrauerClass c2 = make_class(Qi(), fe(Q(), 2));
  CyclicBrauerClass c8 = make_class(Qi(), fe(Q(), 8));
  // 8/2 = 4 = norm(2): equal classes, proved
  NormMembership eq = classes_equal(c8, c2, 10);
  CHECK(eq.outcome == Outcome::Proved);
  // -1 vs 1: refuted by the sign certificate
  NormMembership neq =
      classes_equal(make_class(Qi(), fe(Q(), -1)), make_class(Qi(), fe(Q(), 1)), 10);
  CHECK(neq.outcome == Outcome::Refuted);
  // mismatched extensions are not comparable
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  CHECK_THROWS_AS(classes_equal(c2, make_class(f9, fe(F(3), 2)), 5), ValidationError);
}
