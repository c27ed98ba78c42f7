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

#include <algorithm>

#include "brauer/circles.hpp"
#include "brauer/polynomial.hpp"

using namespace brauer;

namespace {

FieldPtr F(long p) { return FieldDescriptor::prime_field(p); }
FieldElement fe(const FieldPtr& f, long v) { return FieldElement::from_integer(f, v); }

// brute-force section search for a split-circle line bundle: does some
// alpha in (k*)^m satisfy alpha_{i+1} = lambda_i alpha_i cyclically?
bool brute_force_trivial(const SplitLineBundle& l) {
  const FieldPtr& k = l.circle.field;
  for (const FieldElement& a0 : enumerate_units(k)) {
    FieldElement a = a0;
    bool ok = true;
    for (long i = 0; i < l.circle.length; ++i) {
      FieldElement next = l.lambda[i] * a;
      if (i + 1 == l.circle.length) {
        if (next != a0) ok = false;
      } else {
        a = next;
      }
    }
    if (ok) return true;
  }
  return false;
}

// brute-force triviality for a Galois line bundle: some f in K* with
// f = lambda1 * sigma(f)
bool brute_force_galois_trivial(const GaloisLineBundle& l) {
  for (const FieldElement& f : enumerate_units(l.circle.ext))
    if (f == l.lambda1 * apply_sigma(f)) return true;
  return false;
}

}  // namespace

TEST_CASE("split circle c1 and triviality") {
  auto f5 = F(5);
  SplitCircle c3 = make_split_circle(f5, 3);
  // lambda = (2,3,1): product 6 = 1, trivial with witness alpha = (1,2,1)
  SplitLineBundle l = make_split_line_bundle(c3, {fe(f5, 2), fe(f5, 3), fe(f5, 1)});
  SplitClassResult r = c1_split(l);
  CHECK(r.c1.is_one());
  REQUIRE(r.trivial);
  REQUIRE(r.section.size() == 3);
  CHECK(r.section[0] == fe(f5, 1));
  CHECK(r.section[1] == fe(f5, 2));
  CHECK(r.section[2] == fe(f5, 1));

  SplitLineBundle ones = make_split_line_bundle(c3, {fe(f5, 1), fe(f5, 1), fe(f5, 1)});
  CHECK(c1_split(ones).c1.is_one());

  SplitLineBundle nt = make_split_line_bundle(c3, {fe(f5, 2), fe(f5, 1), fe(f5, 1)});
  SplitClassResult rnt = c1_split(nt);
  CHECK(rnt.c1 == fe(f5, 2));
  CHECK(!rnt.trivial);

  CHECK_THROWS_AS(make_split_line_bundle(c3, {fe(f5, 0), fe(f5, 1), fe(f5, 1)}),
                  ValidationError);
}

TEST_CASE("triviality laws against brute-force section search") {
  // split circles: trivial iff prod lambda = 1, for |k| <= 5 and m <= 3
  for (long p : {2L, 3L, 5L}) {
    FieldPtr k = F(p);
    for (long m : {1L, 2L, 3L}) {
      SplitCircle circle = make_split_circle(k, m);
      std::vector<FieldElement> units = enumerate_units(k);
      std::vector<size_t> digits(m, 0);
      while (true) {
        std::vector<FieldElement> lambda;
        for (long i = 0; i < m; ++i) lambda.push_back(units[digits[i]]);
        SplitLineBundle l = make_split_line_bundle(circle, lambda);
        SplitClassResult r = c1_split(l);
        CHECK(r.trivial == brute_force_trivial(l));
        CHECK(r.trivial == r.c1.is_one());
        long pos = m - 1;
        while (pos >= 0) {
          if (++digits[pos] < units.size()) break;
          digits[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
  // Galois circles: trivial iff norm(lambda1) = 1, brute-forced over K*
  std::vector<std::pair<long, long>> cases{{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}};
  for (auto [p, m] : cases) {
    FieldPtr ext = FieldDescriptor::finite_extension(F(p), m);
    GaloisCircle circle = make_galois_circle(ext);
    for (const FieldElement& lam : enumerate_units(ext)) {
      GaloisLineBundle l = make_galois_line_bundle(circle, lam);
      GaloisClassResult r = galois_class(l);
      CHECK(r.trivial == brute_force_galois_trivial(l));
      CHECK(r.trivial == norm(ext, lam).is_one());
      if (r.trivial) {
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == lam * apply_sigma(*r.witness));
      }
    }
  }
}

TEST_CASE("galois class examples") {
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  GaloisCircle circle = make_galois_circle(f9);
  FieldElement i = FieldElement::generator(f9);

  GaloisClassResult one = galois_class(make_galois_line_bundle(circle, FieldElement::one(f9)));
  CHECK(one.cls.is_one());
  CHECK(one.trivial);

  GaloisClassResult gi = galois_class(make_galois_line_bundle(circle, i));
  CHECK(gi.cls.is_one());  // norm(i) = i * i^3 = 1
  CHECK(gi.trivial);
  CHECK(gi.witness.has_value());

  GaloisClassResult g1i =
      galois_class(make_galois_line_bundle(circle, FieldElement::one(f9) + i));
  CHECK(g1i.cls == fe(F(3), 2));
  CHECK(!g1i.trivial);
}

TEST_CASE("pullback and functoriality") {
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  GaloisCircle circle = make_galois_circle(f9);
  FieldElement i = FieldElement::generator(f9);

  SplitLineBundle p1 = pullback(make_galois_line_bundle(circle, FieldElement::one(f9)));
  for (auto& l : p1.lambda) CHECK(l.is_one());

  // lambda1 = 1+i: tuple of conjugates with product = norm = 2
  SplitLineBundle pi = pullback(make_galois_line_bundle(circle, FieldElement::one(f9) + i));
  CHECK(c1_split(pi).c1 == FieldElement::from_integer(f9, 2));

  // galois_class = c1_split(pullback) on 50 random bundles over two fields
  std::mt19937_64 rng(20260810);
  for (auto ext : {f9, FieldDescriptor::finite_extension(F(5), 2)}) {
    GaloisCircle gc = make_galois_circle(ext);
    for (int t = 0; t < 50; ++t) {
      FieldElement lam = random_unit(ext, rng);
      GaloisLineBundle l = make_galois_line_bundle(gc, lam);
      CHECK(lift_to(ext, galois_class(l).cls) == c1_split(pullback(l)).c1);
    }
  }
}

TEST_CASE("pushforward postconditions") {
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  FieldElement i = FieldElement::generator(f9);
  SplitCircle cover = make_split_circle(f9, 2);

  // trivial gluing: geometrically split, base change summands all trivial
  GluedBundle triv = pushforward(
      f9, make_split_line_bundle(cover, {FieldElement::one(f9), FieldElement::one(f9)}));
  CHECK(triv.rank == 2);
  auto cls = base_change_classes(triv);
  REQUIRE(cls.has_value());
  for (auto& c : *cls) CHECK(c.is_one());
  CHECK(geometrically_split(triv));

  // prod lambda = i not in F3: the base change has non-isomorphic summands
  GluedBundle tw = pushforward(f9, make_split_line_bundle(cover, {i, FieldElement::one(f9)}));
  auto cls2 = base_change_classes(tw);
  REQUIRE(cls2.has_value());
  CHECK(!geometrically_split(tw));

  // prod lambda = 2 in F3*: geometrically split
  GluedBundle sp = pushforward(
      f9, make_split_line_bundle(cover, {FieldElement::from_integer(f9, 2), FieldElement::one(f9)}));
  CHECK(geometrically_split(sp));

  // the convention-independent decomposition law: base change of the
  // pushforward of L is the direct sum over the Galois conjugates of L, as
  // multisets of c1 invariants, on 100 random bundles
  std::mt19937_64 rng(7);
  for (auto ext : {f9, FieldDescriptor::finite_extension(F(5), 2),
                   FieldDescriptor::finite_extension(F(2), 3)}) {
    long m = ext->degree();
    SplitCircle sc = make_split_circle(ext, m);
    for (int t = 0; t < 34; ++t) {
      std::vector<FieldElement> lambda;
      for (long j = 0; j < m; ++j) lambda.push_back(random_unit(ext, rng));
      SplitLineBundle l = make_split_line_bundle(sc, lambda);
      FieldElement prod = c1_split(l).c1;
      GluedBundle pf = pushforward(ext, l);
      auto classes = base_change_classes(pf);
      REQUIRE(classes.has_value());
      std::vector<std::string> got, expect;
      for (auto& c : *classes) got.push_back(c.str());
      for (long r = 0; r < m; ++r) expect.push_back(apply_sigma_pow(prod, r).str());
      std::sort(got.begin(), got.end());
      std::sort(expect.begin(), expect.end());
      CHECK(got == expect);
      // splitness criterion
      bool in_base = try_contract(prod).has_value();
      CHECK(geometrically_split(pf) == in_base);
    }
  }
}

TEST_CASE("global endomorphism algebras") {
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  SplitCircle cover = make_split_circle(f9, 2);

  // trivial gluing: End is the split cyclic algebra of a = 1
  GluedBundle triv = pushforward(
      f9, make_split_line_bundle(cover, {FieldElement::one(f9), FieldElement::one(f9)}));
  StructureConstantAlgebra end = global_end_algebra(triv);
  CHECK(end.dim() == 4);
  CHECK(is_central_simple(end));
  CHECK(find_zero_divisor(end, 0).outcome == Outcome::Proved);

  // rank-1 bundle: End = k
  Matrix one_by_one(f9, 1, 1);
  one_by_one.at(0, 0) = FieldElement::one(f9);
  GluedBundle rk1 = make_glued_bundle(make_galois_circle(f9), one_by_one);
  StructureConstantAlgebra e1 = global_end_algebra(rk1);
  CHECK(e1.dim() == 1);

  // random geometrically split pushforwards over F9/F3 and F25/F5:
  // dim 4, central simple, split consistent with norm membership
  std::mt19937_64 rng(20260810);
  for (auto ext : {f9, FieldDescriptor::finite_extension(F(5), 2)}) {
    SplitCircle sc = make_split_circle(ext, 2);
    for (int t = 0; t < 10; ++t) {
      FieldElement l0 = random_unit(ext, rng);
      FieldElement target = lift_to(ext, random_unit(ext->base(), rng));
      std::vector<FieldElement> lambda{l0, target / l0};
      GluedBundle pf = pushforward(ext, make_split_line_bundle(sc, lambda));
      REQUIRE(geometrically_split(pf));
      StructureConstantAlgebra e = global_end_algebra(pf);
      CHECK(e.dim() == 4);
      CHECK(is_central_simple(e));
      CHECK(find_zero_divisor(e, 0).outcome == Outcome::Proved);
      auto down = try_contract(c1_split(make_split_line_bundle(sc, lambda)).c1);
      REQUIRE(down.has_value());
      CHECK(norm_membership(ext, *down, 5).outcome == Outcome::Proved);
    }
  }
}

TEST_CASE("end algebra over Q matches the quaternion class") {
  // Galois circle over Q(i)/Q with prod lambda = -1: the End algebra is a
  // 4-dimensional central simple algebra whose class is the non-split
  // quaternion class
  FieldPtr qi = FieldDescriptor::gaussian_rationals();
  FieldPtr q = FieldDescriptor::rationals();
  SplitCircle sc = make_split_circle(qi, 2);
  std::vector<FieldElement> lambda{FieldElement::generator(qi),
                                   FieldElement::generator(qi)};  // product i^2 = -1
  SplitLineBundle l = make_split_line_bundle(sc, lambda);
  CHECK(c1_split(l).c1 == FieldElement::from_integer(qi, -1));
  GluedBundle pf = pushforward(qi, l);
  CHECK(geometrically_split(pf));
  StructureConstantAlgebra e = global_end_algebra(pf);
  CHECK(e.dim() == 4);
  CHECK(is_central_simple(e));
  CyclicBrauerClass cls = class_of_circle_bundle(qi, l);
  CHECK(cls.a == fe(q, -1));
  CHECK(is_split(cls, 10).outcome == Outcome::Refuted);
}

TEST_CASE("abel invariants") {
  auto f5 = F(5);
  SplitCircle c2 = make_split_circle(f5, 2);
  // zeros {2},{3}, poles {3},{4}: invariant (3*4)/(2*3) = 2
  AbelResult r = abel_invariant_split(c2, {{fe(f5, 2)}, {fe(f5, 3)}},
                                      {{fe(f5, 3)}, {fe(f5, 4)}});
  CHECK(r.invariant == fe(f5, 2));
  CHECK(!r.realizable);

  // zeros = poles componentwise: invariant 1, realizable
  AbelResult triv = abel_invariant_split(c2, {{fe(f5, 2)}, {fe(f5, 3)}},
                                         {{fe(f5, 2)}, {fe(f5, 3)}});
  CHECK(triv.invariant.is_one());
  CHECK(triv.realizable);
  CHECK(triv.section_constants.size() == 2);

  // unequal counts on a component
  CHECK_THROWS_AS(abel_invariant_split(c2, {{fe(f5, 2)}, {}}, {{}, {}}), ValidationError);
  // a point at a node (affine coordinate 0)
  CHECK_THROWS_AS(abel_invariant_split(c2, {{fe(f5, 0)}, {}}, {{fe(f5, 3)}, {}}),
                  ValidationError);

  // multiplicativity under concatenation of data
  AbelResult a1 = abel_invariant_split(c2, {{fe(f5, 2)}, {}}, {{fe(f5, 3)}, {}});
  AbelResult a2 = abel_invariant_split(c2, {{fe(f5, 4)}, {fe(f5, 2)}},
                                       {{fe(f5, 1)}, {fe(f5, 3)}});
  AbelResult both = abel_invariant_split(c2, {{fe(f5, 2), fe(f5, 4)}, {fe(f5, 2)}},
                                         {{fe(f5, 3), fe(f5, 1)}, {fe(f5, 3)}});
  CHECK(both.invariant == a1.invariant * a2.invariant);

  // realizability = invariant 1, cross-checked against brute force over all
  // data with one zero/pole per component at |k| <= 5
  for (long p : {3L, 5L}) {
    FieldPtr k = F(p);
    SplitCircle cc = make_split_circle(k, 2);
    for (auto& z0 : enumerate_units(k))
      for (auto& z1 : enumerate_units(k))
        for (auto& p0 : enumerate_units(k))
          for (auto& p1 : enumerate_units(k)) {
            AbelResult res = abel_invariant_split(cc, {{z0}, {z1}}, {{p0}, {p1}});
            CHECK(res.realizable == res.invariant.is_one());
            if (res.realizable) {
              // verify the witness: b_{j-1} = b_j * zeros_j / poles_j
              const auto& b = res.section_constants;
              CHECK(b[0] == b[1] * z1 / p1);
              CHECK(b[1] == b[0] * z0 / p0);
            }
          }
  }

  // rational-function sanity on P^1: f with zeros a_i and poles c_i has
  // f(infinity)/f(0) = prod c_i / prod a_i
  FieldPtr rat = FieldDescriptor::rational_functions(f5);
  FieldElement t = FieldElement::generator(rat);
  FieldElement a1p = fe(rat, 2), a2p = fe(rat, 4), c1p = fe(rat, 1), c2p = fe(rat, 3);
  FieldElement f = ((t - a1p) * (t - a2p)) / ((t - c1p) * (t - c2p));
  // f(0) by evaluation; f(infinity) = 1 since numerator and denominator are
  // monic of equal degree
  FieldElement f0 = (fe(rat, 0) - a1p) * (fe(rat, 0) - a2p) /
                    ((fe(rat, 0) - c1p) * (fe(rat, 0) - c2p));
  FieldElement expect = (c1p * c2p) / (a1p * a2p);
  CHECK(FieldElement::one(rat) / f0 == expect);
  (void)f;

  // Galois case: invariant is the norm of the component-0 ratio
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  GaloisCircle gc = make_galois_circle(f9);
  FieldElement i = FieldElement::generator(f9);
  FieldElement inv = abel_invariant_galois(gc, {i}, {FieldElement::one(f9) + i});
  CHECK(inv == norm(f9, (FieldElement::one(f9) + i) / i));
}

TEST_CASE("universal curves") {
  // Z/2 with the nontrivial element: the Galois circle of length 2
  CurveGraph z2 = build_universal_curve(GroupTable::cyclic(2), {1});
  CHECK(z2.vertex_count() == 2);
  CHECK(z2.edge_count() == 2);
  CHECK(z2.orbit_count() == 1);
  CHECK(z2.connected);

  // Z/4 with {1,3}: 4 vertices, 8 edges, 2 free orbits
  CurveGraph z4 = build_universal_curve(GroupTable::cyclic(4), {1, 3});
  CHECK(z4.vertex_count() == 4);
  CHECK(z4.edge_count() == 8);
  CHECK(z4.orbit_count() == 2);
  CHECK(z4.connected);

  // S3 with all transpositions: 6 vertices, 18 edges, 3 free orbits
  GroupTable s3 = GroupTable::symmetric3();
  CurveGraph s3g = build_universal_curve(s3, {1, 2, 3});
  CHECK(s3g.vertex_count() == 6);
  CHECK(s3g.edge_count() == 18);
  CHECK(s3g.orbit_count() == 3);
  CHECK(s3g.connected);

  // validation: non-generating or non-invariant sets are rejected
  CHECK_THROWS_AS(build_universal_curve(GroupTable::cyclic(4), {2}), ValidationError);
  CHECK_THROWS_AS(build_universal_curve(s3, {1}), ValidationError);  // not conj-invariant... or not generating
  CHECK_THROWS_AS(build_universal_curve(GroupTable::cyclic(4), {0, 1, 3}), ValidationError);
}

TEST_CASE("class of a circle bundle") {
  auto f9 = FieldDescriptor::finite_extension(F(3), 2);
  SplitCircle sc = make_split_circle(f9, 2);
  // prod lambda = 2 in F3*
  SplitLineBundle l =
      make_split_line_bundle(sc, {FieldElement::from_integer(f9, 2), FieldElement::one(f9)});
  CyclicBrauerClass cls = class_of_circle_bundle(f9, l);
  CHECK(cls.a == fe(F(3), 2));
  CHECK(is_split(cls, 5).outcome == Outcome::Proved);
  // consistency with the End-algebra analysis of the pushforward
  GluedBundle pf = pushforward(f9, l);
  StructureConstantAlgebra e = global_end_algebra(pf);
  CHECK(find_zero_divisor(e, 0).outcome == Outcome::Proved);

  // function field: prod lambda = t gives the period-2 class over F3(t)
  FieldPtr rat = FieldDescriptor::rational_functions(F(3));
  FieldPtr ext = FieldDescriptor::constant_extension(rat, 2);
  FieldElement t = FieldElement::generator(rat);
  SplitCircle scf = make_split_circle(ext, 2);
  SplitLineBundle lf =
      make_split_line_bundle(scf, {lift_to(ext, t), FieldElement::one(ext)});
  CyclicBrauerClass clf = class_of_circle_bundle(ext, lf);
  PeriodResult pr = period(clf, 5);
  REQUIRE(pr.decided);
  CHECK(pr.value == 2);

  // c1 outside k* is rejected
  FieldElement i = FieldElement::generator(f9);
  SplitLineBundle bad = make_split_line_bundle(sc, {i, FieldElement::one(f9)});
  CHECK_THROWS_AS(class_of_circle_bundle(f9, bad), ValidationError);
}
