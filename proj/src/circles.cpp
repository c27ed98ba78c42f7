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

#include "brauer/circles.hpp"

#include <algorithm>

#include "brauer/polynomial.hpp"

namespace brauer {

SplitCircle make_split_circle(FieldPtr field, long length) {
  if (!field) throw ValidationError("null field");
  if (length < 1) throw ValidationError("circle length must be at least 1");
  return SplitCircle{std::move(field), length};
}

GaloisCircle make_galois_circle(FieldPtr ext) {
  if (!ext || !ext->is_extension() || ext->sigma_image().empty())
    throw ValidationError("a Galois circle needs a cyclic extension descriptor");
  return GaloisCircle{std::move(ext)};
}

SplitLineBundle make_split_line_bundle(SplitCircle circle, std::vector<FieldElement> lambda) {
  if (static_cast<long>(lambda.size()) != circle.length)
    throw ValidationError("one gluing scalar per node is required");
  for (auto& l : lambda) {
    if (!l.valid() || !l.field()->same_field(*circle.field))
      throw ValidationError("gluing scalar not in the circle's field");
    if (l.is_zero()) throw ValidationError("gluing scalars must be nonzero");
  }
  return SplitLineBundle{std::move(circle), std::move(lambda)};
}

GaloisLineBundle make_galois_line_bundle(GaloisCircle circle, FieldElement lambda1) {
  if (!lambda1.valid() || !lambda1.field()->same_field(*circle.ext))
    throw ValidationError("lambda(1) must lie in the extension field");
  if (lambda1.is_zero()) throw ValidationError("lambda(1) must be nonzero");
  return GaloisLineBundle{std::move(circle), std::move(lambda1)};
}

GluedBundle make_glued_bundle(GaloisCircle circle, Matrix mat) {
  if (mat.rows() != mat.cols()) throw ValidationError("gluing matrix must be square");
  if (!mat.field()->same_field(*circle.ext))
    throw ValidationError("gluing matrix must have entries in the extension field");
  if (mat.det().is_zero()) throw ValidationError("gluing operator must be invertible");
  long r = static_cast<long>(mat.rows());
  return GluedBundle{std::move(circle), r, std::move(mat)};
}

SplitClassResult c1_split(const SplitLineBundle& l) {
  SplitClassResult res;
  res.c1 = FieldElement::one(l.circle.field);
  for (auto& li : l.lambda) res.c1 = res.c1 * li;
  res.trivial = res.c1.is_one();
  if (res.trivial) {
    // section witness: alpha_0 = 1, alpha_{i+1} = lambda_i alpha_i
    res.section.push_back(FieldElement::one(l.circle.field));
    for (long i = 0; i + 1 < l.circle.length; ++i)
      res.section.push_back(l.lambda[i] * res.section.back());
    // closing condition lambda_{m-1} alpha_{m-1} = alpha_0 holds since c1 = 1
    if (l.lambda.back() * res.section.back() != res.section.front())
      throw std::logic_error("section recurrence failed to close");
  }
  return res;
}

GaloisClassResult galois_class(const GaloisLineBundle& l) {
  GaloisClassResult res;
  res.cls = norm(l.circle.ext, l.lambda1);
  res.trivial = res.cls.is_one();
  if (res.trivial) {
    FieldElement f = hilbert90_witness(l.circle.ext, l.lambda1);
    // the fixed vector of the semilinear gluing: f = lambda1 * sigma(f)
    if (f != l.lambda1 * apply_sigma(f))
      throw std::logic_error("hilbert-90 witness does not fix the gluing");
    res.witness = f;
  }
  return res;
}

SplitLineBundle pullback(const GaloisLineBundle& l) {
  const FieldPtr& ext = l.circle.ext;
  long m = ext->degree();
  std::vector<FieldElement> lambda;
  lambda.reserve(m);
  for (long i = 0; i < m; ++i) lambda.push_back(apply_sigma_pow(l.lambda1, i));
  return make_split_line_bundle(make_split_circle(ext, m), std::move(lambda));
}

GluedBundle pushforward(const FieldPtr& ext, const SplitLineBundle& l) {
  if (!ext || !ext->is_extension() || ext->sigma_image().empty())
    throw ValidationError("pushforward needs the Galois descriptor of the covering");
  if (!l.circle.field->same_field(*ext))
    throw ValidationError("the line bundle must live on the split circle over K");
  long m = ext->degree();
  if (l.circle.length != m)
    throw ValidationError("circle length must equal the extension degree");
  Matrix mat(ext, m, m);
  for (long i = 0; i < m; ++i)
    mat.at((i + 1) % m, i) = apply_sigma_pow(l.lambda[i], i + 1);
  return make_glued_bundle(make_galois_circle(ext), std::move(mat));
}

namespace {

// twisted monodromy T = M sigma(M) ... sigma^{m-1}(M); its eigenvalues are
// the c1 invariants of the base-change summands
Matrix twisted_monodromy(const GluedBundle& b) {
  const FieldPtr& ext = b.circle.ext;
  long m = ext->degree();
  Matrix t = b.mat;
  Matrix conj = b.mat;
  for (long i = 1; i < m; ++i) {
    conj = conj.map([](const FieldElement& x) { return apply_sigma(x); });
    t = t * conj;
  }
  return t;
}

}  // namespace

std::optional<std::vector<FieldElement>> base_change_classes(const GluedBundle& b) {
  Matrix t = twisted_monodromy(b);
  const FieldPtr& ext = b.circle.ext;
  long r = b.rank;
  // diagonal monodromy (every pushforward lands here): read off the entries
  bool diagonal = true;
  for (long i = 0; i < r && diagonal; ++i)
    for (long j = 0; j < r && diagonal; ++j)
      if (i != j && !t.at(i, j).is_zero()) diagonal = false;
  std::vector<FieldElement> eig;
  if (diagonal) {
    for (long i = 0; i < r; ++i) eig.push_back(t.at(i, i));
    return eig;
  }
  if (!ext->is_finite()) return std::nullopt;
  // finite K: eigenvalues by root scan, diagonalizability by eigenspace sums
  Polynomial cp(ext, char_poly(t));
  long total = 0;
  for (const FieldElement& lambda : poly_roots(cp)) {
    Matrix shifted = t;
    for (long i = 0; i < r; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;
    long dim = static_cast<long>(shifted.kernel_basis().size());
    total += dim;
    for (long c = 0; c < dim; ++c) eig.push_back(lambda);
  }
  if (total != r) return std::nullopt;  // not diagonalizable over K
  return eig;
}

bool geometrically_split(const GluedBundle& b) {
  auto classes = base_change_classes(b);
  if (!classes) return false;
  for (auto& c : *classes)
    if (c != classes->front()) return false;
  return true;
}

StructureConstantAlgebra global_end_algebra(const GluedBundle& b) {
  const FieldPtr& ext = b.circle.ext;
  const FieldPtr& base = ext->base();
  long m = ext->degree();
  long r = b.rank;
  // Phi M = M sigma(Phi) as a k-linear system in the K-entries of Phi:
  // unknowns indexed (row, col, coord), coord over the base field
  long unknowns = r * r * m;
  Matrix system(base, unknowns, unknowns);
  Matrix sig = sigma_matrix(ext);
  // precompute multiplication matrices for the entries of M
  std::vector<std::vector<Matrix>> mult(r, std::vector<Matrix>(r, Matrix(base, m, m)));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j)
      if (!b.mat.at(i, j).is_zero()) mult[i][j] = multiplication_matrix(b.mat.at(i, j));
  auto idx = [r, m](long row, long col, long coord) { return (row * r + col) * m + coord; };
  // equation block (i, c): sum_s Phi[i][s] M[s][c] - M[i][s] sigma(Phi[s][c]) = 0
  for (long i = 0; i < r; ++i)
    for (long c = 0; c < r; ++c)
      for (long s = 0; s < r; ++s) {
        if (!b.mat.at(s, c).is_zero())
          for (long row = 0; row < m; ++row)
            for (long col = 0; col < m; ++col)
              system.at(idx(i, c, row), idx(i, s, col)) =
                  system.at(idx(i, c, row), idx(i, s, col)) + mult[s][c].at(row, col);
        if (!b.mat.at(i, s).is_zero()) {
          Matrix op = mult[i][s] * sig;
          for (long row = 0; row < m; ++row)
            for (long col = 0; col < m; ++col)
              system.at(idx(i, c, row), idx(s, c, col)) =
                  system.at(idx(i, c, row), idx(s, c, col)) - op.at(row, col);
        }
      }
  std::vector<std::vector<FieldElement>> basis = system.kernel_basis();
  long dim = static_cast<long>(basis.size());
  if (dim == 0) throw std::logic_error("endomorphism algebra lost the identity");

  // rebuild each solution as a matrix over K
  auto to_matrix = [&](const std::vector<FieldElement>& flat) {
    Matrix phi(ext, r, r);
    for (long row = 0; row < r; ++row)
      for (long col = 0; col < r; ++col) {
        std::vector<FieldElement> coords(flat.begin() + idx(row, col, 0),
                                         flat.begin() + idx(row, col, 0) + m);
        phi.at(row, col) = FieldElement::from_coords(ext, std::move(coords));
      }
    return phi;
  };
  auto to_flat = [&](const Matrix& phi) {
    std::vector<FieldElement> flat(unknowns, FieldElement::zero(base));
    for (long row = 0; row < r; ++row)
      for (long col = 0; col < r; ++col) {
        const auto& coords = phi.at(row, col).coords();
        for (long t = 0; t < m; ++t) flat[idx(row, col, t)] = coords[t];
      }
    return flat;
  };

  std::vector<Matrix> gens;
  gens.reserve(dim);
  for (auto& v : basis) gens.push_back(to_matrix(v));
  // coordinate matrix of the basis for expressing products
  Matrix coord(base, unknowns, dim);
  for (long j = 0; j < dim; ++j)
    for (long i = 0; i < unknowns; ++i) coord.at(i, j) = basis[j][i];
  auto express = [&](const Matrix& phi) {
    auto sol = coord.solve(to_flat(phi));
    if (!sol) throw std::logic_error("endomorphism product left the solution space");
    return *sol;
  };

  std::vector<FieldElement> table(static_cast<size_t>(dim) * dim * dim,
                                  FieldElement::zero(base));
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) {
      std::vector<FieldElement> coords = express(gens[i] * gens[j]);
      for (long k = 0; k < dim; ++k)
        table[(static_cast<size_t>(i) * dim + j) * dim + k] = coords[k];
    }
  std::vector<FieldElement> unit = express(Matrix::identity(ext, r));
  return StructureConstantAlgebra(base, dim, std::move(table), std::move(unit));
}

AbelResult abel_invariant_split(const SplitCircle& circle,
                                const std::vector<std::vector<FieldElement>>& zeros,
                                const std::vector<std::vector<FieldElement>>& poles) {
  long m = circle.length;
  if (static_cast<long>(zeros.size()) != m || static_cast<long>(poles.size()) != m)
    throw ValidationError("zero/pole data must cover every component");
  const FieldPtr& k = circle.field;
  AbelResult res;
  res.invariant = FieldElement::one(k);
  for (long j = 0; j < m; ++j) {
    if (zeros[j].size() != poles[j].size())
      throw ValidationError("unequal zero and pole counts on a component");
    for (auto& z : zeros[j]) {
      if (!z.valid() || !z.field()->same_field(*k)) throw ValidationError("point field mismatch");
      if (z.is_zero()) throw ValidationError("a zero sits at a node");
      res.invariant = res.invariant / z;
    }
    for (auto& p : poles[j]) {
      if (!p.valid() || !p.field()->same_field(*k)) throw ValidationError("point field mismatch");
      if (p.is_zero()) throw ValidationError("a pole sits at a node");
      res.invariant = res.invariant * p;
    }
  }
  // a section with this data exists iff the invariant is 1: the constants
  // b_j must satisfy b_{j-1} = b_j (prod zeros_j)(prod poles_j)^{-1} around
  // the circle
  res.realizable = res.invariant.is_one();
  if (res.realizable) {
    std::vector<FieldElement> b(m, FieldElement::one(k));
    for (long j = m - 1; j >= 1; --j) {
      FieldElement ratio = FieldElement::one(k);
      for (auto& z : zeros[j]) ratio = ratio * z;
      for (auto& p : poles[j]) ratio = ratio / p;
      b[j - 1] = b[j] * ratio;
    }
    // closing condition (the j = 0 instance b_{m-1} = b_0 * ratio_0) holds
    // because the product of the ratios is the inverse invariant, which is 1
    FieldElement ratio0 = FieldElement::one(k);
    for (auto& z : zeros[0]) ratio0 = ratio0 * z;
    for (auto& p : poles[0]) ratio0 = ratio0 / p;
    if (b[0] * ratio0 != b[m - 1]) throw std::logic_error("section constants failed to close");
    res.section_constants = std::move(b);
  }
  return res;
}

FieldElement abel_invariant_galois(const GaloisCircle& circle,
                                   const std::vector<FieldElement>& zeros0,
                                   const std::vector<FieldElement>& poles0) {
  const FieldPtr& ext = circle.ext;
  if (zeros0.size() != poles0.size())
    throw ValidationError("unequal zero and pole counts on the base component");
  FieldElement ratio = FieldElement::one(ext);
  for (auto& z : zeros0) {
    if (!z.valid() || !z.field()->same_field(*ext)) throw ValidationError("point field mismatch");
    if (z.is_zero()) throw ValidationError("a zero sits at a node");
    ratio = ratio / z;
  }
  for (auto& p : poles0) {
    if (!p.valid() || !p.field()->same_field(*ext)) throw ValidationError("point field mismatch");
    if (p.is_zero()) throw ValidationError("a pole sits at a node");
    ratio = ratio * p;
  }
  return norm(ext, ratio);
}

CyclicBrauerClass class_of_circle_bundle(const FieldPtr& ext, const SplitLineBundle& l) {
  if (!ext || !ext->is_extension()) throw ValidationError("a cyclic extension is required");
  if (!l.circle.field->same_field(*ext))
    throw ValidationError("the bundle must live on the split circle over K");
  SplitClassResult c1 = c1_split(l);
  FieldElement lifted = c1.c1;
  auto down = try_contract(lifted);
  if (!down) throw ValidationError("c1 of the bundle does not lie in the base field");
  return make_class(ext, *down);
}

GroupTable GroupTable::from_table(std::vector<long> mul) {
  GroupTable g;
  long n = 0;
  while (n * n < static_cast<long>(mul.size())) ++n;
  if (n * n != static_cast<long>(mul.size()))
    throw ValidationError("multiplication table must be square");
  g.order = n;
  g.mul = std::move(mul);
  for (long v : g.mul)
    if (v < 0 || v >= n) throw ValidationError("table entry out of range");
  // locate the two-sided identity
  g.identity = -1;
  for (long e = 0; e < n; ++e) {
    bool ok = true;
    for (long a = 0; a < n && ok; ++a)
      if (g.times(e, a) != a || g.times(a, e) != a) ok = false;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw ValidationError("table has no identity element");
  // inverses
  g.inverse.assign(n, -1);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      if (g.times(a, b) == g.identity && g.times(b, a) == g.identity) g.inverse[a] = b;
  for (long a = 0; a < n; ++a)
    if (g.inverse[a] < 0) throw ValidationError("table element without inverse");
  // associativity
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c)))
          throw ValidationError("table is not associative");
  return g;
}

GroupTable GroupTable::cyclic(long n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<long> mul(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return from_table(std::move(mul));
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2} listed as: e, (01), (02), (12), (012), (021)
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                        {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int a, int b) {  // a after b
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == c) return static_cast<long>(k);
    throw std::logic_error("permutation composition fell outside S3");
  };
  std::vector<long> mul(36);
  for (long a = 0; a < 6; ++a)
    for (long b = 0; b < 6; ++b) mul[a * 6 + b] = compose(a, b);
  return from_table(std::move(mul));
}

CurveGraph build_universal_curve(const GroupTable& g, std::vector<long> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty()) throw ValidationError("empty generating set");
  for (long s : generators) {
    if (s < 0 || s >= g.order) throw ValidationError("generator index out of range");
    if (s == g.identity)
      throw ValidationError("the identity cannot be used: components join distinct nodes");
  }
  // conjugation invariance
  for (long h = 0; h < g.order; ++h)
    for (long s : generators) {
      long conj = g.times(g.times(h, s), g.inverse[h]);
      if (!std::binary_search(generators.begin(), generators.end(), conj))
        throw ValidationError("generating set is not conjugation invariant");
    }
  // generation: closure under multiplication reaches the whole group
  {
    std::vector<bool> seen(g.order, false);
    std::vector<long> stack{g.identity};
    seen[g.identity] = true;
    long reached = 1;
    while (!stack.empty()) {
      long v = stack.back();
      stack.pop_back();
      for (long s : generators) {
        long w = g.times(s, v);
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != g.order) throw ValidationError("set does not generate the group");
  }

  CurveGraph graph;
  graph.group = g;
  graph.generators = generators;
  auto orbit_of = [&](long gamma, long s) {
    // the orbit label of the edge (gamma, s gamma) is gamma^-1 s gamma,
    // the unique representative at the identity vertex
    long rep = g.times(g.times(g.inverse[gamma], s), gamma);
    auto it = std::lower_bound(generators.begin(), generators.end(), rep);
    if (it == generators.end() || *it != rep)
      throw std::logic_error("orbit representative not in the generating set");
    return static_cast<long>(it - generators.begin());
  };
  for (long gamma = 0; gamma < g.order; ++gamma)
    for (long s : generators)
      graph.edges.push_back(CurveEdge{gamma, g.times(s, gamma), s, orbit_of(gamma, s)});

  // combinatorial checks of the construction's properties:
  // (4) component count |G| * |g|
  if (graph.edge_count() != g.order * static_cast<long>(generators.size()))
    throw std::logic_error("edge count mismatch");
  // (5) each component joins two distinct nodes
  for (auto& e : graph.edges)
    if (e.src == e.dst) throw std::logic_error("component with a self-node");
  // (2) the action on vertices is simply transitive by construction; verify
  // the induced action on edges h.(gamma, s) = (h gamma, h s h^-1) is
  // well-defined and each orbit is free of size |G|
  std::vector<long> orbit_sizes(generators.size(), 0);
  for (auto& e : graph.edges) ++orbit_sizes[e.orbit];
  for (long sz : orbit_sizes)
    if (sz != g.order) throw std::logic_error("edge orbit is not free");
  for (auto& e : graph.edges)
    for (long h = 0; h < g.order; ++h) {
      long hs = g.times(g.times(h, e.generator), g.inverse[h]);
      long hsrc = g.times(h, e.src);
      CurveEdge image{hsrc, g.times(hs, hsrc), hs, 0};
      if (image.dst != g.times(h, e.dst)) throw std::logic_error("group action broke an edge");
    }
  // (1) connectivity of the graph itself
  {
    std::vector<bool> seen(g.order, false);
    std::vector<long> stack{0};
    seen[0] = true;
    long reached = 1;
    while (!stack.empty()) {
      long v = stack.back();
      stack.pop_back();
      for (auto& e : graph.edges) {
        long other = -1;
        if (e.src == v) other = e.dst;
        if (e.dst == v) other = e.src;
        if (other >= 0 && !seen[other]) {
          seen[other] = true;
          ++reached;
          stack.push_back(other);
        }
      }
    }
    graph.connected = (reached == g.order);
    if (!graph.connected) throw std::logic_error("graph of a generating set must be connected");
  }
  // node degrees: each vertex carries |g| zeros and |g| infinities
  std::vector<long> out_deg(g.order, 0), in_deg(g.order, 0);
  for (auto& e : graph.edges) {
    ++out_deg[e.src];
    ++in_deg[e.dst];
  }
  for (long v = 0; v < g.order; ++v)
    if (out_deg[v] != static_cast<long>(generators.size()) ||
        in_deg[v] != static_cast<long>(generators.size()))
      throw std::logic_error("node incidence mismatch");
  return graph;
}

}  // namespace brauer
