// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every expected value is written out literally so the checks stay
// independent of the library's own fixtures wherever the sources differ.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <deque>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtrop/cluster.hpp"
#include "qtrop/fixtures.hpp"
#include "qtrop/hereditary.hpp"
#include "qtrop/polytope.hpp"
#include "qtrop/presentation.hpp"
#include "qtrop/quiver.hpp"
#include "qtrop/rational.hpp"
#include "qtrop/representation.hpp"
#include "qtrop/subrep.hpp"

namespace fx = qtrop::fixtures;
using namespace qtrop;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

IMat sorted_rows(IMat rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

Int vec_total(const IVec& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

std::vector<const AlgebraBasis*> algebras() {
  return {&fx::a2_algebra(),      &fx::a3_algebra(),
          &fx::kron3_algebra(),   &fx::two_one_algebra(),
          &fx::ztriangle_algebra(), &fx::tricycle4_algebra()};
}

IVec small_dims(int n, Rng& rng) {
  for (;;) {
    IVec d(n);
    bool nonzero = false;
    for (int v = 0; v < n; ++v) {
      d[v] = rng.uniform(0, 1);
      nonzero = nonzero || d[v] != 0;
    }
    if (nonzero) return d;
  }
}

IVec random_delta(int n, Rng& rng, Int bound) {
  for (;;) {
    IVec d(n);
    bool nonzero = false;
    for (int v = 0; v < n; ++v) {
      d[v] = rng.uniform(-bound, bound);
      nonzero = nonzero || d[v] != 0;
    }
    if (nonzero) return d;
  }
}

// --- Criterion 1: the double-arrow fixture --------------------------------

Outcome c1_double_arrow() {
  Rep<Rat> m = fx::kron3_rep33();
  const IVec delta{1, -1};
  Int f5 = tropical_f(subrep_lattice<5>(reduce_rep<5>(m)), delta);
  Int f7 = tropical_f(subrep_lattice<7>(reduce_rep<7>(m)), delta);

  const SampleInfo info{5, 100, 0};
  Rng rng(info.rngSeed);
  Int h1 = generic_hom_e(fx::kron3_algebra(), proj_weight(delta), m, rng, info)
               .hom;
  Int h2 = generic_hom_e(fx::kron3_algebra(), proj_weight({2, -2}), m, rng,
                         info)
               .hom;

  std::ostringstream d;
  d << "f5=" << f5 << " f7=" << f7 << " hom(delta)=" << h1
    << " hom(2delta)=" << h2;
  return {f5 == 0 && f7 == 0 && h1 == 1 && h2 == 0, d.str()};
}

// --- Criterion 2: generic Newton polytope of (3,5,2) -----------------------

Outcome c2_generic_newton() {
  GenericExtTable table(fx::two_one());
  const IVec alpha{3, 5, 2};
  const Polytope& p = table.newton(alpha);

  const IMat expected = sorted_rows(
      {{0, 0, 0}, {0, 3, 0}, {0, 0, 2}, {0, 5, 2}, {2, 3, 2}, {3, 5, 2}});
  bool verticesOk = p.vertices == expected;

  const IMat b = fx::two_one().exchange_matrix();
  auto found = cluster_search(b, 5);
  std::set<IMat> foundRows;
  for (const auto& rec : found) foundRows.insert(rec.rows);

  bool clustersOk = true;
  bool recoveryOk = true;
  for (const auto& row : fx::two_one_vertex_table()) {
    clustersOk = clustersOk && foundRows.count(sorted_rows(row.cluster)) > 0;
    Seed seed = initial_seed(b);
    for (int k : row.sequence) seed = mutate_seed(seed, k);
    clustersOk = clustersOk && sorted_rows(seed.g) == sorted_rows(row.cluster);
    IVec h;
    for (const IVec& g : seed.g) h.push_back(support_value(p, g));
    recoveryOk = recoveryOk && vertex_recovery(seed.g, h) == row.vertex;
  }

  std::ostringstream d;
  d << "vertices=" << p.vertices.size() << " clusters found=" << found.size()
    << " printed clusters " << (clustersOk ? "ok" : "MISSING")
    << " recoveries " << (recoveryOk ? "ok" : "WRONG");
  return {verticesOk && clustersOk && recoveryOk, d.str()};
}

// --- Criterion 3: maximal chains vs factor sequences -----------------------

Outcome c3_chains() {
  GenericExtTable table(fx::two_one());
  PathsBijection b = maximal_paths_bijection(table, {3, 5, 2});

  auto sorted = [](std::vector<SchurSequence> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<SchurSequence> printed;
  for (const auto& row : fx::two_one_chain_table())
    printed.push_back({row.coeffs, row.roots});

  bool matched = true;
  for (std::size_t i = 0; i < b.match.size(); ++i)
    matched = matched && b.match[i] >= 0;

  bool ok = b.bijective && matched && b.paths.size() == 6 &&
            sorted(b.pathFactors) == sorted(printed) &&
            sorted(b.sequences) == sorted(printed);
  std::ostringstream d;
  d << "paths=" << b.paths.size() << " sequences=" << b.sequences.size()
    << (b.bijective ? " bijective" : " NOT BIJECTIVE");
  return {ok, d.str()};
}

// --- Criterion 4: regular-representation polytope and exchange structure ---

Outcome c4_regular() {
  const AlgebraBasis& alg = fx::ztriangle_algebra();
  Rep<Rat> m = fx::ztriangle_regular_rep();
  Polytope p = newton_polytope(subrep_lattice<5>(reduce_rep<5>(m)));

  bool verticesOk = p.vertices == sorted_rows(fx::ztriangle_newton_vertices())
                    && p.vertices.size() == 9;
  bool zeroOk = std::find(p.vertices.begin(), p.vertices.end(),
                          IVec{0, 0, 0}) != p.vertices.end();
  bool topOk = std::find(p.vertices.begin(), p.vertices.end(), m.dims) !=
               p.vertices.end();

  // Each printed generator triple, negated, lies in exactly one vertex's
  // normal cone and spans a full-dimensional subcone; the pairing is a
  // bijection onto the seven proper nonzero vertices.
  std::set<IVec> matched;
  bool conesOk = true;
  for (const auto& row : fx::ztriangle_cone_table()) {
    IMat gens;
    for (const IVec& g : row.generators) gens.push_back(neg(g));
    std::vector<IVec> hits;
    for (const IVec& v : p.vertices) {
      Cone c = normal_cone(p, v);
      bool all = true;
      for (const IVec& g : gens) all = all && cone_contains(c, g);
      if (all) hits.push_back(v);
    }
    conesOk = conesOk && hits.size() == 1 && cone_dim(Cone{gens, {}}, 3) == 3;
    if (hits.size() == 1) matched.insert(hits[0]);
  }
  conesOk = conesOk && matched.size() == 7 && !matched.count(IVec{0, 0, 0}) &&
            !matched.count(m.dims);

  // The bounded rigidity enumeration is implemented, so the 18-node
  // exchange structure is asserted rather than skipped.
  const SampleInfo info{5, 100, 0};
  Rng rng(info.rngSeed);
  auto clusters = rigid_clusters(alg, 2, rng, info);
  ExchangeGraph g = exchange_quiver(alg, clusters, rng, info);
  bool exchangeOk = clusters.size() == 18 && g.arrows.size() == 27;

  std::ostringstream d;
  d << "vertices=" << p.vertices.size() << " cone rows "
    << (conesOk ? "ok" : "WRONG") << " clusters=" << clusters.size()
    << " arrows=" << g.arrows.size();
  return {verticesOk && zeroOk && topOk && conesOk && exchangeOk, d.str()};
}

// --- Criterion 5: copresentation kernel fixture -----------------------------

Outcome c5_kernel() {
  const AlgebraBasis& alg = fx::tricycle4_algebra();
  const SampleInfo info{5, 100, 0};
  Rng rng(info.rngSeed);

  // Generic kernels minimize dims, and degeneration only enlarges the
  // Newton polytope: keep the containment-minimal polytope among the
  // minimal-dims draws.
  std::vector<Rep<Fp<5>>> draws;
  std::pair<Int, IVec> bestKey;
  for (int s = 0; s < info.samples; ++s) {
    Presentation pres = sample_presentation(
        alg, inj_weight(fx::tricycle4_dual_weight()), rng, info.coeffBound);
    Rep<Fp<5>> ker = presentation_kernel<Fp<5>>(pres);
    std::pair<Int, IVec> key{vec_total(ker.dims), ker.dims};
    if (draws.empty() || key < bestKey) bestKey = key;
    draws.push_back(std::move(ker));
  }
  std::vector<std::pair<Rep<Fp<5>>, Polytope>> cands;
  for (Rep<Fp<5>>& ker : draws)
    if (std::pair<Int, IVec>{vec_total(ker.dims), ker.dims} == bestKey)
      cands.emplace_back(std::move(ker),
                         newton_polytope(subrep_lattice<5>(ker)));
  std::size_t pick = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size() && minimal; ++j) {
      if (i == j) continue;
      for (const IVec& v : cands[i].second.vertices)
        if (!polytope_contains(cands[j].second, v)) {
          minimal = false;
          break;
        }
    }
    if (minimal) {
      pick = i;
      break;
    }
  }
  const Rep<Fp<5>>& m = cands[pick].first;
  const Polytope& p = cands[pick].second;

  bool dimsOk = m.dims == IVec{1, 1, 1, 2};
  bool verticesOk =
      p.vertices == sorted_rows(fx::tricycle4_newton_vertices()) &&
      p.vertices.size() == 8;

  const IMat b = fx::tricycle4_B();
  bool certOk = true;
  for (const auto& row : fx::tricycle4_vertex_table()) {
    Seed seed = initial_seed(b);
    for (int k : row.sequence) seed = mutate_seed(seed, k);
    certOk = certOk && sorted_rows(seed.g) == sorted_rows(row.cluster);
    for (const IVec& g : seed.g)
      certOk = certOk && support_value(p, g) == dot(g, row.vertex);
  }

  std::ostringstream d;
  d << "kernel dims (" << m.dims[0] << "," << m.dims[1] << "," << m.dims[2]
    << "," << m.dims[3] << ") vertices=" << p.vertices.size()
    << " certificates " << (certOk ? "ok" : "WRONG");
  return {dimsOk && verticesOk && certOk, d.str()};
}

// --- Criterion 6: randomized property suites --------------------------------

Outcome c6_properties() {
  long violations = 0;
  auto expect = [&](bool cond) {
    if (!cond) ++violations;
  };
  auto algs = algebras();

  // Additivity over direct sums, dual complementarity, Minkowski sums.
  {
    Rng rng(2024);
    for (int i = 0; i < 120; ++i) {
      const AlgebraBasis& alg = *algs[i % algs.size()];
      const int n = alg.n();
      Rep<Fp<5>> m = random_rep<Fp<5>>(alg, small_dims(n, rng), rng, 10);
      Rep<Fp<5>> w = random_rep<Fp<5>>(alg, small_dims(n, rng), rng, 10);
      Rep<Fp<5>> s = direct_sum(m, w);
      SubrepLattice lm = subrep_lattice<5>(m);
      SubrepLattice lw = subrep_lattice<5>(w);
      SubrepLattice ls = subrep_lattice<5>(s);
      for (int t = 0; t < 5; ++t) {
        IVec delta = random_delta(n, rng, 4);
        expect(tropical_f(ls, delta) ==
               tropical_f(lm, delta) + tropical_f(lw, delta));
        expect(tropical_f(ls, delta) - tropical_f_dual(ls, neg(delta)) ==
               dot(delta, s.dims));
      }
      Polytope sum = minkowski_sum(newton_polytope(lm), newton_polytope(lw));
      expect(newton_polytope(ls).vertices == sum.vertices);
    }
  }

  // Sampled hom dominates the tropical value; scaling witness n <= 6.
  int fixtureWitness = 0;
  {
    const SampleInfo info{3, 50, 0};
    Rep<Rat> m = fx::kron3_rep33();
    SubrepLattice lat = subrep_lattice<5>(reduce_rep<5>(m));
    const IVec delta{1, -1};
    Int f = tropical_f(lat, delta);
    Rng rng(7);
    for (int n = 1; n <= 6 && fixtureWitness == 0; ++n) {
      Int h = generic_hom_e(fx::kron3_algebra(), proj_weight(scale(n, delta)),
                            m, rng, info)
                  .hom;
      if (h == n * f) fixtureWitness = n;
    }
    expect(fixtureWitness == 2);

    Rng rng2(77);
    for (int i = 0; i < 110; ++i) {
      const AlgebraBasis& alg = *algs[i % algs.size()];
      const int n = alg.n();
      Rep<Fp<5>> mm = random_rep<Fp<5>>(alg, small_dims(n, rng2), rng2, 10);
      SubrepLattice lat2 = subrep_lattice<5>(mm);
      IVec delta2 = random_delta(n, rng2, 2);
      Int f2 = tropical_f(lat2, delta2);
      Int h2 = generic_hom_e(alg, proj_weight(delta2), mm, rng2, info).hom;
      expect(f2 <= h2);
      int witness = 0;
      for (int k = 1; k <= 6 && witness == 0; ++k) {
        Int hk = generic_hom_e(alg, proj_weight(scale(k, delta2)), mm, rng2,
                               info)
                     .hom;
        if (hk == k * f2) witness = k;
      }
      expect(witness >= 1);
    }
  }

  // Edge quivers: one-signed, antisymmetric, acyclic.
  {
    Rng rng(4096);
    for (int i = 0; i < 110; ++i) {
      const AlgebraBasis& alg = *algs[i % algs.size()];
      const int n = alg.n();
      IVec dims = small_dims(n, rng);
      if (n <= 2) dims = add(dims, small_dims(n, rng));
      Rep<Fp<5>> m = random_rep<Fp<5>>(alg, dims, rng, 10);
      Polytope p = newton_polytope(subrep_lattice<5>(m));
      EdgeQuiver eq = edge_quiver(p);
      std::set<std::pair<int, int>> seen;
      for (const auto& [from, to] : eq.edges) {
        expect(from != to);
        expect(leq(eq.vertices[from], eq.vertices[to]));
        expect(!seen.count({to, from}));
        seen.insert({from, to});
      }
      std::vector<int> indeg(eq.vertices.size(), 0);
      for (const auto& e : eq.edges) ++indeg[e.second];
      std::vector<int> queue;
      for (std::size_t v = 0; v < indeg.size(); ++v)
        if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
      std::size_t visited = 0;
      while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++visited;
        for (const auto& e : eq.edges)
          if (e.first == v && --indeg[e.second] == 0)
            queue.push_back(e.second);
      }
      expect(visited == eq.vertices.size());
    }
  }

  // Normal-fan completeness on 1000 random weights.
  {
    Rng rng(555);
    int checks = 0;
    while (checks < 1000) {
      const AlgebraBasis& alg = *algs[checks % algs.size()];
      const int n = alg.n();
      Rep<Fp<5>> m = random_rep<Fp<5>>(alg, small_dims(n, rng), rng, 10);
      Polytope p = newton_polytope(subrep_lattice<5>(m));
      std::vector<Cone> fan = normal_fan(p);
      expect(fan.size() == p.vertices.size());
      for (int t = 0; t < 50 && checks < 1000; ++t) {
        IVec delta = random_delta(n, rng, 9);
        std::vector<int> arg = argmax_vertices(p, delta);
        int hits = 0;
        for (std::size_t v = 0; v < fan.size(); ++v) {
          bool inCone = cone_contains(fan[v], delta);
          bool maximizes =
              std::find(arg.begin(), arg.end(), static_cast<int>(v)) !=
              arg.end();
          expect(inCone == maximizes);
          hits += inCone ? 1 : 0;
        }
        expect(hits >= 1);
        ++checks;
      }
    }
  }

  std::ostringstream d;
  d << "violations=" << violations << " fixture witness n=" << fixtureWitness;
  return {violations == 0, d.str()};
}

// --- Criterion 7: recursion vs sampled extensions ---------------------------

Outcome c7_recursion() {
  struct Setup {
    const AlgebraBasis* alg;
    Quiver quiver;
    Int hi;
  };
  std::vector<Setup> setups = {{&fx::a2_algebra(), fx::a2(), 3},
                               {&fx::a3_algebra(), fx::a3(), 2},
                               {&fx::kron3_algebra(), fx::kron3(), 3}};
  std::vector<GenericExtTable> tables;
  for (const auto& s : setups) tables.emplace_back(s.quiver);

  auto random_dims = [](Rng& rng, int n, Int hi) {
    IVec v(n);
    for (auto& x : v) x = rng.uniform(0, hi);
    return v;
  };

  Rng rng(2024);
  int done = 0;
  int disagreements = 0;
  std::size_t memoTotal = 0;
  while (done < 200) {
    const std::size_t which = done % setups.size();
    const Setup& s = setups[which];
    IVec alpha = random_dims(rng, s.quiver.n, s.hi);
    IVec beta = random_dims(rng, s.quiver.n, s.hi);
    if (vec_total(alpha) + vec_total(beta) > 10) continue;

    // Hereditary oracle: ext^1(M,N) = hom(M,N) - <dim M, dim N> on sampled
    // pairs, minimized over five draws.
    Int best = -1;
    for (int k = 0; k < 5; ++k) {
      Rep<Rat> m = random_rep<Rat>(*s.alg, alpha, rng, 100);
      Rep<Rat> n = random_rep<Rat>(*s.alg, beta, rng, 100);
      Int e = hom_dim(m, n) - euler_form(s.quiver, alpha, beta);
      if (best < 0 || e < best) best = e;
    }
    // The table itself recomputes every memo entry through both maximum
    // formulas and throws on any internal disagreement.
    if (tables[which].ext(alpha, beta) != best) ++disagreements;
    ++done;
  }
  for (auto& t : tables) memoTotal += t.memo_size();

  std::ostringstream d;
  d << "pairs=" << done << " disagreements=" << disagreements
    << " memo entries=" << memoTotal;
  return {done == 200 && disagreements == 0, d.str()};
}

// --- Criterion 8: exhaustive seed mutations to depth 8 ----------------------

Outcome c8_seeds() {
  std::vector<IMat> bs = {fx::a2().exchange_matrix(),
                          fx::a3().exchange_matrix(),
                          fx::two_one().exchange_matrix(), fx::tricycle4_B()};
  long seeds = 0;
  long violations = 0;
  for (const IMat& b : bs) {
    const int n = static_cast<int>(b.size());
    std::set<std::array<IMat, 3>> visited;
    std::deque<Seed> frontier;
    Seed start = initial_seed(b);
    visited.insert({start.b, start.g, start.c});
    frontier.push_back(start);
    while (!frontier.empty()) {
      Seed cur = frontier.front();
      frontier.pop_front();
      ++seeds;
      Rat dg = idet(cur.g);
      if (dg != Rat(1) && dg != Rat(-1)) ++violations;
      if (dual_c_vectors(cur.g) != cur.c) ++violations;
      if (static_cast<int>(cur.history.size()) >= 8) continue;
      for (int k = 0; k < n; ++k) {
        // mutate_seed itself verifies involutivity, exact C/G duality, and
        // c-vector sign coherence, throwing on any violation.
        Seed next = mutate_seed(cur, k);
        if (visited.insert({next.b, next.g, next.c}).second)
          frontier.push_back(next);
      }
    }
  }
  std::ostringstream d;
  d << "seeds=" << seeds << " violations=" << violations;
  return {violations == 0, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*fn)();
    double budgetSeconds;
  };
  const Criterion criteria[] = {
      {"double-arrow fixture: tropical gap and sampled hom", c1_double_arrow,
       1.0},
      {"generic Newton polytope (3,5,2): vertices, clusters, recoveries",
       c2_generic_newton, 10.0},
      {"maximal chains match the printed factor sequences", c3_chains, 30.0},
      {"regular-representation polytope, cone generators, exchange structure",
       c4_regular, 10.0},
      {"copresentation kernel: dims, vertices, mutation certificates",
       c5_kernel, 30.0},
      {"randomized property suites (seed-fixed, >=100 instances each)",
       c6_properties, 120.0},
      {"subdimension recursion vs sampled extensions (200 pairs)",
       c7_recursion, 120.0},
      {"seed mutations to depth 8: involution, duality, sign coherence",
       c8_seeds, 60.0},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    bool withinBudget = dt <= c.budgetSeconds;
    bool pass = o.pass && withinBudget;
    std::printf("%s criterion %d: %s (%.2fs%s) %s\n", pass ? "PASS" : "FAIL",
                index, c.name, dt,
                withinBudget ? "" : " OVER BUDGET", o.detail.c_str());
    if (!pass) ++failures;
  }
  return failures;
}
