#include "qtrop/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "qtrop/error.hpp"
#include "qtrop/linalg.hpp"

namespace qtrop {
namespace {

void check_square(const IMat& m, const char* who) {
  require(!m.empty(), ErrorCode::EmptyInput, std::string(who) + ": empty matrix");
  for (const IVec& row : m)
    require(row.size() == m.size(), ErrorCode::DimensionMismatch,
            std::string(who) + ": matrix is not square");
}

void check_skew(const IMat& b, const char* who) {
  check_square(b, who);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      require(b[i][j] == -b[j][i], ErrorCode::NotSkewSymmetric,
              std::string(who) + ": exchange matrix is not skew-symmetric");
}

void check_index(int k, std::size_t n, const char* who) {
  require(k >= 0 && static_cast<std::size_t>(k) < n, ErrorCode::IndexOutOfRange,
          std::string(who) + ": vertex index out of range");
}

/** Uniform sign of a row: +1 / -1, 0 for the zero row; mixed signs throw. */
int row_sign(const IVec& row, const char* who) {
  int s = 0;
  for (const Int& x : row) {
    const int t = sign_of(x);
    if (t == 0) continue;
    if (s == 0)
      s = t;
    else
      require(s == t, ErrorCode::SignCoherenceBroken,
              std::string(who) + ": row carries mixed signs");
  }
  return s;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  IMat r(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IMat imat_transpose(const IMat& m) {
  const std::size_t n = m.size();
  IMat r(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[j][i] = m[i][j];
  return r;
}

/** One seed mutation without the postcondition checks (used to assert
 *  involutivity without recursing). */
Seed raw_mutate_seed(const Seed& s, int k) {
  const std::size_t n = s.b.size();
  const std::size_t ku = static_cast<std::size_t>(k);
  const int eps = row_sign(s.c[ku], "seed mutation");
  require(eps != 0, ErrorCode::SignCoherenceBroken,
          "seed mutation: pivot c-vector is zero");

  Seed out;
  out.b = mutate_b(s.b, k);
  out.g = s.g;
  IVec row = scale(-1, s.g[ku]);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == ku) continue;
    const Int coef = pos_part(Int(eps) * s.b[j][ku]);
    if (coef != 0) row = add(row, scale(coef, s.g[j]));
  }
  out.g[ku] = row;

  out.c = s.c;
  out.c[ku] = scale(-1, s.c[ku]);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == ku) continue;
    const Int coef = pos_part(Int(-eps) * s.b[ku][j]);
    if (coef != 0) out.c[j] = add(out.c[j], scale(coef, s.c[ku]));
  }

  out.history = s.history;
  out.history.push_back(k);
  return out;
}

IMat sorted_rows(IMat m) {
  std::sort(m.begin(), m.end());
  return m;
}

Int max_abs_entry(const IMat& m) {
  Int best = 0;
  for (const IVec& row : m)
    for (const Int& x : row) {
      const Int a = x < 0 ? -x : x;
      if (a > best) best = a;
    }
  return best;
}

/** Bron–Kerbosch enumeration of maximal cliques of an undirected graph. */
void maximal_cliques(const std::vector<std::vector<char>>& adj,
                     std::vector<int>& r, std::vector<int> p,
                     std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const int v = p.back();
    r.push_back(v);
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (adj[v][u]) x2.push_back(u);
    maximal_cliques(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.pop_back();
    x.push_back(v);
  }
}

}  // namespace

Seed initial_seed(const IMat& b) {
  check_skew(b, "initial seed");
  const std::size_t n = b.size();
  Seed s;
  s.b = b;
  s.g = IMat(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) s.g[i][i] = -1;
  s.c = s.g;
  return s;
}

IMat mutate_b(const IMat& b, int k) {
  check_skew(b, "exchange mutation");
  check_index(k, b.size(), "exchange mutation");
  const std::size_t n = b.size();
  const std::size_t ku = static_cast<std::size_t>(k);
  IMat r(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == ku || j == ku)
        r[i][j] = -b[i][j];
      else
        r[i][j] = b[i][j] + Int(sign_of(b[i][ku])) * pos_part(b[i][ku] * b[ku][j]);
    }
  return r;
}

Seed mutate_seed(const Seed& s, int k) {
  check_skew(s.b, "seed mutation");
  const std::size_t n = s.b.size();
  require(s.g.size() == n && s.c.size() == n, ErrorCode::DimensionMismatch,
          "seed mutation: G and C must match the exchange matrix");
  for (std::size_t i = 0; i < n; ++i)
    require(s.g[i].size() == n && s.c[i].size() == n,
            ErrorCode::DimensionMismatch,
            "seed mutation: G and C must be square");
  check_index(k, n, "seed mutation");

  Seed out = raw_mutate_seed(s, k);

  // Postconditions: exact duality (which forces det = ±1), sign coherence,
  // and involutivity of the step.
  IMat idm(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) idm[i][i] = 1;
  require(imat_mul(out.c, imat_transpose(out.g)) == idm,
          ErrorCode::NotUnimodular, "seed mutation: C·Gᵀ duality failed");
  for (const IVec& row : out.c) row_sign(row, "seed mutation");
  Seed back = raw_mutate_seed(out, k);
  require(back.b == s.b && back.g == s.g && back.c == s.c,
          ErrorCode::DimensionMismatch, "seed mutation is not involutive");
  return out;
}

IMat dual_c_vectors(const IMat& g) {
  check_square(g, "dual c-vectors");
  const std::size_t n = g.size();
  const Rat d = idet(g);
  require(d == Rat(1) || d == Rat(-1), ErrorCode::NotUnimodular,
          "dual c-vectors: weight matrix is not unimodular");
  const auto inv = inverse(from_integers<Rat>(g));
  IMat c(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = (*inv)(j, i);
      require(denominator(v) == 1, ErrorCode::NonIntegralResult,
              "dual c-vectors: inverse is not integral");
      c[i][j] = numerator(v).convert_to<Int>();
    }
  for (const IVec& row : c) row_sign(row, "dual c-vectors");
  return c;
}

IVec mutate_weight(const IMat& b, const IVec& delta, int u) {
  check_skew(b, "weight mutation");
  require(delta.size() == b.size(), ErrorCode::DimensionMismatch,
          "weight mutation: weight length mismatch");
  check_index(u, b.size(), "weight mutation");
  const std::size_t uu = static_cast<std::size_t>(u);
  const int s = sign_of(delta[uu]);
  IVec out = delta;
  out[uu] = -delta[uu];
  if (s != 0)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j == uu) continue;
      out[j] += pos_part(Int(-s) * b[j][uu]) * delta[uu];
    }
  return out;
}

IVec mutate_dual_weight(const IMat& b, const IVec& deltaCheck, int u) {
  check_skew(b, "dual weight mutation");
  require(deltaCheck.size() == b.size(), ErrorCode::DimensionMismatch,
          "dual weight mutation: weight length mismatch");
  check_index(u, b.size(), "dual weight mutation");
  const std::size_t uu = static_cast<std::size_t>(u);
  const int s = sign_of(deltaCheck[uu]);
  IVec out = deltaCheck;
  out[uu] = -deltaCheck[uu];
  if (s != 0)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j == uu) continue;
      out[j] += pos_part(Int(s) * b[j][uu]) * deltaCheck[uu];
    }
  return out;
}

IVec vertex_recovery(const IMat& g, const IVec& h) {
  check_square(g, "vertex recovery");
  const std::size_t n = g.size();
  require(h.size() == n, ErrorCode::DimensionMismatch,
          "vertex recovery: evaluation vector length mismatch");
  const Rat d = idet(g);
  require(d == Rat(1) || d == Rat(-1), ErrorCode::NotUnimodular,
          "vertex recovery: weight matrix is not unimodular");
  Matrix<Rat> rhs(n, 1);
  for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = Rat(h[i]);
  const auto sol = solve(from_integers<Rat>(g), rhs);
  IVec x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Rat& v = (*sol)(i, 0);
    require(denominator(v) == 1, ErrorCode::NonIntegralResult,
            "vertex recovery: solution is not integral");
    x[i] = numerator(v).convert_to<Int>();
  }
  return x;
}

std::vector<ClusterRecord> cluster_search(const IMat& b, int maxDepth,
                                          Int normBound) {
  const Seed start = initial_seed(b);
  const int n = static_cast<int>(b.size());
  std::map<IMat, std::vector<int>> seen;
  seen.emplace(sorted_rows(start.g), start.history);
  std::deque<Seed> frontier{start};
  while (!frontier.empty()) {
    Seed cur = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(cur.history.size()) >= maxDepth) continue;
    for (int k = 0; k < n; ++k) {
      Seed child = mutate_seed(cur, k);
      if (max_abs_entry(child.g) > normBound) continue;
      IMat canon = sorted_rows(child.g);
      if (seen.emplace(std::move(canon), child.history).second)
        frontier.push_back(std::move(child));
    }
  }
  std::vector<ClusterRecord> out;
  out.reserve(seen.size());
  for (auto& [rows, witness] : seen) out.push_back({rows, witness});
  return out;
}

Polytope generic_newton_via_clusters(
    const std::function<Int(const IVec&)>& homFn, const IMat& b, int maxDepth,
    Int normBound) {
  const std::vector<ClusterRecord> clusters =
      cluster_search(b, maxDepth, normBound);
  const std::size_t n = b.size();
  std::vector<IVec> candidates;
  candidates.reserve(clusters.size());
  for (const ClusterRecord& rec : clusters) {
    IVec h(n, 0);
    for (std::size_t i = 0; i < n; ++i) h[i] = homFn(rec.rows[i]);
    candidates.push_back(vertex_recovery(rec.rows, h));
  }
  const Polytope hull = convex_hull(candidates);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (const IVec& delta : clusters[c].rows)
      require(support_value(hull, delta) == dot(delta, candidates[c]),
              ErrorCode::VertexNotInP,
              "cluster candidate fails to maximize its weight on the hull");
  return hull;
}

TropicalLedger tropical_transport(const TropicalLedger& ledger, int u) {
  require(!ledger.b.empty(), ErrorCode::LedgerIncomplete,
          "tropical transport: ledger has no exchange matrix");
  const std::size_t n = ledger.b.size();
  require(ledger.delta.size() == n && ledger.deltaCheck.size() == n,
          ErrorCode::LedgerIncomplete,
          "tropical transport: ledger weights must match the exchange matrix");
  check_index(u, n, "tropical transport");
  const std::size_t uu = static_cast<std::size_t>(u);
  TropicalLedger out;
  out.b = mutate_b(ledger.b, u);
  out.delta = mutate_weight(ledger.b, ledger.delta, u);
  out.deltaCheck = mutate_dual_weight(ledger.b, ledger.deltaCheck, u);
  out.value = ledger.value + pos_part(out.delta[uu]) * pos_part(out.deltaCheck[uu]) -
              pos_part(ledger.delta[uu]) * pos_part(ledger.deltaCheck[uu]);
  return out;
}

std::vector<IVec> rigid_weight_box(const AlgebraBasis& alg, Int bound,
                                   Rng& rng, const SampleInfo& info) {
  require(bound > 0, ErrorCode::EmptyInput, "rigid weights: bound must be positive");
  const int n = alg.n();
  std::vector<IVec> out;
  IVec delta(static_cast<std::size_t>(n), -bound);
  for (;;) {
    if (!is_zero(delta) && content(delta) == 1 &&
        is_rigid_weight(alg, delta, rng, info))
      out.push_back(delta);
    std::size_t i = 0;
    while (i < delta.size() && delta[i] == bound) delta[i++] = -bound;
    if (i == delta.size()) break;
    ++delta[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClusterRecord> rigid_clusters(const AlgebraBasis& alg, Int bound,
                                          Rng& rng, const SampleInfo& info) {
  const std::vector<IVec> weights = rigid_weight_box(alg, bound, rng, info);
  const int m = static_cast<int>(weights.size());
  std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const bool ok = generic_e(alg, weights[i], weights[j], rng, info) == 0 &&
                      generic_e(alg, weights[j], weights[i], rng, info) == 0;
      compat[i][j] = compat[j][i] = ok ? 1 : 0;
    }

  // Keep only indecomposable weights: drop any weight that splits as a sum
  // of two compatible rigid weights from the same box.
  std::map<IVec, int> index;
  for (int i = 0; i < m; ++i) index.emplace(weights[i], i);
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    bool splits = false;
    for (int a = 0; a < m && !splits; ++a) {
      if (a == i) continue;
      const auto it = index.find(sub(weights[i], weights[a]));
      if (it != index.end() && it->second != i && compat[a][it->second])
        splits = true;
    }
    if (!splits) keep.push_back(i);
  }

  std::vector<std::vector<char>> adj(keep.size(),
                                     std::vector<char>(keep.size(), 0));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      adj[i][j] = compat[keep[i]][keep[j]];
  std::vector<int> all(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  maximal_cliques(adj, r, all, {}, cliques);

  const std::size_t n = static_cast<std::size_t>(alg.n());
  std::vector<ClusterRecord> out;
  for (const std::vector<int>& clique : cliques) {
    if (clique.size() != n) continue;
    IMat rows;
    rows.reserve(n);
    for (int v : clique) rows.push_back(weights[keep[v]]);
    std::sort(rows.begin(), rows.end());
    const Rat d = idet(rows);
    if (d != Rat(1) && d != Rat(-1)) continue;
    out.push_back({std::move(rows), {}});
  }
  std::sort(out.begin(), out.end(),
            [](const ClusterRecord& a, const ClusterRecord& b) {
              return a.rows < b.rows;
            });
  return out;
}

ExchangeGraph exchange_quiver(const AlgebraBasis& alg,
                              const std::vector<ClusterRecord>& clusters,
                              Rng& rng, const SampleInfo& info) {
  require(!clusters.empty(), ErrorCode::EmptyInput,
          "exchange quiver: no clusters given");
  const std::size_t n = static_cast<std::size_t>(alg.n());
  ExchangeGraph graph;
  graph.nodes.reserve(clusters.size());
  for (const ClusterRecord& rec : clusters) {
    require(rec.rows.size() == n, ErrorCode::DimensionMismatch,
            "exchange quiver: cluster size must match the vertex count");
    graph.nodes.push_back(sorted_rows(rec.rows));
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < graph.nodes.size(); ++j) {
      IMat shared;
      std::set_intersection(graph.nodes[i].begin(), graph.nodes[i].end(),
                            graph.nodes[j].begin(), graph.nodes[j].end(),
                            std::back_inserter(shared));
      if (shared.size() != n - 1) continue;
      IMat onlyI, onlyJ;
      std::set_difference(graph.nodes[i].begin(), graph.nodes[i].end(),
                          graph.nodes[j].begin(), graph.nodes[j].end(),
                          std::back_inserter(onlyI));
      std::set_difference(graph.nodes[j].begin(), graph.nodes[j].end(),
                          graph.nodes[i].begin(), graph.nodes[i].end(),
                          std::back_inserter(onlyJ));
      const IVec& di = onlyI.front();
      const IVec& dj = onlyJ.front();
      const Int eij = generic_e(alg, di, dj, rng, info);
      const Int eji = generic_e(alg, dj, di, rng, info);
      if (eij > 0 && eji == 0)
        graph.arrows.emplace_back(static_cast<int>(i), static_cast<int>(j));
      else if (eji > 0 && eij == 0)
        graph.arrows.emplace_back(static_cast<int>(j), static_cast<int>(i));
      else
        require(false, ErrorCode::OrientationUndecided,
                "exchange quiver: adjacent pair does not orient");
    }
  return graph;
}

}  // namespace qtrop
