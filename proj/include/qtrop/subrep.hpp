#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qtrop/polytope.hpp"
#include "qtrop/representation.hpp"

namespace qtrop {

/** Gaussian binomial [d choose k]_q: the number of k-dimensional subspaces
 *  of F_q^d. */
inline BigInt subspace_count(int d, int k, Int q) {
  require(0 <= k && k <= d, ErrorCode::IndexOutOfRange, "subspace_count");
  BigInt num = 1, den = 1, qq = q;
  for (int i = 1; i <= k; ++i) {
    num *= pow(qq, static_cast<unsigned>(d - k + i)) - 1;
    den *= pow(qq, static_cast<unsigned>(i)) - 1;
  }
  return num / den;
}

/** Total number of subspaces of F_q^d, all dimensions. */
inline BigInt total_subspace_count(int d, Int q) {
  BigInt s = 0;
  for (int k = 0; k <= d; ++k) s += subspace_count(d, k, q);
  return s;
}

/**
 * All k-dimensional subspaces of F_P^d, each as a d x k column-span matrix
 * (the transpose of a reduced row echelon matrix), in a fixed deterministic
 * order.
 */
template <long long P>
std::vector<Matrix<Fp<P>>> subspaces_of_dim(int d, int k) {
  std::vector<Matrix<Fp<P>>> out;
  if (k == 0) {
    out.emplace_back(d, 0);
    return out;
  }
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  for (;;) {
    // Free positions: row i, columns right of pivots[i] that are not pivots.
    std::vector<std::pair<int, int>> freePos;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[i] + 1; j < d; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
          freePos.emplace_back(i, j);
    std::vector<Int> vals(freePos.size(), 0);
    for (;;) {
      Matrix<Fp<P>> rrefMat(k, d);
      for (int i = 0; i < k; ++i) rrefMat(i, pivots[i]) = Fp<P>(1);
      for (std::size_t t = 0; t < freePos.size(); ++t)
        rrefMat(freePos[t].first, freePos[t].second) = Fp<P>(vals[t]);
      out.push_back(rrefMat.transpose());
      // Next free-value assignment.
      std::size_t t = 0;
      while (t < vals.size() && vals[t] == P - 1) vals[t++] = 0;
      if (t == vals.size()) break;
      ++vals[t];
    }
    // Next pivot combination.
    int i = k - 1;
    while (i >= 0 && pivots[i] == d - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

template <long long P>
std::vector<Matrix<Fp<P>>> all_subspaces(int d) {
  std::vector<Matrix<Fp<P>>> out;
  for (int k = 0; k <= d; ++k) {
    auto part = subspaces_of_dim<P>(d, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/** The dimension vectors of all subrepresentations, with multiplicities. */
struct SubrepLattice {
  IVec moduleDims;
  IMat dims;                // sorted, unique
  std::vector<Int> counts;  // number of subrepresentations per dim vector
};

inline constexpr Int kDefaultSubrepBudget = 10'000'000;

/**
 * Enumerates every subrepresentation of m by exhausting subspace tuples and
 * filtering arrow invariance. Throws BudgetExceeded when the number of
 * subspace tuples would exceed the budget.
 */
template <long long P>
SubrepLattice subrep_lattice(const Rep<Fp<P>>& m,
                             Int budget = kDefaultSubrepBudget) {
  const int n = m.n();
  BigInt work = 1;
  for (int v = 0; v < n; ++v)
    work *= total_subspace_count(static_cast<int>(m.dims[v]), P);
  require(work <= budget, ErrorCode::BudgetExceeded,
          "subrep_lattice: " + work.str() + " subspace tuples exceed budget " +
              std::to_string(budget));

  std::vector<std::vector<Matrix<Fp<P>>>> choices;
  for (int v = 0; v < n; ++v)
    choices.push_back(all_subspaces<P>(static_cast<int>(m.dims[v])));

  // Arrows grouped by the larger endpoint, checked as soon as possible.
  const Quiver& q = m.alg->quiver();
  std::vector<std::vector<int>> arrowsAt(n);
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    arrowsAt[std::max(q.arrows[a].source, q.arrows[a].target)].push_back(
        static_cast<int>(a));

  std::map<IVec, Int> tally;
  std::vector<const Matrix<Fp<P>>*> pick(n, nullptr);
  auto invariant = [&](int a) {
    int u = q.arrows[a].source, v = q.arrows[a].target;
    Matrix<Fp<P>> image = m.mats[a] * (*pick[u]);
    return in_column_space(*pick[v], image);
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      IVec g(n);
      for (int i = 0; i < n; ++i) g[i] = static_cast<Int>(pick[i]->cols());
      ++tally[g];
      return;
    }
    for (const auto& s : choices[v]) {
      pick[v] = &s;
      bool ok = true;
      for (int a : arrowsAt[v])
        if (!invariant(a)) {
          ok = false;
          break;
        }
      if (ok) self(self, v + 1);
    }
    pick[v] = nullptr;
  };
  rec(rec, 0);

  SubrepLattice out;
  out.moduleDims = m.dims;
  for (const auto& [g, c] : tally) {
    out.dims.push_back(g);
    out.counts.push_back(c);
  }
  return out;
}

/** f_M(delta) = max over subrepresentation dimension vectors of delta · dim. */
inline Int tropical_f(const SubrepLattice& lat, const IVec& delta) {
  require(!lat.dims.empty(), ErrorCode::EmptyInput, "tropical_f: no dims");
  Int best = dot(delta, lat.dims[0]);
  for (const IVec& g : lat.dims) best = std::max(best, dot(delta, g));
  return best;
}

/** Dual tropical value: max over quotient dimension vectors. */
inline Int tropical_f_dual(const SubrepLattice& lat, const IVec& dcheck) {
  require(!lat.dims.empty(), ErrorCode::EmptyInput, "tropical_f_dual");
  Int best = dot(dcheck, sub(lat.moduleDims, lat.dims[0]));
  for (const IVec& g : lat.dims)
    best = std::max(best, dot(dcheck, sub(lat.moduleDims, g)));
  return best;
}

/** Newton polytope: convex hull of the subrepresentation dimension vectors. */
inline Polytope newton_polytope(const SubrepLattice& lat) {
  return convex_hull(lat.dims);
}

/** Dual Newton polytope: hull of the quotient dimension vectors. */
inline Polytope newton_polytope_dual(const SubrepLattice& lat) {
  IMat qdims;
  for (const IVec& g : lat.dims) qdims.push_back(sub(lat.moduleDims, g));
  return convex_hull(qdims);
}

/**
 * The componentwise-smallest and -largest maximizers of delta over the
 * lattice. For genuine subrepresentation lattices both exist; otherwise
 * UniquenessViolated is thrown.
 */
inline std::pair<IVec, IVec> minmax_subrep(const SubrepLattice& lat,
                                           const IVec& delta) {
  Int best = tropical_f(lat, delta);
  IMat arg;
  for (const IVec& g : lat.dims)
    if (dot(delta, g) == best) arg.push_back(g);
  const IVec* mn = nullptr;
  const IVec* mx = nullptr;
  for (const IVec& cand : arg) {
    bool isMin = true, isMax = true;
    for (const IVec& other : arg) {
      if (!leq(cand, other)) isMin = false;
      if (!leq(other, cand)) isMax = false;
    }
    if (isMin) mn = &cand;
    if (isMax) mx = &cand;
  }
  require(mn != nullptr && mx != nullptr, ErrorCode::UniquenessViolated,
          "minmax_subrep: maximizers have no componentwise extremes");
  return {*mn, *mx};
}

/** King semistability: delta vanishes on dim M and is nonpositive on every
 *  subrepresentation. */
inline bool is_semistable(const SubrepLattice& lat, const IVec& delta) {
  if (dot(delta, lat.moduleDims) != 0) return false;
  for (const IVec& g : lat.dims)
    if (dot(delta, g) > 0) return false;
  return true;
}

/** King stability: strict negativity on proper nonzero subrepresentations. */
inline bool is_stable(const SubrepLattice& lat, const IVec& delta) {
  if (dot(delta, lat.moduleDims) != 0) return false;
  for (const IVec& g : lat.dims) {
    if (is_zero(g) || g == lat.moduleDims) continue;
    if (dot(delta, g) >= 0) return false;
  }
  return true;
}

}  // namespace qtrop
