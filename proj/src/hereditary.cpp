#include "qtrop/hereditary.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qtrop/error.hpp"
#include "qtrop/representation.hpp"

namespace qtrop {

namespace {

/** Odometer over the integer box 0 <= v <= hi (componentwise); returns false
 *  after the last point. Starts from the zero vector supplied by the caller. */
bool next_point(IVec& v, const IVec& hi) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < hi[k]) {
      ++v[k];
      for (std::size_t j = 0; j < k; ++j) v[j] = 0;
      return true;
    }
  }
  return false;
}

Int form(const IMat& e, const IVec& x, const IVec& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * e[i][j] * y[j];
  }
  return s;
}

bool nonnegative(const IVec& v) {
  for (Int x : v)
    if (x < 0) return false;
  return true;
}

}  // namespace

GenericExtTable::GenericExtTable(const Quiver& quiver) : quiver_(quiver) {
  quiver_.validate();
  require(!quiver_.has_cycle(), ErrorCode::NotAcyclic,
          "generic ext table: quiver has an oriented cycle");
  euler_ = euler_matrix(quiver_);
}

void GenericExtTable::check_dims(const IVec& v, const char* who) const {
  require(v.size() == static_cast<std::size_t>(quiver_.n),
          ErrorCode::DimensionMismatch,
          std::string(who) + ": vector length does not match the quiver");
  require(nonnegative(v), ErrorCode::DimensionMismatch,
          std::string(who) + ": dimension vector has a negative entry");
}

Int GenericExtTable::ext(const IVec& alpha, const IVec& beta) {
  check_dims(alpha, "ext");
  check_dims(beta, "ext");
  if (is_zero(alpha) || is_zero(beta)) return 0;
  const auto key = std::make_pair(alpha, beta);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Subrepresentation side: maximize -<alpha', beta> over the generic
  // subdimension vectors alpha' of alpha. alpha' = 0 contributes 0.
  Int subSide = 0;
  IVec p(alpha.size(), 0);
  do {
    if (subrep(p, alpha)) subSide = std::max(subSide, -form(euler_, p, beta));
  } while (next_point(p, alpha));

  // Quotient side: beta'' is a generic quotient vector of beta iff
  // beta - beta'' embeds generically, i.e. ext(beta - beta'', beta'') = 0.
  Int quotSide = 0;
  std::fill(p.begin(), p.end(), 0);
  p.resize(beta.size(), 0);
  do {
    IVec rest = sub(beta, p);
    if (subrep(rest, beta))
      quotSide = std::max(quotSide, -form(euler_, alpha, p));
  } while (next_point(p, beta));

  require(subSide == quotSide, ErrorCode::DimensionMismatch,
          "generic ext: subrepresentation and quotient maxima disagree");
  memo_[key] = subSide;
  return subSide;
}

Int GenericExtTable::hom(const IVec& alpha, const IVec& beta) {
  return form(euler_, alpha, beta) + ext(alpha, beta);
}

bool GenericExtTable::subrep(const IVec& gamma, const IVec& alpha) {
  check_dims(gamma, "subrep");
  check_dims(alpha, "subrep");
  for (std::size_t v = 0; v < gamma.size(); ++v)
    if (gamma[v] > alpha[v]) return false;
  return ext(gamma, sub(alpha, gamma)) == 0;
}

const Polytope& GenericExtTable::newton(const IVec& alpha) {
  check_dims(alpha, "newton");
  if (auto it = newtonCache_.find(alpha); it != newtonCache_.end())
    return it->second;
  IMat points;
  IVec g(alpha.size(), 0);
  do {
    if (subrep(g, alpha)) points.push_back(g);
  } while (next_point(g, alpha));
  return newtonCache_.emplace(alpha, convex_hull(points)).first->second;
}

const std::vector<IVec>& GenericExtTable::canonical_decomposition(
    const IVec& alpha) {
  check_dims(alpha, "canonical_decomposition");
  if (auto it = decompCache_.find(alpha); it != decompCache_.end())
    return it->second;
  std::vector<IVec> out;
  if (!is_zero(alpha)) {
    bool split = false;
    IVec g(alpha.size(), 0);
    while (next_point(g, alpha) && !split) {
      if (g == alpha) break;
      IVec rest = sub(alpha, g);
      if (ext(g, rest) == 0 && ext(rest, g) == 0) {
        // The general representation splits with these summand dimensions;
        // refine both halves.
        out = canonical_decomposition(g);
        const std::vector<IVec>& right = canonical_decomposition(rest);
        out.insert(out.end(), right.begin(), right.end());
        split = true;
      }
    }
    if (!split) out = {alpha};
    std::sort(out.begin(), out.end());
  }
  return decompCache_.emplace(alpha, std::move(out)).first->second;
}

bool GenericExtTable::is_schur_root(const IVec& alpha) {
  return !is_zero(alpha) && canonical_decomposition(alpha).size() == 1;
}

bool GenericExtTable::strongly_perp(const IVec& gamma, const IVec& beta) {
  check_dims(gamma, "strongly_perp");
  check_dims(beta, "strongly_perp");
  const auto key = std::make_pair(gamma, beta);
  if (auto it = perpCache_.find(key); it != perpCache_.end())
    return it->second;
  bool ok = ext(gamma, beta) == 0 && hom(gamma, beta) == 0;
  if (ok) {
    const Polytope& n = newton(add(gamma, beta));
    ok = std::binary_search(n.vertices.begin(), n.vertices.end(), gamma);
  }
  perpCache_[key] = ok;
  return ok;
}

namespace {

struct SequenceSearch {
  GenericExtTable& table;
  Int budget;
  Int work = 0;
  std::vector<Int> coeffs{};
  IMat roots{};
  std::vector<SchurSequence> found{};

  void run(const IVec& remaining) {
    if (is_zero(remaining)) {
      // Multiplicity above one is only decided for real roots; an isotropic
      // root reaching a completed sequence with a higher coefficient is
      // outside the supported class.
      for (std::size_t i = 0; i < roots.size(); ++i)
        require(coeffs[i] == 1 ||
                    euler_form(table.quiver(), roots[i], roots[i]) != 0,
                ErrorCode::NonAdmissible,
                "schur_sequences: isotropic root with multiplicity above one");
      found.push_back({coeffs, roots});
      return;
    }
    IVec beta(remaining.size(), 0);
    while (next_point(beta, remaining)) {
      ++work;
      require(work <= budget, ErrorCode::BudgetExceeded,
              "schur_sequences: candidate budget exceeded");
      if (!table.is_schur_root(beta)) continue;
      bool perp = true;
      for (const IVec& prev : roots)
        if (!table.strongly_perp(prev, beta)) {
          perp = false;
          break;
        }
      if (!perp) continue;
      // Multiplicities above 1 are reserved for real or isotropic roots.
      const Int q = euler_form(table.quiver(), beta, beta);
      Int cmax = 1;
      if (q == 1 || q == 0) {
        cmax = 0;
        for (std::size_t v = 0; v < beta.size(); ++v)
          if (beta[v] > 0)
            cmax = cmax == 0 ? remaining[v] / beta[v]
                             : std::min(cmax, remaining[v] / beta[v]);
      }
      for (Int c = 1; c <= cmax; ++c) {
        coeffs.push_back(c);
        roots.push_back(beta);
        run(sub(remaining, scale(c, beta)));
        coeffs.pop_back();
        roots.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<SchurSequence> schur_sequences(GenericExtTable& table,
                                           const IVec& alpha, Int budget) {
  require(!is_zero(alpha), ErrorCode::EmptyInput,
          "schur_sequences: zero dimension vector");
  SequenceSearch search{table, budget};
  search.run(alpha);
  return search.found;
}

namespace {

/** Factors an edge difference as c copies of one Schur root via its
 *  canonical decomposition; homogeneity is guaranteed for edges of generic
 *  Newton polytopes and enforced here. */
std::pair<Int, IVec> edge_factor(GenericExtTable& table, const IVec& diff) {
  const std::vector<IVec>& parts = table.canonical_decomposition(diff);
  require(!parts.empty(), ErrorCode::UniquenessViolated,
          "edge factor: empty difference");
  for (const IVec& p : parts)
    require(p == parts.front(), ErrorCode::UniquenessViolated,
            "edge factor: canonical decomposition is not homogeneous");
  const Int c = static_cast<Int>(parts.size());
  if (c > 1) {
    const Int q = euler_form(table.quiver(), parts.front(), parts.front());
    require(q != 0, ErrorCode::NonAdmissible,
            "edge factor: isotropic root with multiplicity above one");
    require(q == 1, ErrorCode::UniquenessViolated,
            "edge factor: repeated root is not real");
  }
  return {c, parts.front()};
}

}  // namespace

PathsBijection maximal_paths_bijection(GenericExtTable& table,
                                       const IVec& alpha, Int budget) {
  require(!is_zero(alpha), ErrorCode::EmptyInput,
          "maximal_paths_bijection: zero dimension vector");
  PathsBijection r;
  r.newton = table.newton(alpha);
  r.edges = edge_quiver(r.newton);

  const int nv = static_cast<int>(r.edges.vertices.size());
  std::vector<std::vector<int>> out(nv);
  std::vector<int> indeg(nv, 0);
  for (const auto& [from, to] : r.edges.edges) {
    out[from].push_back(to);
    ++indeg[to];
  }

  // Depth-first enumeration of maximal paths: start at every source, stop at
  // every sink. The edge orientation is componentwise <=, so the graph is
  // acyclic and the recursion terminates.
  Int work = 0;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int v) -> void {
    ++work;
    require(work <= budget, ErrorCode::BudgetExceeded,
            "maximal_paths_bijection: path budget exceeded");
    stack.push_back(v);
    if (out[v].empty()) {
      r.paths.push_back(stack);
    } else {
      for (int w : out[v]) self(self, w);
    }
    stack.pop_back();
  };
  for (int v = 0; v < nv; ++v)
    if (indeg[v] == 0) dfs(dfs, v);

  for (const auto& path : r.paths) {
    SchurSequence seq;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      IVec diff =
          sub(r.edges.vertices[path[k + 1]], r.edges.vertices[path[k]]);
      auto [c, beta] = edge_factor(table, diff);
      seq.coeffs.push_back(c);
      seq.roots.push_back(beta);
    }
    r.pathFactors.push_back(std::move(seq));
  }

  r.sequences = schur_sequences(table, alpha, budget);

  // Match each path's factor sequence against the independent enumeration.
  std::vector<bool> used(r.sequences.size(), false);
  r.match.assign(r.pathFactors.size(), -1);
  bool ok = r.pathFactors.size() == r.sequences.size();
  for (std::size_t i = 0; i < r.pathFactors.size(); ++i) {
    for (std::size_t j = 0; j < r.sequences.size(); ++j) {
      if (used[j] || !(r.pathFactors[i] == r.sequences[j])) continue;
      r.match[i] = static_cast<int>(j);
      used[j] = true;
      break;
    }
    if (r.match[i] < 0) ok = false;
  }
  r.bijective = ok;
  return r;
}

IVec dual_weight(const Quiver& quiver, const IVec& alpha) {
  require(!quiver.has_cycle(), ErrorCode::NotAcyclic,
          "dual_weight: quiver has an oriented cycle");
  require(alpha.size() == static_cast<std::size_t>(quiver.n),
          ErrorCode::DimensionMismatch, "dual_weight: vector length");
  IMat e = euler_matrix(quiver);
  IVec d(quiver.n, 0);
  for (int v = 0; v < quiver.n; ++v)
    for (int w = 0; w < quiver.n; ++w) d[v] += e[v][w] * alpha[w];
  return d;
}

IVec injective_kernel_dims(const Quiver& quiver, const IVec& deltaCheck) {
  require(!quiver.has_cycle(), ErrorCode::NotAcyclic,
          "injective_kernel_dims: quiver has an oriented cycle");
  require(deltaCheck.size() == static_cast<std::size_t>(quiver.n),
          ErrorCode::DimensionMismatch, "injective_kernel_dims: length");
  IMat e = euler_matrix(quiver);
  QMat a(quiver.n, quiver.n);
  QMat b(quiver.n, 1);
  for (int i = 0; i < quiver.n; ++i) {
    b(i, 0) = Rat(deltaCheck[i]);
    for (int j = 0; j < quiver.n; ++j) a(i, j) = Rat(e[i][j]);
  }
  auto x = solve(a, b);
  require(x.has_value(), ErrorCode::NonIntegralResult,
          "injective_kernel_dims: Euler system inconsistent");
  IVec alpha(quiver.n, 0);
  for (int i = 0; i < quiver.n; ++i) {
    const Rat& c = (*x)(i, 0);
    require(denominator(c) == 1, ErrorCode::NonIntegralResult,
            "injective_kernel_dims: non-integral solution");
    alpha[i] = numerator(c).convert_to<Int>();
  }
  return alpha;
}

FgPairing fg_pairing_acyclic(GenericExtTable& table, const AlgebraBasis& alg,
                             const IVec& a, const Weight& deltaCheck,
                             const IMat& b, Rng& rng, const SampleInfo& info) {
  const Quiver& quiver = table.quiver();
  const int n = quiver.n;
  require(alg.is_acyclic() && alg.n() == n, ErrorCode::NotAcyclic,
          "fg_pairing: algebra does not match an acyclic quiver");
  require(deltaCheck.role == Weight::Role::Injective,
          ErrorCode::DimensionMismatch, "fg_pairing: expected an injective weight");
  require(a.size() == static_cast<std::size_t>(n) &&
              deltaCheck.entries.size() == static_cast<std::size_t>(n),
          ErrorCode::DimensionMismatch, "fg_pairing: vector length");
  require(b.size() == static_cast<std::size_t>(n), ErrorCode::NotSkewSymmetric,
          "fg_pairing: matrix size");
  for (int i = 0; i < n; ++i) {
    require(b[i].size() == static_cast<std::size_t>(n),
            ErrorCode::NotSkewSymmetric, "fg_pairing: matrix size");
    for (int j = 0; j < n; ++j)
      require(b[i][j] == -b[j][i], ErrorCode::NotSkewSymmetric,
              "fg_pairing: matrix is not skew-symmetric");
  }

  FgPairing out;
  out.delta.assign(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.delta[j] += a[i] * b[j][i];

  // The generic kernel of the weight must realize a nonnegative dimension
  // vector; every sampled kernel is checked against the Euler solution.
  IVec alphaCheck = injective_kernel_dims(quiver, deltaCheck.entries);
  require(nonnegative(alphaCheck), ErrorCode::DimensionMismatch,
          "fg_pairing: weight is not the dual weight of a dimension vector");

  Int best = -1;
  for (int s = 0; s < info.samples; ++s) {
    Presentation dc = sample_presentation(alg, deltaCheck, rng, info.coeffBound);
    Rep<Rat> ker = presentation_kernel<Rat>(dc);
    require(ker.dims == alphaCheck, ErrorCode::DimensionMismatch,
            "fg_pairing: sampled kernel dimension disagrees with the Euler "
            "solution");
    Int h = generic_hom_e(alg, proj_weight(out.delta), ker, rng, info).hom;
    if (best < 0 || h < best) best = h;
  }
  out.homSampled = best;
  out.tropical = support_value(table.newton(alphaCheck), out.delta);
  out.value = out.homSampled - dot(a, deltaCheck.entries);
  return out;
}

}  // namespace qtrop
