#include "qtrop/quiver.hpp"

#include <algorithm>
#include <set>

namespace qtrop {

namespace {
// Hard cap on the number of enumerated paths; hitting it means the algebra
// is not going to be finite-dimensional at desk scale.
constexpr std::size_t kPathCap = 500000;
}  // namespace

void Quiver::validate() const {
  require(n >= 1, ErrorCode::EmptyInput, "quiver has no vertices");
  std::set<std::string> labels;
  for (const auto& a : arrows) {
    require(a.source >= 0 && a.source < n && a.target >= 0 && a.target < n,
            ErrorCode::IndexOutOfRange,
            "arrow '" + a.label + "' has an out-of-range endpoint");
    require(!a.label.empty(), ErrorCode::ParseError, "arrow label empty");
    require(labels.insert(a.label).second, ErrorCode::ParseError,
            "duplicate arrow label '" + a.label + "'");
  }
}

bool Quiver::has_cycle() const {
  std::vector<int> color(n, 0);  // 0 = unseen, 1 = active, 2 = done
  std::vector<std::vector<int>> out(n);
  for (const auto& a : arrows) out[a.source].push_back(a.target);
  // Iterative DFS with an explicit stack.
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    color[start] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < out[v].size()) {
        int w = out[v][idx++];
        if (color[w] == 1) return true;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

void PathCombo::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Path, Rat>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  terms.clear();
  for (auto& t : merged)
    if (t.second != 0) terms.push_back(std::move(t));
}

IVec AlgebraBasis::proj_dims(int i) const {
  IVec d(n());
  for (int v = 0; v < n(); ++v) d[v] = static_cast<Int>(paths(i, v).size());
  return d;
}

IVec AlgebraBasis::inj_dims(int i) const {
  IVec d(n());
  for (int v = 0; v < n(); ++v) d[v] = static_cast<Int>(paths(v, i).size());
  return d;
}

std::vector<Rat> AlgebraBasis::reduce_path(const Path& p) const {
  require(p.source >= 0 && p.source < n() && p.target >= 0 && p.target < n(),
          ErrorCode::IndexOutOfRange, "reduce_path: endpoint out of range");
  const auto& basis = surviving_[p.source][p.target];
  std::vector<Rat> coords(basis.size(), Rat(0));
  if (p.length() > static_cast<std::size_t>(rels_.pathLengthBound))
    return coords;  // beyond the bound everything lies in the ideal
  auto it = path_index_[p.source][p.target].find(p.arrows);
  require(it != path_index_[p.source][p.target].end(),
          ErrorCode::IndexOutOfRange, "reduce_path: not a composable path");
  return reduction_[p.source][p.target][it->second];
}

std::vector<Rat> AlgebraBasis::reduce_combo(const PathCombo& c) const {
  const auto& basis = surviving_[c.source][c.target];
  std::vector<Rat> coords(basis.size(), Rat(0));
  for (const auto& [p, coeff] : c.terms) {
    require(p.source == c.source && p.target == c.target,
            ErrorCode::DimensionMismatch, "reduce_combo: endpoints differ");
    std::vector<Rat> pc = reduce_path(p);
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += coeff * pc[k];
  }
  return coords;
}

PathCombo AlgebraBasis::reduce_to_combo(const Path& p) const {
  PathCombo c;
  c.source = p.source;
  c.target = p.target;
  std::vector<Rat> coords = reduce_path(p);
  const auto& basis = surviving_[p.source][p.target];
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coords[k] != 0) c.terms.push_back({basis[k], coords[k]});
  return c;
}

PathCombo AlgebraBasis::multiply_then(const PathCombo& a,
                                      const PathCombo& b) const {
  require(a.target == b.source, ErrorCode::DimensionMismatch,
          "multiply_then: combos not composable");
  PathCombo c;
  c.source = a.source;
  c.target = b.target;
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) {
      PathCombo red = reduce_to_combo(then(pa, pb));
      for (auto& [p, coeff] : red.terms) c.terms.push_back({p, ca * cb * coeff});
    }
  c.normalize();
  return c;
}

AlgebraBasis build_algebra(const Quiver& quiver, const RelationSet& rels) {
  quiver.validate();
  require(rels.pathLengthBound >= 1, ErrorCode::NonAdmissible,
          "pathLengthBound must be positive");
  for (const auto& r : rels.relations) {
    require(!r.terms.empty(), ErrorCode::NonAdmissible, "empty relation");
    for (const auto& [p, coeff] : r.terms) {
      (void)coeff;
      require(p.length() >= 2, ErrorCode::NonAdmissible,
              "relation term of length < 2");
      require(p.source == r.source && p.target == r.target,
              ErrorCode::NonAdmissible, "relation terms not parallel");
    }
  }

  AlgebraBasis ab;
  ab.quiver_ = quiver;
  ab.rels_ = rels;
  ab.acyclic_ = !quiver.has_cycle();
  const int n = quiver.n;
  const std::size_t bound = static_cast<std::size_t>(rels.pathLengthBound);

  // Enumerate composable paths up to the bound, level by level.
  std::vector<std::vector<std::vector<Path>>> all(
      n, std::vector<std::vector<Path>>(n));
  std::vector<Path> level;
  for (int v = 0; v < n; ++v) {
    Path t;
    t.source = t.target = v;
    level.push_back(t);
    all[v][v].push_back(t);
  }
  std::size_t total = static_cast<std::size_t>(n);
  for (std::size_t len = 1; len <= bound && !level.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : level)
      for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai) {
        if (quiver.arrows[ai].source != p.target) continue;
        Path q = p;
        q.arrows.push_back(static_cast<int>(ai));
        q.target = quiver.arrows[ai].target;
        next.push_back(q);
        all[q.source][q.target].push_back(q);
        if (++total > kPathCap) {
          if (rels.relations.empty())
            fail(ErrorCode::CycleWithoutRelations,
                 "path count explodes and there are no relations");
          fail(ErrorCode::NonAdmissible,
               "path count explodes within pathLengthBound");
        }
      }
    level = std::move(next);
  }

  ab.all_paths_.assign(n, std::vector<std::vector<Path>>(n));
  ab.path_index_.assign(
      n, std::vector<std::map<std::vector<int>, int>>(n));
  ab.surviving_.assign(n, std::vector<std::vector<Path>>(n));
  ab.reduction_.assign(n,
                       std::vector<std::vector<std::vector<Rat>>>(n));

  bool survivors_at_bound = false;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      auto& paths = all[s][t];
      std::sort(paths.begin(), paths.end());
      ab.all_paths_[s][t] = paths;
      for (std::size_t k = 0; k < paths.size(); ++k)
        ab.path_index_[s][t][paths[k].arrows] = static_cast<int>(k);

      // Span of the ideal inside k·paths(s,t): rows are embedded relations
      // u·r·v. Columns are ordered longest-path-first so that elimination
      // rewrites long paths in terms of short ones.
      std::vector<std::vector<Rat>> rows;
      for (const auto& r : rels.relations) {
        std::size_t rmax = 0;
        for (const auto& [p, c] : r.terms) {
          (void)c;
          rmax = std::max(rmax, p.length());
        }
        for (const auto& pre : all[s][r.source])
          for (const auto& post : all[r.target][t]) {
            if (pre.length() + rmax + post.length() > bound) continue;
            std::vector<Rat> row(paths.size(), Rat(0));
            for (const auto& [p, c] : r.terms) {
              Path emb = then(then(pre, p), post);
              row[ab.path_index_[s][t][emb.arrows]] += c;
            }
            rows.push_back(std::move(row));
          }
      }

      const std::size_t m = paths.size();
      Matrix<Rat> span(rows.size(), m);
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j)
          span(i, j) = rows[i][m - 1 - j];  // reversed column order
      Rref<Rat> rr = rref(span);
      std::vector<bool> eliminated(m, false);
      for (auto pc : rr.pivots) eliminated[m - 1 - pc] = true;

      std::vector<int> surv_pos(m, -1);
      for (std::size_t k = 0; k < m; ++k)
        if (!eliminated[k]) {
          surv_pos[k] = static_cast<int>(ab.surviving_[s][t].size());
          ab.surviving_[s][t].push_back(paths[k]);
        }
      const std::size_t sdim = ab.surviving_[s][t].size();
      ab.reduction_[s][t].assign(m, std::vector<Rat>(sdim, Rat(0)));
      for (std::size_t k = 0; k < m; ++k) {
        if (!eliminated[k]) {
          ab.reduction_[s][t][k][surv_pos[k]] = Rat(1);
          continue;
        }
        // Find the rref row whose pivot is this path and move the other
        // (surviving) terms across the equality.
        std::size_t revcol = m - 1 - k;
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
          if (rr.pivots[i] != revcol) continue;
          for (std::size_t j = revcol + 1; j < m; ++j) {
            std::size_t orig = m - 1 - j;
            if (eliminated[orig]) continue;  // rref clears pivot columns
            if (rr.mat(i, j) != 0)
              ab.reduction_[s][t][k][surv_pos[orig]] = -rr.mat(i, j);
          }
          break;
        }
      }

      for (std::size_t k = 0; k < m; ++k) {
        if (paths[k].length() != bound) continue;
        bool zero = true;
        for (const auto& c : ab.reduction_[s][t][k]) zero &= (c == 0);
        if (!zero) survivors_at_bound = true;
      }
      ab.dim_ += static_cast<Int>(sdim);
    }

  if (survivors_at_bound) {
    if (!ab.acyclic_ && rels.relations.empty())
      fail(ErrorCode::CycleWithoutRelations,
           "quiver has a cycle and no relations; the algebra is "
           "infinite-dimensional within the bound");
    fail(ErrorCode::NonAdmissible,
         "paths of maximal length do not all reduce to zero");
  }
  return ab;
}

Int euler_form(const Quiver& quiver, const IVec& x, const IVec& y) {
  require(!quiver.has_cycle(), ErrorCode::NotAcyclic,
          "euler_form requires an acyclic quiver");
  require(x.size() == static_cast<std::size_t>(quiver.n) &&
              y.size() == static_cast<std::size_t>(quiver.n),
          ErrorCode::DimensionMismatch, "euler_form: vector length != n");
  Int s = 0;
  for (int v = 0; v < quiver.n; ++v) s += x[v] * y[v];
  for (const auto& a : quiver.arrows) s -= x[a.source] * y[a.target];
  return s;
}

IMat euler_matrix(const Quiver& quiver) {
  IMat e = imat_identity(quiver.n);
  for (const auto& a : quiver.arrows) e[a.source][a.target] -= 1;
  return e;
}

}  // namespace qtrop
