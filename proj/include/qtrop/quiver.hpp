#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtrop/linalg.hpp"
#include "qtrop/rational.hpp"

namespace qtrop {

struct Arrow {
  int source = 0;  // 0-based vertex index
  int target = 0;
  std::string label;
};

/** A finite directed graph with ordered vertices 0..n-1 and labeled arrows. */
struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;

  /** Index of the arrow with the given label, or -1. */
  int arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return static_cast<int>(i);
    return -1;
  }

  Int count_arrows(int u, int v) const {
    Int c = 0;
    for (const auto& a : arrows) c += (a.source == u && a.target == v);
    return c;
  }

  bool has_cycle() const;

  /** Validates vertex ranges and label uniqueness; throws on violation. */
  void validate() const;

  /**
   * Signed adjacency matrix B(u,v) = #arrows(u->v) - #arrows(v->u),
   * the exchange matrix attached to this quiver.
   */
  IMat exchange_matrix() const {
    IMat b(n, IVec(n, 0));
    for (const auto& a : arrows) {
      if (a.source == a.target) continue;
      b[a.source][a.target] += 1;
      b[a.target][a.source] -= 1;
    }
    return b;
  }
};

/**
 * A path, stored as the arrow sequence in application order (first-applied
 * first). The trivial path at v has an empty sequence and source==target==v.
 */
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // arrow indices

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.arrows == b.arrows;
  }
  /** Canonical order: by length, then lexicographically on the sequence. */
  friend bool operator<(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;  // distinguishes trivial paths
  }
};

/** "p then q": applies p first. Requires p.target == q.source. */
inline Path then(const Path& p, const Path& q) {
  require(p.target == q.source, ErrorCode::DimensionMismatch,
          "then: paths not composable");
  Path r;
  r.source = p.source;
  r.target = q.target;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

/**
 * A rational combination of parallel paths (all sharing source/target).
 * The zero combination keeps explicit endpoints.
 */
struct PathCombo {
  int source = 0;
  int target = 0;
  std::vector<std::pair<Path, Rat>> terms;

  bool zero() const { return terms.empty(); }

  /** Sorts terms, merges duplicates, drops zero coefficients. */
  void normalize();
};

/** Relations (each a combination of parallel paths of length >= 2) together
 *  with the length bound that witnesses admissibility. */
struct RelationSet {
  std::vector<PathCombo> relations;
  int pathLengthBound = 12;
};

/**
 * The computed path basis of A = kQ / (relations).
 *
 * For each vertex pair, paths(s, t) lists the reduced ("surviving") paths
 * from s to t; these form a basis of e_t·A·e_s. Projective and injective
 * dimension data and the path-reduction map are derived here and reused by
 * every other component (never re-derived elsewhere):
 *   - P_i has basis paths(i, v) at vertex v; Hom(P_i, M) ≅ M(i).
 *   - I_i(v) is dual to the span of paths(v, i).
 *   - Hom(P_i, P_j) ≅ span of paths(j, i), acting by prepending.
 */
class AlgebraBasis {
 public:
  const Quiver& quiver() const { return quiver_; }
  const RelationSet& relations() const { return rels_; }
  int n() const { return quiver_.n; }
  Int dim() const { return dim_; }
  bool is_acyclic() const { return acyclic_; }

  /** Surviving basis paths from s to t (a basis of e_t·A·e_s). */
  const std::vector<Path>& paths(int s, int t) const {
    return surviving_[s][t];
  }

  /** dim Hom(P_i, P_j) = #paths(j, i). */
  Int dim_hom_pp(int i, int j) const {
    return static_cast<Int>(paths(j, i).size());
  }

  /** Dimension vector of the projective P_i: (#paths i -> v)_v. */
  IVec proj_dims(int i) const;

  /** Dimension vector of the injective I_i: (#paths v -> i)_v. */
  IVec inj_dims(int i) const;

  /**
   * Coordinates of an arbitrary composable path over the surviving basis of
   * its endpoint pair. Paths longer than the length bound reduce to zero.
   */
  std::vector<Rat> reduce_path(const Path& p) const;

  /** Linear extension of reduce_path; combo endpoints fix the basis used. */
  std::vector<Rat> reduce_combo(const PathCombo& c) const;

  /** reduce_path, repackaged as a normalized combination of basis paths. */
  PathCombo reduce_to_combo(const Path& p) const;

  /** Product "a then b" in A (a: u->v, b: v->w), reduced. */
  PathCombo multiply_then(const PathCombo& a, const PathCombo& b) const;

  friend AlgebraBasis build_algebra(const Quiver& quiver,
                                    const RelationSet& rels);

 private:
  Quiver quiver_;
  RelationSet rels_;
  bool acyclic_ = true;
  Int dim_ = 0;
  // surviving_[s][t]: basis paths s -> t in canonical order.
  std::vector<std::vector<std::vector<Path>>> surviving_;
  // all_paths_[s][t]: every composable path s -> t up to the bound.
  std::vector<std::vector<std::vector<Path>>> all_paths_;
  // index of a path among all_paths_[s][t], keyed by arrow sequence.
  std::vector<std::vector<std::map<std::vector<int>, int>>> path_index_;
  // reduction_[s][t][k]: coordinates of all_paths_[s][t][k] over surviving_.
  std::vector<std::vector<std::vector<std::vector<Rat>>>> reduction_;
};

/**
 * Enumerates paths up to rels.pathLengthBound, spans the relation ideal, and
 * verifies admissibility (every path of maximal length reduces to zero).
 */
AlgebraBasis build_algebra(const Quiver& quiver, const RelationSet& rels);

/** Builds the path following the labeled arrows in application order;
 *  validates composability. */
inline Path make_path(const Quiver& q, const std::vector<std::string>& labels) {
  require(!labels.empty(), ErrorCode::EmptyInput, "make_path: no labels");
  Path p;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    int ai = q.arrow_index(labels[k]);
    require(ai >= 0, ErrorCode::ParseError,
            "make_path: unknown arrow '" + labels[k] + "'");
    const Arrow& a = q.arrows[ai];
    if (k == 0) {
      p.source = a.source;
    } else {
      require(p.target == a.source, ErrorCode::ParseError,
              "make_path: arrows not composable at '" + labels[k] + "'");
    }
    p.target = a.target;
    p.arrows.push_back(ai);
  }
  return p;
}

/** Single-term relation c * (labels as a path). */
inline PathCombo make_relation(const Quiver& q,
                               const std::vector<std::string>& labels,
                               const Rat& c = Rat(1)) {
  Path p = make_path(q, labels);
  PathCombo r;
  r.source = p.source;
  r.target = p.target;
  r.terms = {{p, c}};
  return r;
}

/** Euler form <x,y> = Σ_v x(v)y(v) − Σ_{a:u→v} x(u)y(v); quiver must be
 *  acyclic. */
Int euler_form(const Quiver& quiver, const IVec& x, const IVec& y);

/** Matrix E with <x,y> = x·E·yᵀ (E = I − arrow-count matrix). */
IMat euler_matrix(const Quiver& quiver);

/** Weight vector (δ for projective presentations, δ̌ for injective ones). */
struct Weight {
  enum class Role { Projective, Injective };
  IVec entries;
  Role role = Role::Projective;

  IVec plus() const { return pos_part(entries); }
  IVec minus() const { return pos_part(neg(entries)); }
};

}  // namespace qtrop
