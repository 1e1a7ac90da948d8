#include "qtrop/polytope.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace qtrop {
namespace {

using QVec = std::vector<Rat>;

QVec to_q(const IVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

Rat dot_q(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch,
          "dot_q: vector lengths differ");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix<Rat> rows_to_mat(const std::vector<QVec>& rows, std::size_t cols) {
  Matrix<Rat> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

/** The primitive integer vector with the same direction as v (0 for 0). */
IVec primitive(const QVec& v) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  BigInt l = 1;
  for (const Rat& x : v) l = lcm(l, BigInt(denominator(x)));
  std::vector<BigInt> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = BigInt(numerator(v[i])) * (l / BigInt(denominator(v[i])));
  BigInt g = 0;
  for (const BigInt& x : w) g = gcd(g, BigInt(abs(x)));
  IVec out(v.size(), 0);
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = (w[i] / g).convert_to<Int>();
  return out;
}

/** Affine-span data of a deduplicated point set. */
struct AffineFrame {
  IVec base;
  Matrix<Rat> basis;          // dim x ambient, integer entries
  int dim = 0;
  std::vector<int> simplex;   // dim+1 affinely independent point indices
  std::vector<QVec> coords;   // reduced coordinates per point
};

AffineFrame make_frame(const IMat& pts, int ambient) {
  AffineFrame f;
  f.base = pts[0];
  f.simplex = {0};
  std::vector<QVec> rows;
  Matrix<Rat> cur(0, ambient);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    QVec diff = to_q(sub(pts[k], f.base));
    Matrix<Rat> trial = Matrix<Rat>::vstack(cur, rows_to_mat({diff}, ambient));
    if (rank(trial) > rank(cur)) {
      cur = trial;
      rows.push_back(diff);
      f.simplex.push_back(static_cast<int>(k));
    }
  }
  f.basis = cur;
  f.dim = static_cast<int>(rows.size());
  if (f.dim > 0) {
    Matrix<Rat> gram = f.basis * f.basis.transpose();
    auto gramInv = inverse(gram);
    require(gramInv.has_value(), ErrorCode::DimensionMismatch,
            "make_frame: Gram matrix not invertible");
    for (const IVec& p : pts) {
      QVec diff = to_q(sub(p, f.base));
      Matrix<Rat> rhs(f.dim, 1);
      for (int i = 0; i < f.dim; ++i) {
        Rat s(0);
        for (int j = 0; j < ambient; ++j) s += f.basis(i, j) * diff[j];
        rhs(i, 0) = s;
      }
      Matrix<Rat> c = *gramInv * rhs;
      QVec coord(f.dim);
      for (int i = 0; i < f.dim; ++i) coord[i] = c(i, 0);
      f.coords.push_back(std::move(coord));
    }
  } else {
    f.coords.assign(pts.size(), QVec{});
  }
  return f;
}

/** A simplicial facet of the growing hull, in reduced coordinates. */
struct SFacet {
  QVec n;
  Rat off;
  std::vector<int> verts;  // exactly dim point indices, sorted
};

/** A merged facet hyperplane in reduced coordinates. */
struct Hyperplane {
  QVec n;   // entries of a primitive integer vector
  Rat off;
};

/** Hyperplanes of the hull of full-dimensional reduced points. */
std::vector<Hyperplane> reduced_hull(const AffineFrame& f) {
  const int d = f.dim;
  const auto& c = f.coords;

  auto orient = [&](QVec& n, Rat& off) {
    for (int s : f.simplex) {
      Rat v = dot_q(n, c[s]);
      if (v == off) continue;
      if (v > off) {
        for (Rat& x : n) x = -x;
        off = -off;
      }
      return;
    }
    fail(ErrorCode::DimensionMismatch, "reduced_hull: degenerate orientation");
  };

  auto facet_from = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    std::vector<QVec> rows;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      QVec diff(d);
      for (int j = 0; j < d; ++j)
        diff[j] = c[verts[i]][j] - c[verts[0]][j];
      rows.push_back(std::move(diff));
    }
    Matrix<Rat> ns = nullspace(rows_to_mat(rows, d));
    require(ns.cols() == 1, ErrorCode::DimensionMismatch,
            "reduced_hull: facet points not affinely independent");
    SFacet sf;
    sf.n.resize(d);
    for (int j = 0; j < d; ++j) sf.n[j] = ns(j, 0);
    sf.off = dot_q(sf.n, c[verts[0]]);
    sf.verts = std::move(verts);
    orient(sf.n, sf.off);
    return sf;
  };

  std::vector<SFacet> facets;
  if (d == 1) {
    // Two endpoint "hyperplanes" found by direct scan.
    std::size_t lo = 0, hi = 0;
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (c[k][0] < c[lo][0]) lo = k;
      if (c[k][0] > c[hi][0]) hi = k;
    }
    return {Hyperplane{{Rat(1)}, c[hi][0]}, Hyperplane{{Rat(-1)}, -c[lo][0]}};
  }

  // Initial simplex: all d-subsets of the d+1 independent points.
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> verts;
    for (int i = 0; i <= d; ++i)
      if (i != skip) verts.push_back(f.simplex[i]);
    facets.push_back(facet_from(verts));
  }

  for (int q = 0; q < static_cast<int>(c.size()); ++q) {
    if (std::find(f.simplex.begin(), f.simplex.end(), q) != f.simplex.end())
      continue;
    std::vector<std::size_t> visible;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (dot_q(facets[i].n, c[q]) > facets[i].off) visible.push_back(i);
    if (visible.empty()) continue;

    std::map<std::vector<int>, int> ridgeCount;
    for (std::size_t i : visible)
      for (int skip = 0; skip < d; ++skip) {
        std::vector<int> ridge;
        for (int j = 0; j < d; ++j)
          if (j != skip) ridge.push_back(facets[i].verts[j]);
        ++ridgeCount[ridge];
      }

    std::vector<SFacet> next;
    std::vector<bool> isVisible(facets.size(), false);
    for (std::size_t i : visible) isVisible[i] = true;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (!isVisible[i]) next.push_back(std::move(facets[i]));
    for (const auto& [ridge, count] : ridgeCount)
      if (count == 1) {
        std::vector<int> verts = ridge;
        verts.push_back(q);
        next.push_back(facet_from(std::move(verts)));
      }
    facets = std::move(next);
  }

  // Merge simplicial facets into hyperplanes keyed by primitive data.
  std::map<std::pair<IVec, Rat>, Hyperplane> merged;
  for (const SFacet& sf : facets) {
    IVec prim = primitive(sf.n);
    Rat scale(0);
    for (int j = 0; j < d; ++j)
      if (prim[j] != 0) {
        scale = Rat(prim[j]) / sf.n[j];
        break;
      }
    Hyperplane h;
    h.n = to_q(prim);
    h.off = sf.off * scale;
    merged.emplace(std::make_pair(prim, h.off), h);
  }
  std::vector<Hyperplane> out;
  for (auto& [key, h] : merged) out.push_back(std::move(h));
  return out;
}

Matrix<Rat> stack_rows(const IMat& a, const IMat& b, int ambient) {
  Matrix<Rat> m(a.size() + b.size(), ambient);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < ambient; ++j) m(i, j) = Rat(a[i][j]);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j < ambient; ++j) m(a.size() + i, j) = Rat(b[i][j]);
  return m;
}

int vertex_index(const Polytope& p, const IVec& v) {
  auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), v);
  if (it == p.vertices.end() || *it != v) return -1;
  return static_cast<int>(it - p.vertices.begin());
}

}  // namespace

Polytope convex_hull(const IMat& points) {
  require(!points.empty(), ErrorCode::EmptyInput, "convex_hull: no points");
  const int ambient = static_cast<int>(points[0].size());
  IMat pts = points;
  for (const IVec& p : pts)
    require(static_cast<int>(p.size()) == ambient,
            ErrorCode::DimensionMismatch, "convex_hull: ragged input");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.ambient = ambient;
  AffineFrame f = make_frame(pts, ambient);
  out.dim = f.dim;
  out.dirBasis = f.basis;
  if (f.dim == 0) {
    out.vertices = {pts[0]};
    return out;
  }

  std::vector<Hyperplane> planes = reduced_hull(f);

  // Ambient facet normals: solve basis * n = reduced normal, then clear
  // denominators keeping orientation.
  std::vector<IVec> normals;
  for (const Hyperplane& h : planes) {
    Matrix<Rat> rhs(f.dim, 1);
    for (int i = 0; i < f.dim; ++i) rhs(i, 0) = h.n[i];
    auto sol = solve(f.basis, rhs);
    require(sol.has_value(), ErrorCode::DimensionMismatch,
            "convex_hull: normal lift failed");
    QVec n(ambient);
    for (int j = 0; j < ambient; ++j) n[j] = (*sol)(j, 0);
    normals.push_back(primitive(n));
  }

  // Extreme points: those whose incident facet normals span the reduced
  // space. Work with reduced incidence to avoid offset bookkeeping.
  std::vector<std::vector<int>> incident(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < planes.size(); ++i)
      if (dot_q(planes[i].n, f.coords[k]) == planes[i].off)
        incident[k].push_back(static_cast<int>(i));

  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::vector<QVec> rows;
    for (int i : incident[k]) rows.push_back(planes[i].n);
    if (rank(rows_to_mat(rows, f.dim)) == static_cast<std::size_t>(f.dim))
      out.vertices.push_back(pts[k]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  for (std::size_t i = 0; i < planes.size(); ++i) {
    Facet fc;
    fc.normal = normals[i];
    bool haveOffset = false;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (dot_q(planes[i].n, f.coords[k]) == planes[i].off) {
        Int val = dot(fc.normal, pts[k]);
        if (!haveOffset) {
          fc.offset = val;
          haveOffset = true;
        } else {
          require(val == fc.offset, ErrorCode::DimensionMismatch,
                  "convex_hull: inconsistent facet offset");
        }
      }
    require(haveOffset, ErrorCode::DimensionMismatch,
            "convex_hull: facet without points");
    for (std::size_t v = 0; v < out.vertices.size(); ++v)
      if (dot(fc.normal, out.vertices[v]) == fc.offset)
        fc.vertexIdx.push_back(static_cast<int>(v));
    for (const IVec& v : out.vertices)
      require(dot(fc.normal, v) <= fc.offset, ErrorCode::DimensionMismatch,
              "convex_hull: facet inequality violated");
    out.facets.push_back(std::move(fc));
  }
  return out;
}

bool polytope_contains(const Polytope& p, const IVec& x) {
  require(static_cast<int>(x.size()) == p.ambient,
          ErrorCode::DimensionMismatch, "polytope_contains: length");
  const IVec& base = p.vertices[0];
  if (p.dim == 0) return x == base;
  Matrix<Rat> diff(1, p.ambient);
  for (int j = 0; j < p.ambient; ++j) diff(0, j) = Rat(x[j] - base[j]);
  if (rank(Matrix<Rat>::vstack(p.dirBasis, diff)) != rank(p.dirBasis))
    return false;
  for (const Facet& fc : p.facets)
    if (dot(fc.normal, x) > fc.offset) return false;
  return true;
}

Int support_value(const Polytope& p, const IVec& delta) {
  require(!p.vertices.empty(), ErrorCode::EmptyInput, "support_value");
  Int best = dot(delta, p.vertices[0]);
  for (const IVec& v : p.vertices) best = std::max(best, dot(delta, v));
  return best;
}

std::vector<int> argmax_vertices(const Polytope& p, const IVec& delta) {
  Int best = support_value(p, delta);
  std::vector<int> out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (dot(delta, p.vertices[i]) == best) out.push_back(static_cast<int>(i));
  return out;
}

Int cone_dim(const Cone& c, int ambient) {
  return static_cast<Int>(rank(stack_rows(c.generators, c.lineality,
                                          ambient)));
}

bool lp_feasible(const QMat& a, const std::vector<Rat>& b) {
  const std::size_t m = a.rows(), k = a.cols();
  require(b.size() == m, ErrorCode::DimensionMismatch, "lp_feasible: sizes");
  // Tableau with artificial basis; phase-1 minimizes the artificial sum.
  Matrix<Rat> t(m + 1, k + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rat s = b[i] < 0 ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < k; ++j) t(i, j) = s * a(i, j);
    t(i, k + i) = Rat(1);
    t(i, k + m) = s * b[i];
  }
  for (std::size_t j = 0; j < k; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < m; ++i) s += t(i, j);
    t(m, j) = -s;
  }
  Rat rhs(0);
  for (std::size_t i = 0; i < m; ++i) rhs += t(i, k + m);
  t(m, k + m) = -rhs;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  for (;;) {
    // Bland: first column with a negative reduced cost.
    std::size_t enter = k + m;
    for (std::size_t j = 0; j < k + m; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == k + m) break;
    // Ratio test; Bland tie-break on the smallest basis variable.
    std::size_t leave = m;
    Rat bestRatio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, k + m) / t(i, enter);
      if (leave == m || ratio < bestRatio ||
          (ratio == bestRatio && basis[i] < basis[leave])) {
        leave = i;
        bestRatio = ratio;
      }
    }
    require(leave != m, ErrorCode::DimensionMismatch,
            "lp_feasible: unbounded phase-1");
    Rat piv = t(leave, enter);
    for (std::size_t j = 0; j <= k + m; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rat factor = t(i, enter);
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= k + m; ++j)
        t(i, j) -= factor * t(leave, j);
    }
    basis[leave] = enter;
  }
  return -t(m, k + m) == 0;
}

bool cone_contains(const Cone& c, const IVec& x) {
  const std::size_t ambient = x.size();
  for (const IVec& g : c.generators)
    require(g.size() == ambient, ErrorCode::DimensionMismatch,
            "cone_contains: generator length");
  for (const IVec& l : c.lineality)
    require(l.size() == ambient, ErrorCode::DimensionMismatch,
            "cone_contains: lineality length");
  const std::size_t cols = c.generators.size() + 2 * c.lineality.size();
  if (cols == 0) return is_zero(x);
  QMat a(ambient, cols);
  for (std::size_t j = 0; j < c.generators.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i)
      a(i, j) = Rat(c.generators[j][i]);
  for (std::size_t j = 0; j < c.lineality.size(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) {
      a(i, c.generators.size() + 2 * j) = Rat(c.lineality[j][i]);
      a(i, c.generators.size() + 2 * j + 1) = Rat(-c.lineality[j][i]);
    }
  std::vector<Rat> b(ambient);
  for (std::size_t i = 0; i < ambient; ++i) b[i] = Rat(x[i]);
  return lp_feasible(a, b);
}

namespace {

IMat lineality_rows(const Polytope& p) {
  IMat rows;
  if (p.dim == static_cast<int>(0)) {
    // Point: the whole space is lineality.
    for (int i = 0; i < p.ambient; ++i)
      rows.push_back(unit_vector(p.ambient, i));
    return rows;
  }
  Matrix<Rat> ns = nullspace(p.dirBasis);
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    QVec col(p.ambient);
    for (int i = 0; i < p.ambient; ++i) col[i] = ns(i, j);
    rows.push_back(primitive(col));
  }
  return rows;
}

}  // namespace

Cone normal_cone(const Polytope& p, const IVec& vertex) {
  int idx = vertex_index(p, vertex);
  require(idx >= 0, ErrorCode::VertexNotInP,
          "normal_cone: not a vertex: " + to_string(vertex));
  Cone c;
  c.lineality = lineality_rows(p);
  for (const Facet& fc : p.facets)
    if (std::binary_search(fc.vertexIdx.begin(), fc.vertexIdx.end(), idx))
      c.generators.push_back(fc.normal);
  return c;
}

std::vector<Cone> normal_fan(const Polytope& p) {
  std::vector<Cone> fan;
  for (const IVec& v : p.vertices) fan.push_back(normal_cone(p, v));
  return fan;
}

Cone face_normal_cone(const Polytope& p, int u, int v) {
  require(u >= 0 && v >= 0 && u < static_cast<int>(p.vertices.size()) &&
              v < static_cast<int>(p.vertices.size()),
          ErrorCode::IndexOutOfRange, "face_normal_cone: vertex index");
  Cone c;
  c.lineality = lineality_rows(p);
  for (const Facet& fc : p.facets)
    if (std::binary_search(fc.vertexIdx.begin(), fc.vertexIdx.end(), u) &&
        std::binary_search(fc.vertexIdx.begin(), fc.vertexIdx.end(), v))
      c.generators.push_back(fc.normal);
  return c;
}

EdgeQuiver edge_quiver(const Polytope& p) {
  EdgeQuiver q;
  q.vertices = p.vertices;
  const int nv = static_cast<int>(p.vertices.size());
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      Cone c = face_normal_cone(p, i, j);
      if (cone_dim(c, p.ambient) != static_cast<Int>(p.ambient) - 1)
        continue;
      IVec diff = sub(p.vertices[j], p.vertices[i]);
      if (leq(IVec(diff.size(), 0), diff))
        q.edges.emplace_back(i, j);
      else if (leq(diff, IVec(diff.size(), 0)))
        q.edges.emplace_back(j, i);
      else
        fail(ErrorCode::IncomparableEdge,
             "edge_quiver: incomparable edge " + to_string(p.vertices[i]) +
                 " -- " + to_string(p.vertices[j]));
    }
  return q;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  require(a.ambient == b.ambient, ErrorCode::DimensionMismatch,
          "minkowski_sum: ambient dimensions differ");
  IMat sums;
  for (const IVec& x : a.vertices)
    for (const IVec& y : b.vertices) sums.push_back(add(x, y));
  return convex_hull(sums);
}

}  // namespace qtrop
