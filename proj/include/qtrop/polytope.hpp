#pragma once

#include <utility>
#include <vector>

#include "qtrop/linalg.hpp"

namespace qtrop {

/** One facet-defining inequality normal · x <= offset of a polytope,
 *  valid inside the affine span; the normal is primitive integer. */
struct Facet {
  IVec normal;
  Int offset = 0;
  std::vector<int> vertexIdx;  // vertices lying on the facet
};

/**
 * A lattice polytope in exact arithmetic. `vertices` are the extreme points
 * in ascending lexicographic order. `dim` is the dimension of the affine
 * span (0 for a point); `dirBasis` rows span the direction space. Facets cut
 * out the polytope inside its affine span.
 */
struct Polytope {
  int ambient = 0;
  IMat vertices;
  int dim = -1;
  QMat dirBasis;
  std::vector<Facet> facets;
};

/** Exact convex hull of integer points (beneath-beyond, then facet merge).
 *  Throws EmptyInput when no points are given. */
Polytope convex_hull(const IMat& points);

bool polytope_contains(const Polytope& p, const IVec& x);

/** max delta · x over the polytope. */
Int support_value(const Polytope& p, const IVec& delta);

/** Indices (into p.vertices) of all vertices attaining the maximum. */
std::vector<int> argmax_vertices(const Polytope& p, const IVec& delta);

/** A rational polyhedral cone: nonnegative spans of the generator rows plus
 *  the full linear span of the lineality rows. */
struct Cone {
  IMat generators;
  IMat lineality;
};

/** Dimension of the linear span of the cone. */
Int cone_dim(const Cone& c, int ambient);

/** Membership x in cone, decided by exact phase-1 simplex. */
bool cone_contains(const Cone& c, const IVec& x);

/** Normal cone of a vertex: outward facet normals through the vertex plus
 *  the orthogonal complement of the affine span. Throws VertexNotInP when
 *  the point is not a vertex of p. */
Cone normal_cone(const Polytope& p, const IVec& vertex);

/** Normal cones of all vertices, in vertex order. */
std::vector<Cone> normal_fan(const Polytope& p);

/** The normal cone of the smallest face containing two vertices: shared
 *  facet normals plus lineality. */
Cone face_normal_cone(const Polytope& p, int u, int v);

/**
 * The vertex-edge graph of the polytope with every edge oriented from the
 * componentwise-smaller endpoint to the larger one. Throws IncomparableEdge
 * when some geometric edge joins incomparable points.
 */
struct EdgeQuiver {
  IMat vertices;
  std::vector<std::pair<int, int>> edges;  // (from, to) indices
};
EdgeQuiver edge_quiver(const Polytope& p);

/** Minkowski sum. Throws DimensionMismatch when ambients differ. */
Polytope minkowski_sum(const Polytope& a, const Polytope& b);

/** Feasibility of A z = b with z >= 0, by exact simplex with Bland's rule. */
bool lp_feasible(const QMat& a, const std::vector<Rat>& b);

}  // namespace qtrop
