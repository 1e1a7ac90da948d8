#pragma once

#include <vector>

#include "qtrop/quiver.hpp"
#include "qtrop/rational.hpp"
#include "qtrop/representation.hpp"

/**
 * Bundled example quivers, algebras, representations, and the expected
 * results that the check-example commands and the acceptance suite verify.
 */
namespace qtrop::fixtures {

// --- Quivers -------------------------------------------------------------

/** 1 -> 2. */
Quiver a2();
/** 1 -> 2 -> 3. */
Quiver a3();
/** Three parallel arrows 1 -> 2. */
Quiver kron3();
/** Two parallel arrows 1 -> 2 and one arrow 2 -> 3. */
Quiver two_one();
/** Triangle a: 1 -> 2, b: 2 -> 3, c: 1 -> 3 with the composite b.a = 0. */
Quiver ztriangle();
RelationSet ztriangle_relations();
/** Four vertices: an oriented 3-cycle a: 1 -> 4, b: 4 -> 3, c: 3 -> 1 plus
 *  d: 2 -> 1, e: 2 -> 3, f: 2 -> 4; consecutive cycle composites vanish. */
Quiver tricycle4();
RelationSet tricycle4_relations();

// --- Shared algebra singletons (safe to keep Rep pointers on) -------------

const AlgebraBasis& a2_algebra();
const AlgebraBasis& a3_algebra();
const AlgebraBasis& kron3_algebra();
const AlgebraBasis& two_one_algebra();
const AlgebraBasis& ztriangle_algebra();
const AlgebraBasis& tricycle4_algebra();

// --- Specific representations --------------------------------------------

/** The (3,3)-dimensional representation of kron3 whose weight (1,-1) has
 *  hom = 1 but tropical value 0; the gap closes at n = 2. */
Rep<Rat> kron3_rep33();

/** The regular representation A = P1 + P2 + P3 of the ztriangle algebra. */
Rep<Rat> ztriangle_regular_rep();

// --- Expected tables -------------------------------------------------------

/** A Newton-polytope vertex with one cluster that selects it and a mutation
 *  sequence (0-indexed vertices, applied left to right) reaching it. */
struct VertexClusterRow {
  IVec vertex;
  IMat cluster;  // rows form a set; order not significant
  std::vector<int> sequence;
};

/** two_one, dimension vector (3,5,2): the 4 nontrivial vertices. */
std::vector<VertexClusterRow> two_one_vertex_table();
/** All 6 vertices of the generic Newton polytope of (3,5,2) on two_one. */
IMat two_one_newton_vertices();

/** tricycle4, dual weight (0,-3,1,1): the 6 nontrivial vertices. */
std::vector<VertexClusterRow> tricycle4_vertex_table();
IVec tricycle4_dual_weight();   // (0,-3,1,1)
IVec tricycle4_kernel_dims();   // (1,1,1,2)
IMat tricycle4_newton_vertices();  // all 8
IMat tricycle4_B();
IMat tricycle4_B_after_mu4();   // exchange matrix after mutating at vertex 4

/** One row of the regular-representation cone table: a polytope vertex and
 *  the printed generator list of its dual cone. The printed generators match
 *  the maximizer convention only after negation, and two adjacent row pairs
 *  are swapped; tests recover the pairing by cone membership. */
struct ConeRow {
  IVec vertex;
  IMat generators;
};
std::vector<ConeRow> ztriangle_cone_table();  // 7 rows
IMat ztriangle_newton_vertices();             // all 9

/** Maximal chains of the two_one (3,5,2) edge quiver: for each chain the
 *  factor decomposition c_i * beta_i (coefficient, root). */
struct FactorSequence {
  std::vector<Int> coeffs;
  IMat roots;
};
std::vector<FactorSequence> two_one_chain_table();  // 6 chains

/** ztriangle cluster geometry: ray generators of the cluster fan plus the
 *  expected cluster and exchange-edge counts. */
IMat ztriangle_expected_rays();  // 11 rows
inline constexpr int kZtriangleClusterCount = 18;
inline constexpr int kZtriangleExchangeEdgeCount = 27;

}  // namespace qtrop::fixtures
