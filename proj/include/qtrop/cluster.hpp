#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qtrop/polytope.hpp"
#include "qtrop/presentation.hpp"
#include "qtrop/quiver.hpp"
#include "qtrop/rational.hpp"

namespace qtrop {

/**
 * A mutation seed: exchange matrix B, weight matrix G whose rows are the
 * cluster's delta-vectors, and the matrix C of signed c-vectors. Invariants
 * maintained by mutation: B skew-symmetric, C · Gᵀ = Identity (so det G =
 * det C = ±1), and every row of C uniformly signed.
 */
struct Seed {
  IMat b;
  IMat g;
  IMat c;
  std::vector<int> history;
};

/** The seed at the negative cluster: G = C = -Identity.
 *  Throws NotSkewSymmetric when b is not skew-symmetric. */
Seed initial_seed(const IMat& b);

/** Standard exchange-matrix mutation at vertex k (involutive).
 *  Throws IndexOutOfRange / NotSkewSymmetric. */
IMat mutate_b(const IMat& b, int k);

/**
 * Mutates the whole seed at vertex k: the G row at k is rebuilt using the
 * sign of the k-th C row, C follows the dual recurrence, B mutates in
 * lockstep. Postconditions asserted on every call: integer duality
 * C′ · G′ᵀ = Identity, sign coherence of C′, and involutivity.
 * Throws SignCoherenceBroken when the pivot C row carries mixed signs.
 */
Seed mutate_seed(const Seed& s, int k);

/** C = (G⁻¹)ᵀ. Throws NotUnimodular when det G ≠ ±1 and
 *  SignCoherenceBroken when some resulting row has mixed signs. */
IMat dual_c_vectors(const IMat& g);

/** Weight mutation at vertex u (projective convention):
 *  δ′(u) = −δ(u), δ′(j) = δ(j) + [−sign(δ(u))·b(j,u)]₊ · δ(u).
 *  Involutive when B mutates alongside. */
IVec mutate_weight(const IMat& b, const IVec& delta, int u);

/** Dual-weight mutation at vertex u (injective convention — the same rule
 *  over the opposite exchange matrix):
 *  δ̌′(u) = −δ̌(u), δ̌′(j) = δ̌(j) + [sign(δ̌(u))·b(j,u)]₊ · δ̌(u). */
IVec mutate_dual_weight(const IMat& b, const IVec& deltaCheck, int u);

/**
 * Recovers the lattice point x with G·x = h, where h(i) is the tropical
 * evaluation hom(δᵢ, M) of the i-th cluster weight. Throws NotUnimodular
 * when det G ≠ ±1 and NonIntegralResult when the solution is fractional
 * (the signal that h was evaluated against the wrong cluster).
 */
IVec vertex_recovery(const IMat& g, const IVec& h);

/** A cluster found by search: canonical form (rows sorted) plus the witness
 *  mutation sequence that reached it from the negative cluster. */
struct ClusterRecord {
  IMat rows;
  std::vector<int> witness;
};

/**
 * Breadth-first closure of seed mutation from the negative cluster,
 * deduplicated by the canonical G form. A seed is pruned when some |G entry|
 * exceeds normBound; search stops at maxDepth.
 */
std::vector<ClusterRecord> cluster_search(const IMat& b, int maxDepth = 10,
                                          Int normBound = 20);

/**
 * Builds the generic Newton polytope from cluster search: every found
 * cluster contributes the candidate vertex recovered from its tropical
 * evaluations homFn(δᵢ). Asserts that each candidate maximizes each of its
 * cluster's weights over the final hull (throws VertexNotInP otherwise).
 */
Polytope generic_newton_via_clusters(const std::function<Int(const IVec&)>& homFn,
                                     const IMat& b, int maxDepth = 10,
                                     Int normBound = 20);

/**
 * A transportable tropical evaluation: the weight δ, the dual weight δ̌ of
 * the implicit module, the current value f = hom(δ, M), and the exchange
 * matrix they live over.
 */
struct TropicalLedger {
  IMat b;
  IVec delta;
  IVec deltaCheck;
  Int value = 0;
};

/** Moves the ledger through one mutation at u:
 *  f′ = f + [δ′(u)]₊[δ̌′(u)]₊ − [δ(u)]₊[δ̌(u)]₊ with both weights and B
 *  mutated in lockstep. Throws LedgerIncomplete on malformed ledgers. */
TropicalLedger tropical_transport(const TropicalLedger& ledger, int u);

/** All nonzero primitive weights with |entries| ≤ bound whose sampled
 *  presentations witness rigidity (E(d,d) = 0). */
std::vector<IVec> rigid_weight_box(const AlgebraBasis& alg, Int bound,
                                   Rng& rng, const SampleInfo& info);

/**
 * Clusters of a (possibly bound) algebra by rigidity enumeration: maximal
 * pairwise-compatible (generic E vanishing both ways) sets of indecomposable
 * rigid weights inside the box, via maximal-clique search. Weights that
 * split as a sum of two compatible rigid weights are discarded as
 * decomposable. Records carry empty witness sequences.
 */
std::vector<ClusterRecord> rigid_clusters(const AlgebraBasis& alg, Int bound,
                                          Rng& rng, const SampleInfo& info);

/** The exchange quiver on a set of clusters: nodes are clusters, one arrow
 *  per adjacent pair (sharing all but one weight), oriented from the cluster
 *  with the leaving weight δ₋ to the one with δ₊ when e(δ₋, δ₊) > 0 and
 *  e(δ₊, δ₋) = 0. */
struct ExchangeGraph {
  std::vector<IMat> nodes;
  std::vector<std::pair<int, int>> arrows;
};

/** Throws OrientationUndecided when a sampled pair orients both ways or
 *  neither way. */
ExchangeGraph exchange_quiver(const AlgebraBasis& alg,
                              const std::vector<ClusterRecord>& clusters,
                              Rng& rng, const SampleInfo& info);

}  // namespace qtrop
