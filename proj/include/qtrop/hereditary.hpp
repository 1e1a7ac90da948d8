#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qtrop/polytope.hpp"
#include "qtrop/presentation.hpp"
#include "qtrop/quiver.hpp"
#include "qtrop/rational.hpp"

namespace qtrop {

/**
 * Exact generic invariants of an acyclic quiver without relations, built on
 * the subdimension recursion
 *
 *   ext(α, β) = max{ −⟨α', β⟩ : α' a generic subdimension vector of α }
 *             = max{ −⟨α, β''⟩ : β'' a generic quotient vector of β },
 *
 * where "γ is a generic subdimension vector of α" is itself decided by
 * ext(γ, α−γ) = 0. Both maxima are computed on every memoized pair and must
 * agree; a disagreement throws. All derived notions (generic hom, generic
 * Newton polytopes, canonical decompositions, Schur roots, strong
 * perpendicularity) are cached in the table.
 */
class GenericExtTable {
 public:
  /** Throws NotAcyclic when the quiver has an oriented cycle. */
  explicit GenericExtTable(const Quiver& quiver);

  const Quiver& quiver() const { return quiver_; }

  /** Generic dim Ext(M, N) over M, N in general position. */
  Int ext(const IVec& alpha, const IVec& beta);

  /** Generic dim Hom(M, N) = ⟨α, β⟩ + ext(α, β). */
  Int hom(const IVec& alpha, const IVec& beta);

  /** True iff a general α-representation has a γ-dimensional
   *  subrepresentation, i.e. 0 ≤ γ ≤ α and ext(γ, α−γ) = 0. */
  bool subrep(const IVec& gamma, const IVec& alpha);

  /** Newton polytope of a general α-representation: the convex hull of all
   *  generic subdimension vectors of α (cached per α). */
  const Polytope& newton(const IVec& alpha);

  /** Generic direct-sum decomposition of α into Schur roots, listed with
   *  multiplicity in ascending lexicographic order (cached per α). */
  const std::vector<IVec>& canonical_decomposition(const IVec& alpha);

  /** α ≠ 0 whose canonical decomposition is the single summand α. */
  bool is_schur_root(const IVec& alpha);

  /** γ ⊥⊥ β: generic hom and ext from γ to β vanish and γ is a vertex of the
   *  generic Newton polytope of γ+β (so the generic γ-subrepresentation of a
   *  general (γ+β)-representation is unique). */
  bool strongly_perp(const IVec& gamma, const IVec& beta);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  void check_dims(const IVec& v, const char* who) const;

  Quiver quiver_;
  IMat euler_;
  std::map<std::pair<IVec, IVec>, Int> memo_;
  std::map<IVec, Polytope> newtonCache_;
  std::map<IVec, std::vector<IVec>> decompCache_;
  std::map<std::pair<IVec, IVec>, bool> perpCache_;
};

/** A Schur sequence with its multiplicities: α = Σ coeffs[i] · roots[i],
 *  roots[i] ⊥⊥ roots[j] for i < j, and coeffs[i] = 1 unless roots[i] is real
 *  or isotropic. */
struct SchurSequence {
  std::vector<Int> coeffs;
  IMat roots;

  friend bool operator==(const SchurSequence& a, const SchurSequence& b) {
    return a.coeffs == b.coeffs && a.roots == b.roots;
  }
  friend bool operator<(const SchurSequence& a, const SchurSequence& b) {
    if (a.roots != b.roots) return a.roots < b.roots;
    return a.coeffs < b.coeffs;
  }
};

inline constexpr Int kDefaultSequenceBudget = 1'000'000;

/**
 * All Schur sequences summing to α (with the coefficient rule), enumerated
 * depth-first in lexicographic root order. The budget bounds the number of
 * candidate roots examined; exceeding it throws BudgetExceeded.
 */
std::vector<SchurSequence> schur_sequences(GenericExtTable& table,
                                           const IVec& alpha,
                                           Int budget = kDefaultSequenceBudget);

/**
 * The two sides of the sequences-vs-paths correspondence for a general
 * α-representation: maximal paths of the edge quiver of the generic Newton
 * polytope, each factored through the canonical decompositions of its edge
 * differences, matched against the independent Schur-sequence enumeration.
 */
struct PathsBijection {
  Polytope newton;
  EdgeQuiver edges;
  std::vector<std::vector<int>> paths;     // vertex-index chains
  std::vector<SchurSequence> pathFactors;  // factor sequence per path
  std::vector<SchurSequence> sequences;    // independent enumeration
  std::vector<int> match;                  // paths[i] <-> sequences[match[i]]
  bool bijective = false;
};

PathsBijection maximal_paths_bijection(GenericExtTable& table,
                                       const IVec& alpha,
                                       Int budget = kDefaultSequenceBudget);

/** Injective weight of a general α-representation: δ̌_α = Eα, where E is the
 *  Euler matrix. Throws NotAcyclic. */
IVec dual_weight(const Quiver& quiver, const IVec& alpha);

/** Dimension vector of the generic kernel of an injective presentation of
 *  weight δ̌ in the image of dual_weight: solves Eα = δ̌ exactly. Throws
 *  NotAcyclic, and NonIntegralResult when the solution is not integral. */
IVec injective_kernel_dims(const Quiver& quiver, const IVec& deltaCheck);

/**
 * The duality pairing of a with δ̌: value = hom(aBᵀ, δ̌) − a·δ̌. The hom term
 * is computed twice: by sampling presentation kernels (homSampled) and as the
 * support value of the generic Newton polytope at aBᵀ (tropical); callers
 * compare the two routes. Requires δ̌ to be the dual weight of a nonnegative
 * dimension vector (validated against the sampled kernels). Throws
 * NotSkewSymmetric when b is not skew-symmetric.
 */
struct FgPairing {
  IVec delta;      // aBᵀ
  Int homSampled;  // hom(aBᵀ, δ̌) via sampled kernels
  Int tropical;    // support value of the generic Newton polytope at aBᵀ
  Int value;       // homSampled − a·δ̌
};

FgPairing fg_pairing_acyclic(GenericExtTable& table, const AlgebraBasis& alg,
                             const IVec& a, const Weight& deltaCheck,
                             const IMat& b, Rng& rng, const SampleInfo& info);

}  // namespace qtrop
