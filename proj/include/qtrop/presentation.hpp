#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qtrop/representation.hpp"

namespace qtrop {

/**
 * A presentation between sums of projectives P(dom) -> P(cod), or between
 * sums of injectives I(dom) -> I(cod) when the weight role is Injective.
 *
 * The component from the i-th copy of the dom summand at vertex u to the
 * j-th copy of the cod summand at vertex v is a path combination with
 * source v and target u (a basis element of Hom(P_u, P_v) ≅ Hom(I_u, I_v)).
 *
 * Projective role: dom = [-δ]₊ and cod = [δ]₊, so the reduced weight is
 * δ = cod - dom. Injective role: dom = [δ̌]₊ and cod = [-δ̌]₊, with reduced
 * weight δ̌ = dom - cod.
 */
struct Presentation {
  const AlgebraBasis* alg = nullptr;
  Weight weight;
  IVec dom, cod;
  // entries[u][v] has shape dom(u) x cod(v).
  std::vector<std::vector<std::vector<std::vector<PathCombo>>>> entries;
};

/** A presentation of the given reduced weight with all components zero. */
inline Presentation blank_presentation(const AlgebraBasis& alg,
                                       const Weight& w) {
  const int n = alg.n();
  require(w.entries.size() == static_cast<std::size_t>(n),
          ErrorCode::DimensionMismatch, "blank_presentation: weight length");
  Presentation d;
  d.alg = &alg;
  d.weight = w;
  if (w.role == Weight::Role::Projective) {
    d.dom = w.minus();
    d.cod = w.plus();
  } else {
    d.dom = w.plus();
    d.cod = w.minus();
  }
  d.entries.assign(n, std::vector<std::vector<std::vector<PathCombo>>>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      d.entries[u][v].assign(
          d.dom[u], std::vector<PathCombo>(d.cod[v], PathCombo{v, u, {}}));
  return d;
}

inline Presentation sample_presentation(const AlgebraBasis& alg,
                                        const Weight& w, Rng& rng,
                                        Int coeffBound) {
  Presentation d = blank_presentation(alg, w);
  for (int u = 0; u < alg.n(); ++u)
    for (int v = 0; v < alg.n(); ++v)
      for (Int i = 0; i < d.dom[u]; ++i)
        for (Int j = 0; j < d.cod[v]; ++j) {
          PathCombo c{v, u, {}};
          for (const Path& p : alg.paths(v, u)) {
            Int coeff = rng.uniform(-coeffBound, coeffBound);
            if (coeff != 0) c.terms.push_back({p, Rat(coeff)});
          }
          c.normalize();
          d.entries[u][v][i][j] = std::move(c);
        }
  return d;
}

/** hom / e dimensions of a presentation against a representation. */
struct HomEResult {
  Int hom = 0;
  Int e = 0;
  int samples = 1;
};

/**
 * Applies Hom(-, M) (projective role) or Hom(M, -) (injective role) to the
 * presentation and returns the kernel and cokernel dimensions. The identity
 * hom - e = weight · dim M is asserted.
 */
template <class K>
HomEResult apply_presentation(const Presentation& d, const Rep<K>& m) {
  require(d.alg == m.alg, ErrorCode::DimensionMismatch,
          "apply_presentation: different algebras");
  const int n = d.alg->n();
  std::vector<std::size_t> rbase(n + 1, 0), cbase(n + 1, 0);
  for (int u = 0; u < n; ++u)
    rbase[u + 1] = rbase[u] + static_cast<std::size_t>(d.dom[u] * m.dims[u]);
  for (int v = 0; v < n; ++v)
    cbase[v + 1] = cbase[v] + static_cast<std::size_t>(d.cod[v] * m.dims[v]);

  Matrix<K> c(rbase[n], cbase[n]);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (Int i = 0; i < d.dom[u]; ++i)
        for (Int j = 0; j < d.cod[v]; ++j) {
          Matrix<K> act = combo_action(m, d.entries[u][v][i][j]);
          c.set_block(rbase[u] + static_cast<std::size_t>(i * m.dims[u]),
                      cbase[v] + static_cast<std::size_t>(j * m.dims[v]), act);
        }
  const Int r = static_cast<Int>(rank(c));
  const Int domSize = static_cast<Int>(rbase[n]);
  const Int codSize = static_cast<Int>(cbase[n]);
  HomEResult out;
  if (d.weight.role == Weight::Role::Projective) {
    out.hom = codSize - r;
    out.e = domSize - r;
  } else {
    out.hom = domSize - r;
    out.e = codSize - r;
  }
  require(out.hom - out.e == dot(d.weight.entries, m.dims),
          ErrorCode::DimensionMismatch,
          "apply_presentation: hom - e != weight(dim M)");
  return out;
}

/**
 * Generic hom/e against M: the minimum of hom over `samples` independently
 * sampled presentations (the generic value, by upper semicontinuity).
 */
template <class K>
HomEResult generic_hom_e(const AlgebraBasis& alg, const Weight& w,
                         const Rep<K>& m, Rng& rng, const SampleInfo& info) {
  require(info.samples >= 1, ErrorCode::EmptyInput,
          "generic_hom_e: needs at least one sample");
  std::optional<HomEResult> best;
  for (int s = 0; s < info.samples; ++s) {
    Presentation d = sample_presentation(alg, w, rng, info.coeffBound);
    HomEResult r = apply_presentation(d, m);
    if (!best || r.hom < best->hom) best = r;
  }
  best->samples = info.samples;
  return *best;
}

/** Convenience: projective-role weight from a plain vector. */
inline Weight proj_weight(const IVec& delta) {
  return Weight{delta, Weight::Role::Projective};
}

inline Weight inj_weight(const IVec& delta) {
  return Weight{delta, Weight::Role::Injective};
}

template <class K>
Rep<K> summand_sum(const AlgebraBasis& alg, const IVec& beta,
                   Weight::Role role) {
  Rep<K> s = zero_rep<K>(alg);
  for (int u = 0; u < alg.n(); ++u)
    for (Int i = 0; i < beta[u]; ++i)
      s = direct_sum(s, role == Weight::Role::Projective
                            ? projective_rep<K>(alg, u)
                            : injective_rep<K>(alg, u));
  return s;
}

/** Coordinates of a reduced path combination in the basis paths(s, t). */
inline std::vector<Rat> combo_coords(const AlgebraBasis& alg,
                                     const PathCombo& c, int s, int t) {
  const auto& basis = alg.paths(s, t);
  std::vector<Rat> coords(basis.size(), Rat(0));
  for (const auto& [p, coeff] : c.terms) {
    auto it = std::find(basis.begin(), basis.end(), p);
    require(it != basis.end(), ErrorCode::IndexOutOfRange,
            "combo_coords: path not in basis");
    coords[static_cast<std::size_t>(it - basis.begin())] += coeff;
  }
  return coords;
}

/** A presentation realized as a morphism between explicit representations. */
template <class K>
struct RealizedPresentation {
  Rep<K> dom, cod;
  std::vector<Matrix<K>> map;  // per vertex: cod(x) x dom(x)
};

template <class K>
RealizedPresentation<K> realize_morphism(const Presentation& d) {
  const AlgebraBasis& alg = *d.alg;
  const int n = alg.n();
  RealizedPresentation<K> out;
  out.dom = summand_sum<K>(alg, d.dom, d.weight.role);
  out.cod = summand_sum<K>(alg, d.cod, d.weight.role);

  for (int x = 0; x < n; ++x) {
    Matrix<K> mat(out.cod.dims[x], out.dom.dims[x]);
    std::size_t coff = 0;
    for (int u = 0; u < n; ++u) {
      std::size_t usize =
          d.weight.role == Weight::Role::Projective ? alg.paths(u, x).size()
                                              : alg.paths(x, u).size();
      for (Int i = 0; i < d.dom[u]; ++i) {
        std::size_t roff = 0;
        for (int v = 0; v < n; ++v) {
          std::size_t vsize =
              d.weight.role == Weight::Role::Projective ? alg.paths(v, x).size()
                                                  : alg.paths(x, v).size();
          for (Int j = 0; j < d.cod[v]; ++j) {
            const PathCombo& w = d.entries[u][v][i][j];
            if (!w.terms.empty()) {
              if (d.weight.role == Weight::Role::Projective) {
                // Column per basis path p of P_u(x): coords of (w then p).
                const auto& src = alg.paths(u, x);
                for (std::size_t col = 0; col < src.size(); ++col) {
                  PathCombo prod = alg.multiply_then(
                      w, alg.reduce_to_combo(src[col]));
                  std::vector<Rat> coords = combo_coords(alg, prod, v, x);
                  for (std::size_t row = 0; row < coords.size(); ++row)
                    mat(roff + row, coff + col) = field_coeff<K>(coords[row]);
                }
              } else {
                // I_u(x) -> I_v(x) is the transpose of q |-> (q then w),
                // q over basis paths(x, v).
                const auto& qs = alg.paths(x, v);
                for (std::size_t qi = 0; qi < qs.size(); ++qi) {
                  PathCombo prod =
                      alg.multiply_then(alg.reduce_to_combo(qs[qi]), w);
                  std::vector<Rat> coords = combo_coords(alg, prod, x, u);
                  for (std::size_t ci = 0; ci < coords.size(); ++ci)
                    mat(roff + qi, coff + ci) = field_coeff<K>(coords[ci]);
                }
              }
            }
            roff += vsize;
          }
        }
        coff += usize;
      }
    }
    out.map.push_back(std::move(mat));
  }
  return out;
}

/** Cokernel representation of a projective presentation. */
template <class K>
QuotientRep<K> presentation_cokernel(const Presentation& d) {
  require(d.weight.role == Weight::Role::Projective, ErrorCode::DimensionMismatch,
          "presentation_cokernel: projective role required");
  RealizedPresentation<K> r = realize_morphism<K>(d);
  SubspaceTuple<K> spans;
  for (int x = 0; x < d.alg->n(); ++x)
    spans.push_back(column_space(r.map[x]));
  return quotient_rep(r.cod, spans);
}

/** Kernel representation of an injective presentation. */
template <class K>
Rep<K> presentation_kernel(const Presentation& d) {
  require(d.weight.role == Weight::Role::Injective, ErrorCode::DimensionMismatch,
          "presentation_kernel: injective role required");
  RealizedPresentation<K> r = realize_morphism<K>(d);
  return kernel_rep(r.dom, r.map);
}

/** The Nakayama shift: P(dom) -> P(cod) becomes I(dom) -> I(cod), keeping
 *  all path coefficients; the reduced weight negates. */
inline Presentation tau_p(const Presentation& d) {
  require(d.weight.role == Weight::Role::Projective, ErrorCode::DimensionMismatch,
          "tau_p: projective role required");
  Presentation t = d;
  t.weight.role = Weight::Role::Injective;
  t.weight.entries = neg(d.weight.entries);
  return t;
}

/** E(d1, d2) = dim Hom(Coker d2, Ker(tau_p d1)), exact over the rationals. */
inline Int E_invariant(const Presentation& d1, const Presentation& d2) {
  Rep<Rat> coker2 = presentation_cokernel<Rat>(d2).rep;
  Rep<Rat> ker1 = presentation_kernel<Rat>(tau_p(d1));
  return hom_dim(coker2, ker1);
}

/**
 * Independent route for E(d1, d2): chain maps d1 -> d2[1] are exactly
 * Hom(dom1, cod2); subtract the rank of the null-homotopy map
 * (h, h') |-> d2 ∘ h + h' ∘ d1.
 */
inline Int E_homotopy(const Presentation& d1, const Presentation& d2) {
  RealizedPresentation<Rat> r1 = realize_morphism<Rat>(d1);
  RealizedPresentation<Rat> r2 = realize_morphism<Rat>(d2);
  HomBasis<Rat> top = hom_space(r1.dom, r2.cod);
  HomBasis<Rat> left = hom_space(r1.dom, r2.dom);
  HomBasis<Rat> right = hom_space(r1.cod, r2.cod);

  const int n = d1.alg->n();
  std::vector<std::size_t> base(n + 1, 0);
  for (int x = 0; x < n; ++x)
    base[x + 1] = base[x] + static_cast<std::size_t>(r2.cod.dims[x] *
                                                     r1.dom.dims[x]);
  auto vectorize = [&](const std::vector<Matrix<Rat>>& phi, Matrix<Rat>& into,
                       std::size_t col) {
    for (int x = 0; x < n; ++x)
      for (Int i = 0; i < r2.cod.dims[x]; ++i)
        for (Int j = 0; j < r1.dom.dims[x]; ++j)
          into(base[x] + static_cast<std::size_t>(i * r1.dom.dims[x] + j),
               col) = phi[x](i, j);
  };

  Matrix<Rat> homotopies(base[n], left.basis.size() + right.basis.size());
  std::size_t col = 0;
  for (const auto& h : left.basis) {
    std::vector<Matrix<Rat>> comp;
    for (int x = 0; x < n; ++x) comp.push_back(r2.map[x] * h[x]);
    vectorize(comp, homotopies, col++);
  }
  for (const auto& h : right.basis) {
    std::vector<Matrix<Rat>> comp;
    for (int x = 0; x < n; ++x) comp.push_back(h[x] * r1.map[x]);
    vectorize(comp, homotopies, col++);
  }
  return top.dim - static_cast<Int>(rank(homotopies));
}

/** Generic E between two weights: minimum over sampled presentation pairs. */
inline Int generic_e(const AlgebraBasis& alg, const IVec& d1, const IVec& d2,
                     Rng& rng, const SampleInfo& info) {
  Int best = -1;
  for (int s = 0; s < info.samples; ++s) {
    Presentation a = sample_presentation(alg, proj_weight(d1), rng,
                                         info.coeffBound);
    Presentation b = sample_presentation(alg, proj_weight(d2), rng,
                                         info.coeffBound);
    Int e = E_invariant(a, b);
    if (best < 0 || e < best) best = e;
    if (best == 0) break;
  }
  return best;
}

/** True iff some sampled presentation of this weight is rigid (E(d,d)=0). */
inline bool is_rigid_weight(const AlgebraBasis& alg, const IVec& delta,
                            Rng& rng, const SampleInfo& info) {
  for (int s = 0; s < info.samples; ++s) {
    Presentation d =
        sample_presentation(alg, proj_weight(delta), rng, info.coeffBound);
    if (E_invariant(d, d) == 0) return true;
  }
  return false;
}

/** Samples until a certified-rigid presentation of the weight is found. */
inline Presentation rigid_presentation(const AlgebraBasis& alg,
                                       const IVec& delta, Rng& rng,
                                       const SampleInfo& info) {
  for (int s = 0; s < info.samples; ++s) {
    Presentation d =
        sample_presentation(alg, proj_weight(delta), rng, info.coeffBound);
    if (E_invariant(d, d) == 0) return d;
  }
  fail(ErrorCode::NonRigidWeight,
       "no rigid presentation found for weight " + to_string(delta));
}

template <class K>
struct UniversalImage {
  Rep<K> rep;
  SubspaceTuple<K> spans;  // columns inside M, per vertex
};

/**
 * t_δ(M): the image of the universal morphism Coker(d)^h -> M over a basis
 * of Hom(Coker d, M), for a certified-rigid presentation d of weight δ.
 */
template <class K>
UniversalImage<K> universal_image(const AlgebraBasis& alg, const IVec& delta,
                                  const Rep<K>& m, Rng& rng,
                                  const SampleInfo& info) {
  Presentation d = rigid_presentation(alg, delta, rng, info);
  Rep<K> coker = presentation_cokernel<K>(d).rep;
  HomBasis<K> h = hom_space(coker, m);
  UniversalImage<K> out;
  for (int x = 0; x < alg.n(); ++x) {
    Matrix<K> cat(m.dims[x], 0);
    for (const auto& phi : h.basis) cat = Matrix<K>::hstack(cat, phi[x]);
    out.spans.push_back(column_space(cat));
  }
  out.rep = sub_rep(m, out.spans);
  return out;
}

/**
 * ť_δ(M): the kernel of the universal morphism M -> Ker(tau_p d)^e over a
 * basis of Hom(M, Ker(tau_p d)).
 */
template <class K>
UniversalImage<K> universal_image_dual(const AlgebraBasis& alg,
                                       const IVec& delta, const Rep<K>& m,
                                       Rng& rng, const SampleInfo& info) {
  Presentation d = rigid_presentation(alg, delta, rng, info);
  Rep<K> ker = presentation_kernel<K>(tau_p(d));
  HomBasis<K> h = hom_space(m, ker);
  UniversalImage<K> out;
  for (int x = 0; x < alg.n(); ++x) {
    Matrix<K> cat(0, m.dims[x]);
    for (const auto& phi : h.basis) cat = Matrix<K>::vstack(cat, phi[x]);
    out.spans.push_back(nullspace(cat));
  }
  out.rep = sub_rep(m, out.spans);
  return out;
}

/**
 * The exchange image of an exchange pair (d-, d+): with E(d-, d+) = 1 and
 * E(d+, d-) = 0, the image of the unique nonzero morphism
 * Coker(d+) -> Ker(tau_p d-). The result is real Schur: End = k, Ext^1 = 0.
 */
inline Rep<Rat> exchange_image(const Presentation& dminus,
                               const Presentation& dplus) {
  require(E_invariant(dminus, dplus) == 1 && E_invariant(dplus, dminus) == 0,
          ErrorCode::NotExchangePair,
          "exchange_image: E(d-,d+) = 1 and E(d+,d-) = 0 required");
  Rep<Rat> coker = presentation_cokernel<Rat>(dplus).rep;
  Rep<Rat> ker = presentation_kernel<Rat>(tau_p(dminus));
  HomBasis<Rat> h = hom_space(coker, ker);
  require(h.dim == 1, ErrorCode::NotExchangePair,
          "exchange_image: morphism space is not one-dimensional");
  Rep<Rat> image = image_rep(ker, h.basis[0]);
  require(hom_dim(image, image) == 1 && ext1_dim(image, image) == 0,
          ErrorCode::NotExchangePair,
          "exchange_image: image is not real Schur");
  return image;
}

/** The projective-cover multiplicities of a minimal presentation of M. */
struct MinPresentation {
  IVec betaPlus;   // cover of M
  IVec betaMinus;  // cover of the first syzygy
  IVec delta;      // betaPlus - betaMinus
};

template <class K>
MinPresentation min_presentation_weight(const Rep<K>& m) {
  MinPresentation out;
  out.betaPlus.assign(m.n(), 0);
  out.betaMinus.assign(m.n(), 0);
  if (m.total_dim() == 0) {
    out.delta = out.betaPlus;
    return out;
  }
  out.betaPlus = top_rep(m).rep.dims;
  Syzygy<K> s = first_syzygy(m);
  if (s.omega.total_dim() > 0) out.betaMinus = top_rep(s.omega).rep.dims;
  out.delta.resize(m.n());
  for (int v = 0; v < m.n(); ++v)
    out.delta[v] = out.betaPlus[v] - out.betaMinus[v];
  return out;
}

}  // namespace qtrop
