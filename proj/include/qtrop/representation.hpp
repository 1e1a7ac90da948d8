#pragma once

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "qtrop/linalg.hpp"
#include "qtrop/quiver.hpp"

namespace qtrop {

/** Converts a rational coefficient into the field K. */
template <class K>
K field_coeff(const Rat& c) {
  if constexpr (std::is_same_v<K, Rat>) {
    return c;
  } else {
    BigInt num = boost::multiprecision::numerator(c);
    BigInt den = boost::multiprecision::denominator(c);
    K np(static_cast<long long>(num % K::characteristic()));
    K dp(static_cast<long long>(den % K::characteristic()));
    require(dp != K(0), ErrorCode::FieldMismatch,
            "coefficient denominator vanishes in this field");
    return np / dp;
  }
}

/**
 * A representation of the bound quiver algebra over an exact field K:
 * a vector space dimension per vertex and a (target-dim x source-dim)
 * matrix per arrow. Validity (shapes + relations) is checked by validate().
 */
template <class K>
struct Rep {
  const AlgebraBasis* alg = nullptr;
  IVec dims;
  std::vector<Matrix<K>> mats;

  int n() const { return alg->n(); }
  Int total_dim() const {
    Int s = 0;
    for (Int d : dims) s += d;
    return s;
  }
};

/** Representation with the given dims and all-zero arrow matrices. */
template <class K>
Rep<K> semisimple_rep(const AlgebraBasis& alg, const IVec& dims) {
  require(dims.size() == static_cast<std::size_t>(alg.n()),
          ErrorCode::DimensionMismatch, "semisimple_rep: bad dims length");
  for (Int d : dims)
    require(d >= 0, ErrorCode::DimensionMismatch,
            "semisimple_rep: negative dimension");
  Rep<K> m;
  m.alg = &alg;
  m.dims = dims;
  for (const auto& a : alg.quiver().arrows)
    m.mats.push_back(Matrix<K>(dims[a.target], dims[a.source]));
  return m;
}

template <class K>
Rep<K> zero_rep(const AlgebraBasis& alg) {
  return semisimple_rep<K>(alg, IVec(alg.n(), 0));
}

template <class K>
Rep<K> simple_rep(const AlgebraBasis& alg, int v) {
  return semisimple_rep<K>(alg, unit_vector(alg.n(), v));
}

/** Matrix of the action of a path: M(w) = M(a_l)∘…∘M(a_1). */
template <class K>
Matrix<K> path_action(const Rep<K>& m, const Path& p) {
  Matrix<K> x = Matrix<K>::identity(m.dims[p.source]);
  for (int ai : p.arrows) x = m.mats[ai] * x;
  return x;
}

template <class K>
Matrix<K> combo_action(const Rep<K>& m, const PathCombo& c) {
  Matrix<K> x(m.dims[c.target], m.dims[c.source]);
  for (const auto& [p, coeff] : c.terms) {
    Matrix<K> pa = path_action(m, p);
    K fc = field_coeff<K>(coeff);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) += fc * pa(i, j);
  }
  return x;
}

/** Shape and relation check; throws on violation. */
template <class K>
void validate(const Rep<K>& m) {
  require(m.alg != nullptr, ErrorCode::EmptyInput, "representation unbound");
  const Quiver& q = m.alg->quiver();
  require(m.dims.size() == static_cast<std::size_t>(q.n) &&
              m.mats.size() == q.arrows.size(),
          ErrorCode::DimensionMismatch, "representation: wrong field counts");
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    require(m.mats[i].rows() ==
                    static_cast<std::size_t>(m.dims[q.arrows[i].target]) &&
                m.mats[i].cols() ==
                    static_cast<std::size_t>(m.dims[q.arrows[i].source]),
            ErrorCode::DimensionMismatch,
            "matrix shape mismatch on arrow '" + q.arrows[i].label + "'");
  for (const auto& r : m.alg->relations().relations)
    require(combo_action(m, r).is_zero(), ErrorCode::DimensionMismatch,
            "relation does not vanish on the representation");
}

template <class K>
Rep<K> direct_sum(const Rep<K>& a, const Rep<K>& b) {
  require(a.alg == b.alg, ErrorCode::DimensionMismatch,
          "direct_sum: different algebras");
  Rep<K> s;
  s.alg = a.alg;
  s.dims = add(a.dims, b.dims);
  const Quiver& q = a.alg->quiver();
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    Matrix<K> m(s.dims[q.arrows[i].target], s.dims[q.arrows[i].source]);
    m.set_block(0, 0, a.mats[i]);
    m.set_block(a.dims[q.arrows[i].target], a.dims[q.arrows[i].source],
                b.mats[i]);
    s.mats.push_back(std::move(m));
  }
  return s;
}

/**
 * The projective P_i realized on the path basis: P_i(v) has basis
 * paths(i, v); an arrow acts by appending itself and reducing.
 */
template <class K>
Rep<K> projective_rep(const AlgebraBasis& alg, int i) {
  Rep<K> m;
  m.alg = &alg;
  m.dims = alg.proj_dims(i);
  const Quiver& q = alg.quiver();
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int u = q.arrows[ai].source, v = q.arrows[ai].target;
    const auto& src = alg.paths(i, u);
    const auto& dst = alg.paths(i, v);
    Matrix<K> mat(dst.size(), src.size());
    Path step{u, v, {static_cast<int>(ai)}};
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::vector<Rat> red = alg.reduce_path(then(src[c], step));
      for (std::size_t r = 0; r < dst.size(); ++r)
        mat(r, c) = field_coeff<K>(red[r]);
    }
    m.mats.push_back(std::move(mat));
  }
  return m;
}

/**
 * The injective I_i: I_i(v) is dual to the span of paths(v, i); an arrow
 * a: u -> v acts as the transpose of "prepend a" on those path spans.
 */
template <class K>
Rep<K> injective_rep(const AlgebraBasis& alg, int i) {
  Rep<K> m;
  m.alg = &alg;
  m.dims = alg.inj_dims(i);
  const Quiver& q = alg.quiver();
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int u = q.arrows[ai].source, v = q.arrows[ai].target;
    const auto& pu = alg.paths(u, i);
    const auto& pv = alg.paths(v, i);
    // psi: span paths(v, i) -> span paths(u, i), q |-> (a then q), reduced.
    Matrix<K> psi(pu.size(), pv.size());
    Path step{u, v, {static_cast<int>(ai)}};
    for (std::size_t c = 0; c < pv.size(); ++c) {
      std::vector<Rat> red = alg.reduce_path(then(step, pv[c]));
      for (std::size_t r = 0; r < pu.size(); ++r)
        psi(r, c) = field_coeff<K>(red[r]);
    }
    m.mats.push_back(psi.transpose());
  }
  return m;
}

/** A basis of Hom(M, N): dimension and per-vertex matrix tuples. */
template <class K>
struct HomBasis {
  Int dim = 0;
  std::vector<std::vector<Matrix<K>>> basis;  // basis[k][v]: N(v) x M(v)
};

/**
 * Solves the intertwiner system phi_v M(a) = N(a) phi_u exactly.
 * Both representations must live over the same algebra object.
 */
template <class K>
HomBasis<K> hom_space(const Rep<K>& m, const Rep<K>& nrep) {
  require(m.alg == nrep.alg, ErrorCode::DimensionMismatch,
          "hom_space: different algebras");
  const Quiver& q = m.alg->quiver();
  const int n = q.n;
  std::vector<std::size_t> base(n + 1, 0);
  for (int v = 0; v < n; ++v)
    base[v + 1] = base[v] + static_cast<std::size_t>(nrep.dims[v] * m.dims[v]);
  const std::size_t unknowns = base[n];
  std::size_t eqs = 0;
  for (const auto& a : q.arrows)
    eqs += static_cast<std::size_t>(nrep.dims[a.target] * m.dims[a.source]);

  Matrix<K> sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int u = q.arrows[ai].source, v = q.arrows[ai].target;
    const Matrix<K>& ma = m.mats[ai];
    const Matrix<K>& na = nrep.mats[ai];
    for (Int r = 0; r < nrep.dims[v]; ++r)
      for (Int c = 0; c < m.dims[u]; ++c) {
        // phi_v(r, k) M(a)(k, c) - N(a)(r, k) phi_u(k, c) = 0
        for (Int k = 0; k < m.dims[v]; ++k)
          sys(row, base[v] + static_cast<std::size_t>(r * m.dims[v] + k)) +=
              ma(k, c);
        for (Int k = 0; k < nrep.dims[u]; ++k)
          sys(row, base[u] + static_cast<std::size_t>(k * m.dims[u] + c)) -=
              na(r, k);
        ++row;
      }
  }
  Matrix<K> ker = nullspace(sys);
  HomBasis<K> out;
  out.dim = static_cast<Int>(ker.cols());
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    std::vector<Matrix<K>> phi;
    for (int v = 0; v < n; ++v) {
      Matrix<K> pv(nrep.dims[v], m.dims[v]);
      for (Int r = 0; r < nrep.dims[v]; ++r)
        for (Int c = 0; c < m.dims[v]; ++c)
          pv(r, c) =
              ker(base[v] + static_cast<std::size_t>(r * m.dims[v] + c), k);
      phi.push_back(std::move(pv));
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

template <class K>
Int hom_dim(const Rep<K>& m, const Rep<K>& nrep) {
  return hom_space(m, nrep).dim;
}

/** Per-vertex spanning columns of an arrow-invariant subspace tuple. */
template <class K>
using SubspaceTuple = std::vector<Matrix<K>>;

/** The subrepresentation on an invariant subspace tuple (columns span). */
template <class K>
Rep<K> sub_rep(const Rep<K>& m, const SubspaceTuple<K>& s) {
  Rep<K> r;
  r.alg = m.alg;
  const Quiver& q = m.alg->quiver();
  r.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) r.dims[v] = static_cast<Int>(s[v].cols());
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int u = q.arrows[ai].source, v = q.arrows[ai].target;
    auto x = solve(s[v], m.mats[ai] * s[u]);
    require(x.has_value(), ErrorCode::DimensionMismatch,
            "sub_rep: subspace tuple is not arrow-invariant");
    r.mats.push_back(std::move(*x));
  }
  return r;
}

/** Result of a quotient construction: the representation together with the
 *  per-vertex projection matrices M(v) -> Q(v). */
template <class K>
struct QuotientRep {
  Rep<K> rep;
  std::vector<Matrix<K>> projection;
};

/** The quotient of M by an invariant subspace tuple. */
template <class K>
QuotientRep<K> quotient_rep(const Rep<K>& m, const SubspaceTuple<K>& s) {
  const Quiver& q = m.alg->quiver();
  QuotientRep<K> out;
  out.rep.alg = m.alg;
  out.rep.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) {
    // Complete the subspace basis to a basis of M(v) with unit vectors.
    const std::size_t d = static_cast<std::size_t>(m.dims[v]);
    Matrix<K> t = s[v];
    const std::size_t sd = t.cols();
    require(rank(t) == sd, ErrorCode::DimensionMismatch,
            "quotient_rep: subspace columns not independent");
    for (std::size_t j = 0; j < d && t.cols() < d; ++j) {
      Matrix<K> e(d, 1);
      e(j, 0) = K(1);
      Matrix<K> cand = Matrix<K>::hstack(t, e);
      if (rank(cand) > t.cols()) t = cand;
    }
    require(t.cols() == d, ErrorCode::DimensionMismatch,
            "quotient_rep: failed to complete basis");
    auto ti = inverse(t);
    require(ti.has_value(), ErrorCode::DimensionMismatch,
            "quotient_rep: completed basis not invertible");
    out.rep.dims[v] = static_cast<Int>(d - sd);
    // Quotient coordinates = last rows of T^{-1}.
    out.projection.push_back(ti->block(sd, 0, d - sd, d));
  }
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    int u = q.arrows[ai].source, v = q.arrows[ai].target;
    // The action descends: pi_v M(a) kills the subspace at u, so composing
    // with any section of pi_u gives a well-defined quotient matrix.
    auto section =
        solve(out.projection[u], Matrix<K>::identity(out.rep.dims[u]));
    require(section.has_value(), ErrorCode::DimensionMismatch,
            "quotient_rep: projection not surjective");
    out.rep.mats.push_back(out.projection[v] * m.mats[ai] * *section);
  }
  return out;
}

/** Kernel of a morphism (per-vertex matrices phi_v: M(v) -> N(v) commuting
 *  with the arrow actions) as a subrepresentation of M. */
template <class K>
Rep<K> kernel_rep(const Rep<K>& m, const std::vector<Matrix<K>>& phi) {
  SubspaceTuple<K> s;
  for (int v = 0; v < m.n(); ++v) s.push_back(nullspace(phi[v]));
  return sub_rep(m, s);
}

/** A column basis of the column space of a matrix. */
template <class K>
Matrix<K> column_space(const Matrix<K>& p) {
  Rref<K> r = rref(p.transpose());
  Matrix<K> span(p.rows(), r.pivots.size());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t i = 0; i < p.rows(); ++i) span(i, k) = r.mat(k, i);
  return span;
}

/** Image of a morphism phi: M -> N as a subrepresentation of N. */
template <class K>
Rep<K> image_rep(const Rep<K>& nrep, const std::vector<Matrix<K>>& phi) {
  SubspaceTuple<K> s;
  for (int v = 0; v < nrep.n(); ++v) s.push_back(column_space(phi[v]));
  return sub_rep(nrep, s);
}

/** Radical subspace tuple: rad M(v) = sum of arrow images into v. */
template <class K>
SubspaceTuple<K> radical_spans(const Rep<K>& m) {
  const Quiver& q = m.alg->quiver();
  SubspaceTuple<K> s;
  for (int v = 0; v < q.n; ++v) {
    Matrix<K> cat(m.dims[v], 0);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
      if (q.arrows[ai].target == v) cat = Matrix<K>::hstack(cat, m.mats[ai]);
    s.push_back(column_space(cat));
  }
  return s;
}

/** The semisimple quotient M / rad M (all arrow matrices vanish on it). */
template <class K>
QuotientRep<K> top_rep(const Rep<K>& m) {
  return quotient_rep(m, radical_spans(m));
}

/**
 * Random representation of the given dimension vector, respecting relations.
 *
 * Arrows are sampled in order; when an arrow completes a relation, the
 * relation must be linear in that arrow (each term uses it at most once),
 * and the matrix is drawn from the affine solution space: one particular
 * solution plus a random kernel combination with entries in [-bound, bound].
 */
template <class K>
Rep<K> random_rep(const AlgebraBasis& alg, const IVec& dims, Rng& rng,
                  Int bound) {
  const Quiver& q = alg.quiver();
  Rep<K> m = semisimple_rep<K>(alg, dims);
  // Relation r becomes active when its largest arrow index is sampled.
  const auto& rels = alg.relations().relations;
  std::vector<int> active_at(rels.size(), -1);
  for (std::size_t ri = 0; ri < rels.size(); ++ri)
    for (const auto& [p, c] : rels[ri].terms) {
      (void)c;
      for (int aidx : p.arrows)
        active_at[ri] = std::max(active_at[ri], aidx);
    }

  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Int dt = dims[q.arrows[ai].target];
    const Int ds = dims[q.arrows[ai].source];
    const std::size_t unknowns = static_cast<std::size_t>(dt * ds);
    std::vector<std::vector<K>> lhs_rows;
    std::vector<K> rhs;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      if (active_at[ri] != static_cast<int>(ai)) continue;
      const PathCombo& r = rels[ri];
      const Int dsrc = dims[r.source], dtgt = dims[r.target];
      // Split the relation into a constant part and a part linear in M(a).
      Matrix<K> constant(dtgt, dsrc);
      std::vector<std::pair<Matrix<K>, Matrix<K>>> linear;  // (post, pre)
      std::vector<K> lincoeff;
      for (const auto& [p, coeff] : r.terms) {
        int uses = 0;
        for (int x : p.arrows) uses += (x == static_cast<int>(ai));
        require(uses <= 1, ErrorCode::BudgetExceeded,
                "random_rep: relation is nonlinear in a sampled arrow");
        if (uses == 0) {
          Matrix<K> pa = path_action(m, p);
          K fc = field_coeff<K>(coeff);
          for (std::size_t rr = 0; rr < pa.rows(); ++rr)
            for (std::size_t cc = 0; cc < pa.cols(); ++cc)
              constant(rr, cc) += fc * pa(rr, cc);
          continue;
        }
        std::size_t pos = 0;
        while (p.arrows[pos] != static_cast<int>(ai)) ++pos;
        Path pre{p.source, q.arrows[ai].source,
                 std::vector<int>(p.arrows.begin(), p.arrows.begin() + pos)};
        Path post{q.arrows[ai].target, p.target,
                  std::vector<int>(p.arrows.begin() + pos + 1,
                                   p.arrows.end())};
        linear.push_back({path_action(m, post), path_action(m, pre)});
        lincoeff.push_back(field_coeff<K>(coeff));
      }
      // One equation per entry of the (dtgt x dsrc) relation matrix.
      for (Int p = 0; p < dtgt; ++p)
        for (Int qq = 0; qq < dsrc; ++qq) {
          std::vector<K> row(unknowns, K(0));
          for (std::size_t t = 0; t < linear.size(); ++t) {
            const auto& [post, pre] = linear[t];
            for (Int r1 = 0; r1 < dt; ++r1)
              for (Int c1 = 0; c1 < ds; ++c1)
                row[static_cast<std::size_t>(r1 * ds + c1)] +=
                    lincoeff[t] * post(p, r1) * pre(c1, qq);
          }
          lhs_rows.push_back(std::move(row));
          rhs.push_back(-constant(p, qq));
        }
    }

    Matrix<K> x(dt, ds);
    if (lhs_rows.empty()) {
      for (Int r1 = 0; r1 < dt; ++r1)
        for (Int c1 = 0; c1 < ds; ++c1)
          x(r1, c1) = K(rng.uniform(-bound, bound));
    } else {
      Matrix<K> lhs(lhs_rows.size(), unknowns);
      Matrix<K> b(lhs_rows.size(), 1);
      for (std::size_t i = 0; i < lhs_rows.size(); ++i) {
        for (std::size_t j = 0; j < unknowns; ++j) lhs(i, j) = lhs_rows[i][j];
        b(i, 0) = rhs[i];
      }
      auto part = solve(lhs, b);
      require(part.has_value(), ErrorCode::BudgetExceeded,
              "random_rep: relation system inconsistent");
      Matrix<K> ker = nullspace(lhs);
      std::vector<K> coeffs;
      for (std::size_t k = 0; k < ker.cols(); ++k)
        coeffs.push_back(K(rng.uniform(-bound, bound)));
      for (Int r1 = 0; r1 < dt; ++r1)
        for (Int c1 = 0; c1 < ds; ++c1) {
          std::size_t idx = static_cast<std::size_t>(r1 * ds + c1);
          K val = (*part)(idx, 0);
          for (std::size_t k = 0; k < ker.cols(); ++k)
            val += coeffs[k] * ker(idx, k);
          x(r1, c1) = val;
        }
    }
    m.mats[ai] = std::move(x);
  }
  validate(m);
  return m;
}

/** Entrywise reduction of a rational representation mod P. */
template <long long P>
Rep<Fp<P>> reduce_rep(const Rep<Rat>& m) {
  Rep<Fp<P>> r;
  r.alg = m.alg;
  r.dims = m.dims;
  for (const auto& mat : m.mats) r.mats.push_back(reduce_mod<P>(mat));
  return r;
}

/**
 * First-syzygy data of M: a projective cover P0 -> M (per-vertex matrices)
 * and its kernel Omega as a representation.
 */
template <class K>
struct Syzygy {
  Rep<K> cover;                // direct sum of projectives covering top(M)
  std::vector<Matrix<K>> map;  // cover(v) -> M(v), surjective
  Rep<K> omega;                // kernel of the cover map
};

/**
 * Minimal projective cover via the top of M: lift one generator per simple
 * summand of top(M) and extend projectively along the path basis.
 */
template <class K>
Syzygy<K> first_syzygy(const Rep<K>& m) {
  const AlgebraBasis& alg = *m.alg;
  const Quiver& q = alg.quiver();
  QuotientRep<K> top = top_rep(m);

  Syzygy<K> out;
  out.cover = zero_rep<K>(alg);
  std::vector<Matrix<K>> maps(q.n);
  for (int v = 0; v < q.n; ++v) maps[v] = Matrix<K>(m.dims[v], 0);

  for (int v = 0; v < q.n; ++v) {
    auto lift = solve(top.projection[v], Matrix<K>::identity(top.rep.dims[v]));
    require(lift.has_value(), ErrorCode::DimensionMismatch,
            "first_syzygy: projection not surjective");
    for (Int g = 0; g < top.rep.dims[v]; ++g) {
      Rep<K> pv = projective_rep<K>(alg, v);
      // The cover map on this P_v summand sends the basis path p of P_v(w)
      // to M(p)(x), x being the lifted generator in M(v).
      Matrix<K> x = lift->block(0, g, m.dims[v], 1);
      out.cover = direct_sum(out.cover, pv);
      for (int w = 0; w < q.n; ++w) {
        const auto& basis = alg.paths(v, w);
        Matrix<K> f(m.dims[w], basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
          f.set_block(0, c, path_action(m, basis[c]) * x);
        maps[w] = Matrix<K>::hstack(maps[w], f);
      }
    }
  }
  out.map = maps;
  for (int v = 0; v < q.n; ++v)
    require(rank(maps[v]) == static_cast<std::size_t>(m.dims[v]),
            ErrorCode::DimensionMismatch, "first_syzygy: cover not onto");
  out.omega = kernel_rep(out.cover, maps);
  return out;
}

/**
 * dim Ext^1(M, N) computed from the projective presentation of M:
 * ext1 = hom(Omega, N) - hom(P0, N) + hom(M, N).
 */
template <class K>
Int ext1_dim(const Rep<K>& m, const Rep<K>& nrep) {
  if (m.total_dim() == 0 || nrep.total_dim() == 0) return 0;
  Syzygy<K> syz = first_syzygy(m);
  return hom_dim(syz.omega, nrep) - hom_dim(syz.cover, nrep) +
         hom_dim(m, nrep);
}

}  // namespace qtrop
