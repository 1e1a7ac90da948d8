#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtrop/fixtures.hpp"
#include "qtrop/representation.hpp"

using namespace qtrop;
namespace fx = qtrop::fixtures;

TEST_CASE("projective and injective realizations on the two-vertex line") {
  const AlgebraBasis& alg = fx::a2_algebra();
  Rep<Rat> p0 = projective_rep<Rat>(alg, 0);
  CHECK(p0.dims == IVec{1, 1});
  CHECK(p0.mats[0](0, 0) == 1);
  Rep<Rat> p1 = projective_rep<Rat>(alg, 1);
  CHECK(p1.dims == IVec{0, 1});
  Rep<Rat> i0 = injective_rep<Rat>(alg, 0);
  CHECK(i0.dims == IVec{1, 0});
  Rep<Rat> i1 = injective_rep<Rat>(alg, 1);
  CHECK(i1.dims == IVec{1, 1});
  CHECK(i1.mats[0](0, 0) == 1);
  for (const auto& r : {p0, p1, i0, i1}) validate(r);
}

TEST_CASE("hom between projectives and injectives counts basis paths") {
  for (const AlgebraBasis* alg :
       {&fx::ztriangle_algebra(), &fx::tricycle4_algebra(),
        &fx::two_one_algebra()}) {
    for (int i = 0; i < alg->n(); ++i) {
      Rep<Rat> pi = projective_rep<Rat>(*alg, i);
      Rep<Rat> ii = injective_rep<Rat>(*alg, i);
      validate(pi);
      validate(ii);
      for (int j = 0; j < alg->n(); ++j) {
        Rep<Rat> pj = projective_rep<Rat>(*alg, j);
        Rep<Rat> ij = injective_rep<Rat>(*alg, j);
        Int expected = static_cast<Int>(alg->paths(j, i).size());
        CHECK(hom_dim(pi, pj) == expected);
        CHECK(hom_dim(ii, ij) == expected);
      }
    }
  }
}

TEST_CASE("hom from a projective / to an injective reads off a fiber") {
  Rep<Rat> m = fx::kron3_rep33();
  const AlgebraBasis& alg = fx::kron3_algebra();
  for (int i = 0; i < 2; ++i) {
    CHECK(hom_dim(projective_rep<Rat>(alg, i), m) == m.dims[i]);
    CHECK(hom_dim(m, injective_rep<Rat>(alg, i)) == m.dims[i]);
  }

  Rng rng(7);
  const AlgebraBasis& zt = fx::ztriangle_algebra();
  Rep<Rat> r = random_rep<Rat>(zt, {2, 3, 2}, rng, 10);
  for (int i = 0; i < 3; ++i) {
    CHECK(hom_dim(projective_rep<Rat>(zt, i), r) == r.dims[i]);
    CHECK(hom_dim(r, injective_rep<Rat>(zt, i)) == r.dims[i]);
  }
}

TEST_CASE("simples: hom is diagonal, ext counts arrows") {
  const AlgebraBasis& alg = fx::a2_algebra();
  Rep<Rat> s0 = simple_rep<Rat>(alg, 0);
  Rep<Rat> s1 = simple_rep<Rat>(alg, 1);
  CHECK(hom_dim(s0, s0) == 1);
  CHECK(hom_dim(s0, s1) == 0);
  CHECK(hom_dim(s1, s0) == 0);
  CHECK(ext1_dim(s0, s1) == 1);  // the arrow 1 -> 2
  CHECK(ext1_dim(s1, s0) == 0);
  CHECK(ext1_dim(s0, s0) == 0);

  Syzygy<Rat> syz = first_syzygy(s0);
  CHECK(syz.cover.dims == IVec{1, 1});  // P_1
  CHECK(syz.omega.dims == IVec{0, 1});  // S_2
}

TEST_CASE("hom and ext match the Euler form on acyclic algebras") {
  Rng rng(11);
  struct Case {
    const AlgebraBasis* alg;
    IVec da, db;
  };
  std::vector<Case> cases = {
      {&fx::a2_algebra(), {2, 1}, {1, 3}},
      {&fx::a3_algebra(), {1, 2, 1}, {2, 1, 2}},
      {&fx::kron3_algebra(), {1, 1}, {2, 1}},
      {&fx::two_one_algebra(), {1, 2, 1}, {2, 2, 1}},
  };
  for (const auto& c : cases) {
    Rep<Rat> m = random_rep<Rat>(*c.alg, c.da, rng, 10);
    Rep<Rat> n = random_rep<Rat>(*c.alg, c.db, rng, 10);
    Int euler = euler_form(c.alg->quiver(), c.da, c.db);
    CHECK(hom_dim(m, n) - ext1_dim(m, n) == euler);
  }
}

TEST_CASE("hom is additive over direct sums") {
  Rng rng(3);
  const AlgebraBasis& alg = fx::two_one_algebra();
  Rep<Rat> a = random_rep<Rat>(alg, {1, 2, 1}, rng, 8);
  Rep<Rat> b = random_rep<Rat>(alg, {2, 1, 0}, rng, 8);
  Rep<Rat> c = random_rep<Rat>(alg, {1, 1, 2}, rng, 8);
  Rep<Rat> ab = direct_sum(a, b);
  validate(ab);
  CHECK(ab.dims == IVec{3, 3, 1});
  CHECK(hom_dim(ab, c) == hom_dim(a, c) + hom_dim(b, c));
  CHECK(hom_dim(c, ab) == hom_dim(c, a) + hom_dim(c, b));
}

TEST_CASE("radical and top of the relation-algebra projectives") {
  const AlgebraBasis& alg = fx::ztriangle_algebra();
  Rep<Rat> p0 = projective_rep<Rat>(alg, 0);
  CHECK(p0.dims == IVec{1, 1, 1});
  CHECK(p0.mats[1].is_zero());  // b kills the image of a

  SubspaceTuple<Rat> rad = radical_spans(p0);
  Rep<Rat> radrep = sub_rep(p0, rad);
  CHECK(radrep.dims == IVec{0, 1, 1});
  // The radical is semisimple here: b acts by zero on it.
  CHECK(radrep.mats[1].is_zero());

  QuotientRep<Rat> top = top_rep(p0);
  CHECK(top.rep.dims == IVec{1, 0, 0});

  // The regular representation has dimension vector (1, 2, 3).
  Rep<Rat> reg = fx::ztriangle_regular_rep();
  CHECK(reg.dims == IVec{1, 2, 3});

  // The injective at the sink kills the first cycle arrow.
  Rep<Rat> i2 = injective_rep<Rat>(alg, 2);
  CHECK(i2.dims == IVec{1, 1, 1});
  CHECK(i2.mats[0].is_zero());
  CHECK(i2.mats[1](0, 0) == 1);
  CHECK(i2.mats[2](0, 0) == 1);
}

TEST_CASE("kernel, image, and quotient of a morphism") {
  const AlgebraBasis& alg = fx::a2_algebra();
  Rep<Rat> p0 = projective_rep<Rat>(alg, 0);
  Rep<Rat> p1 = projective_rep<Rat>(alg, 1);
  HomBasis<Rat> h = hom_space(p1, p0);
  REQUIRE(h.dim == 1);
  Rep<Rat> img = image_rep(p0, h.basis[0]);
  CHECK(img.dims == IVec{0, 1});
  Rep<Rat> ker = kernel_rep(p1, h.basis[0]);
  CHECK(ker.total_dim() == 0);

  // Quotient of P_1 by its radical S_2.
  SubspaceTuple<Rat> s = {Matrix<Rat>(1, 0), Matrix<Rat>::identity(1)};
  QuotientRep<Rat> quo = quotient_rep(p0, s);
  CHECK(quo.rep.dims == IVec{1, 0});
  validate(quo.rep);
}

TEST_CASE("random representations respect relations") {
  Rng rng(42);
  const AlgebraBasis& zt = fx::ztriangle_algebra();
  for (int trial = 0; trial < 5; ++trial) {
    Rep<Rat> m = random_rep<Rat>(zt, {2, 3, 2}, rng, 10);
    // validate() ran inside; double-check the defining product vanishes.
    CHECK((m.mats[1] * m.mats[0]).is_zero());
  }
  const AlgebraBasis& tc = fx::tricycle4_algebra();
  for (int trial = 0; trial < 5; ++trial) {
    Rep<Rat> m = random_rep<Rat>(tc, {1, 1, 2, 1}, rng, 10);
    CHECK((m.mats[1] * m.mats[0]).is_zero());  // b after a
    CHECK((m.mats[2] * m.mats[1]).is_zero());  // c after b
    CHECK((m.mats[0] * m.mats[2]).is_zero());  // a after c
  }
  // Prime-field sampling works the same way.
  Rep<F5> f = random_rep<F5>(zt, {2, 2, 2}, rng, 4);
  CHECK((f.mats[1] * f.mats[0]).is_zero());
}

TEST_CASE("reduction mod p preserves hom dimension for the bundled example") {
  Rep<Rat> m = fx::kron3_rep33();
  Rep<F5> m5 = reduce_rep<5>(m);
  Rep<F7> m7 = reduce_rep<7>(m);
  validate(m5);
  validate(m7);
  CHECK(hom_dim(m5, m5) == hom_dim(m, m));
  CHECK(hom_dim(m7, m7) == hom_dim(m, m));
}

TEST_CASE("representation validation failures") {
  const AlgebraBasis& zt = fx::ztriangle_algebra();
  Rep<Rat> bad = semisimple_rep<Rat>(zt, {1, 1, 1});
  bad.mats[0](0, 0) = 1;
  bad.mats[1](0, 0) = 1;  // now b.a != 0
  CHECK_THROWS_AS(validate(bad), Error);
  CHECK_THROWS_AS(semisimple_rep<Rat>(zt, {1, 1}), Error);
  CHECK_THROWS_AS(semisimple_rep<Rat>(zt, {1, -1, 1}), Error);
}
