#include "qtrop/fixtures.hpp"

namespace qtrop::fixtures {

Quiver a2() { return Quiver{2, {{0, 1, "a"}}}; }

Quiver a3() { return Quiver{3, {{0, 1, "a"}, {1, 2, "b"}}}; }

Quiver kron3() {
  return Quiver{2, {{0, 1, "a"}, {0, 1, "b"}, {0, 1, "c"}}};
}

Quiver two_one() {
  return Quiver{3, {{0, 1, "a"}, {0, 1, "b"}, {1, 2, "c"}}};
}

Quiver ztriangle() {
  return Quiver{3, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}}};
}

RelationSet ztriangle_relations() {
  RelationSet rels;
  Quiver q = ztriangle();
  rels.relations = {make_relation(q, {"a", "b"})};
  return rels;
}

Quiver tricycle4() {
  return Quiver{4,
                {{0, 3, "a"},
                 {3, 2, "b"},
                 {2, 0, "c"},
                 {1, 0, "d"},
                 {1, 2, "e"},
                 {1, 3, "f"}}};
}

RelationSet tricycle4_relations() {
  RelationSet rels;
  Quiver q = tricycle4();
  rels.relations = {make_relation(q, {"a", "b"}), make_relation(q, {"b", "c"}),
                    make_relation(q, {"c", "a"})};
  return rels;
}

const AlgebraBasis& a2_algebra() {
  static AlgebraBasis alg = build_algebra(a2(), {});
  return alg;
}

const AlgebraBasis& a3_algebra() {
  static AlgebraBasis alg = build_algebra(a3(), {});
  return alg;
}

const AlgebraBasis& kron3_algebra() {
  static AlgebraBasis alg = build_algebra(kron3(), {});
  return alg;
}

const AlgebraBasis& two_one_algebra() {
  static AlgebraBasis alg = build_algebra(two_one(), {});
  return alg;
}

const AlgebraBasis& ztriangle_algebra() {
  static AlgebraBasis alg = build_algebra(ztriangle(), ztriangle_relations());
  return alg;
}

const AlgebraBasis& tricycle4_algebra() {
  static AlgebraBasis alg =
      build_algebra(tricycle4(), tricycle4_relations());
  return alg;
}

Rep<Rat> kron3_rep33() {
  Rep<Rat> m = semisimple_rep<Rat>(kron3_algebra(), {3, 3});
  m.mats[0] = from_integers<Rat>({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}});
  m.mats[1] = from_integers<Rat>({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  m.mats[2] = from_integers<Rat>({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  validate(m);
  return m;
}

Rep<Rat> ztriangle_regular_rep() {
  const AlgebraBasis& alg = ztriangle_algebra();
  Rep<Rat> r = projective_rep<Rat>(alg, 0);
  r = direct_sum(r, projective_rep<Rat>(alg, 1));
  r = direct_sum(r, projective_rep<Rat>(alg, 2));
  validate(r);
  return r;
}

std::vector<VertexClusterRow> two_one_vertex_table() {
  return {
      {{0, 3, 0}, {{-1, 0, 0}, {0, 1, -1}, {0, 0, -1}}, {1}},
      {{0, 0, 2}, {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, {2}},
      {{0, 5, 2}, {{-1, 0, 0}, {0, 1, -1}, {0, 1, 0}}, {1, 2}},
      {{2, 3, 2}, {{3, -2, 0}, {2, -1, 0}, {0, 0, 1}}, {2, 1, 0, 1, 0}},
  };
}

IMat two_one_newton_vertices() {
  return {{0, 0, 0}, {0, 3, 0}, {0, 0, 2}, {0, 5, 2}, {2, 3, 2}, {3, 5, 2}};
}

std::vector<VertexClusterRow> tricycle4_vertex_table() {
  return {
      {{0, 0, 0, 1},
       {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, -1, 1}},
       {3}},
      {{0, 0, 1, 0},
       {{-1, 0, 0, 0}, {0, -1, 0, 0}, {-1, 0, 1, 0}, {0, 0, 0, -1}},
       {2}},
      {{0, 0, 1, 2},
       {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 1}},
       {3, 2}},
      {{1, 0, 0, 1},
       {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, -1, 1}},
       {3, 0}},
      {{1, 0, 1, 1},
       {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}},
       {0, 3, 2}},
      {{1, 0, 1, 2},
       {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 1}},
       {3, 0, 2}},
  };
}

IVec tricycle4_dual_weight() { return {0, -3, 1, 1}; }

IVec tricycle4_kernel_dims() { return {1, 1, 1, 2}; }

IMat tricycle4_newton_vertices() {
  return {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 2},
          {1, 0, 0, 1}, {1, 0, 1, 1}, {1, 0, 1, 2}, {1, 1, 1, 2}};
}

IMat tricycle4_B() {
  return {{0, -1, -1, 1}, {1, 0, 1, 1}, {1, -1, 0, -1}, {-1, -1, 1, 0}};
}

IMat tricycle4_B_after_mu4() {
  return {{0, -1, 0, -1}, {1, 0, 2, -1}, {0, -2, 0, 1}, {1, 1, -1, 0}};
}

std::vector<ConeRow> ztriangle_cone_table() {
  return {
      {{1, 1, 3}, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}},
      {{0, 2, 3}, {{-1, 0, 0}, {-1, 1, 0}, {0, 0, -1}}},
      {{0, 0, 3}, {{1, 0, 0}, {-1, 1, 0}, {0, 0, -1}}},
      {{0, 2, 1}, {{-1, 0, 0}, {0, -1, 0}, {-1, -1, 1}}},
      {{1, 2, 2}, {{1, 0, 0}, {0, -1, 0}, {-1, -1, 1}}},
      {{1, 1, 1}, {{-1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}, {-1, -1, 1}}},
      {{0, 1, 0}, {{1, 0, 0}, {-1, -1, 1}, {-1, 0, 1}}},
  };
}

IMat ztriangle_newton_vertices() {
  return {{0, 0, 0}, {1, 2, 3}, {1, 1, 3}, {0, 2, 3}, {0, 0, 3},
          {0, 2, 1}, {1, 2, 2}, {1, 1, 1}, {0, 1, 0}};
}

std::vector<FactorSequence> two_one_chain_table() {
  return {
      {{1}, {{3, 5, 2}}},
      {{3, 1}, {{0, 1, 0}, {3, 2, 2}}},
      {{1, 1}, {{2, 3, 2}, {1, 2, 0}}},
      {{2, 1, 1}, {{0, 0, 1}, {2, 3, 0}, {1, 2, 0}}},
      {{3, 2, 3}, {{0, 1, 0}, {0, 1, 1}, {1, 0, 0}}},
      {{2, 5, 3}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}},
  };
}

IMat ztriangle_expected_rays() {
  return {{1, 0, 0},  {0, 1, 0},  {0, 0, 1},   {-1, 0, 0},
          {0, -1, 0}, {0, 0, -1}, {1, -1, -1}, {0, 1, -1},
          {1, 0, -1}, {1, -1, 0}, {1, 1, -1}};
}

}  // namespace qtrop::fixtures
