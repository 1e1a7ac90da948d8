// qtrop — exact tropical F-polynomials, Newton polytopes, and cluster
// structures of quiver representations.
//
// Exit codes: 0 pass, 1 check failed, 2 input error, 3 budget exceeded.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qtrop/cluster.hpp"
#include "qtrop/error.hpp"
#include "qtrop/fixtures.hpp"
#include "qtrop/hereditary.hpp"
#include "qtrop/io.hpp"
#include "qtrop/polytope.hpp"
#include "qtrop/presentation.hpp"
#include "qtrop/quiver.hpp"
#include "qtrop/rational.hpp"
#include "qtrop/representation.hpp"
#include "qtrop/subrep.hpp"

namespace fx = qtrop::fixtures;

namespace {

using namespace qtrop;

struct Opts {
  std::string input;
  std::string output;
  int field = 5;
  Int budget = kDefaultSubrepBudget;
  Int seqBudget = kDefaultSequenceBudget;
  int samples = 5;
  Int coeffBound = 100;
  std::uint64_t rngSeed = 0;
  int depth = 10;
  Int normBound = 20;
  Int boxBound = 2;
  int jobs = 1;
  int witnessMax = 0;
  std::string route;
  bool dual = false;
  std::string example;
};

SampleInfo sample_info(const Opts& o) {
  return SampleInfo{o.samples, o.coeffBound, o.rngSeed};
}

/** Independent per-item stream so results do not depend on --jobs. */
Rng item_rng(const Opts& o, std::size_t item) {
  return Rng(o.rngSeed + 0x9e3779b97f4a7c15ULL * (item + 1));
}

/** Runs body(0..n-1) on up to `jobs` threads; rethrows the first failure. */
void parallel_for(int jobs, std::size_t n,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t width =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (width <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr firstError;
  std::mutex errorLock;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> hold(errorLock);
          if (!firstError) firstError = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (firstError) std::rethrow_exception(firstError);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::ParseError, "cannot write file: " + path);
  out << text;
  require(out.good(), ErrorCode::ParseError, "cannot write file: " + path);
}

AlgebraBasis doc_algebra(const InputDoc& doc) {
  require(doc.hasQuiver, ErrorCode::EmptyInput, "document has no quiver");
  return build_algebra(doc.quiver, doc.relations);
}

SubrepLattice oracle_lattice(const Rep<Rat>& m, const Opts& o) {
  if (o.field == 7) return subrep_lattice<7>(reduce_rep<7>(m), o.budget);
  require(o.field == 5, ErrorCode::ParseError, "unsupported field (use 5 or 7)");
  return subrep_lattice<5>(reduce_rep<5>(m), o.budget);
}

Int vec_total(const IVec& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

/** Kernel of a sampled injective copresentation of weight δ̌; among
 *  `samples` draws keeps the smallest kernel (the generic one). */
template <class K>
Rep<K> sampled_kernel_rep(const AlgebraBasis& alg, const IVec& dcheck,
                          Rng& rng, const SampleInfo& info) {
  require(info.samples >= 1, ErrorCode::EmptyInput,
          "sampled kernel: needs at least one sample");
  std::optional<Rep<K>> best;
  for (int s = 0; s < info.samples; ++s) {
    Presentation d = sample_presentation(alg, inj_weight(dcheck), rng,
                                         info.coeffBound);
    Rep<K> ker = presentation_kernel<K>(d);
    if (!best || std::make_pair(vec_total(ker.dims), ker.dims) <
                     std::make_pair(vec_total(best->dims), best->dims))
      best = std::move(ker);
  }
  return *best;
}

std::string format_sequence(const std::vector<int>& seq) {
  IVec oneBased;
  for (int k : seq) oneBased.push_back(k + 1);
  return format_ivec(oneBased);
}

IMat sorted_rows(IMat rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

// --- Polytope source selection ---------------------------------------------

struct PolytopeReport {
  Polytope p;
  bool sampled = false;
};

/** Module for the sampled routes: the document's matrices when present,
 *  else the kernel of a sampled copresentation of its injective weight,
 *  else a random representation of its dimension vector. */
Rep<Rat> document_module(const InputDoc& doc, const AlgebraBasis& alg,
                         Rng& rng, const SampleInfo& info) {
  if (!doc.matrices.empty()) return doc_to_rep(doc, alg);
  for (const Weight& w : doc.weights)
    if (w.role == Weight::Role::Injective)
      return sampled_kernel_rep<Rat>(alg, w.entries, rng, info);
  require(!doc.dims.empty(), ErrorCode::EmptyInput,
          "document carries no matrices, injective weight, or dims");
  return random_rep<Rat>(alg, doc.dims, rng, info.coeffBound);
}

PolytopeReport select_polytope(const InputDoc& doc, const AlgebraBasis& alg,
                               const Opts& o) {
  PolytopeReport out;
  if (o.route == "oracle") {
    Rep<Rat> m = doc_to_rep(doc, alg);
    SubrepLattice lat = oracle_lattice(m, o);
    out.p = o.dual ? newton_polytope_dual(lat) : newton_polytope(lat);
    return out;
  }
  require(!o.dual, ErrorCode::ParseError,
          "--dual requires the oracle route");
  if (o.route == "hereditary") {
    require(alg.relations().relations.empty(), ErrorCode::NonAdmissible,
            "hereditary route requires a relation-free quiver");
    require(!doc.dims.empty(), ErrorCode::EmptyInput,
            "hereditary route needs a dims line");
    GenericExtTable table(doc.quiver);
    out.p = table.newton(doc.dims);
    return out;
  }
  require(o.route == "cluster", ErrorCode::ParseError,
          "unknown route: " + o.route);
  Rng rng(o.rngSeed);
  const SampleInfo info = sample_info(o);
  Rep<Rat> m = document_module(doc, alg, rng, info);
  auto homFn = [&](const IVec& delta) {
    return generic_hom_e(alg, proj_weight(delta), m, rng, info).hom;
  };
  out.p = generic_newton_via_clusters(homFn, doc.quiver.exchange_matrix(),
                                      o.depth, o.normBound);
  out.sampled = true;
  return out;
}

// --- Subcommand bodies ------------------------------------------------------

std::string run_fpoly(const Opts& o) {
  InputDoc doc = load_input(o.input);
  AlgebraBasis alg = doc_algebra(doc);
  Rep<Rat> m = doc_to_rep(doc, alg);
  require(!doc.weights.empty(), ErrorCode::EmptyInput,
          "fpoly: document has no weight lines");
  SubrepLattice lat = oracle_lattice(m, o);

  std::ostringstream out;
  out << "fpoly field " << o.field << "\n";
  if (o.witnessMax > 0) out << write_provenance(sample_info(o));

  struct Row {
    Int value = 0;
    int witness = 0;  // 0 = none found up to witnessMax
  };
  std::vector<Row> rows(doc.weights.size());
  const SampleInfo info = sample_info(o);
  parallel_for(o.jobs, doc.weights.size(), [&](std::size_t i) {
    const Weight& w = doc.weights[i];
    Row r;
    r.value = w.role == Weight::Role::Projective
                  ? tropical_f(lat, w.entries)
                  : tropical_f_dual(lat, w.entries);
    if (o.witnessMax > 0) {
      Rng rng = item_rng(o, i);
      for (int n = 1; n <= o.witnessMax; ++n) {
        Weight scaled{scale(n, w.entries), w.role};
        Int h = generic_hom_e(alg, scaled, m, rng, info).hom;
        if (h == n * r.value) {
          r.witness = n;
          break;
        }
      }
    }
    rows[i] = r;
  });

  for (std::size_t i = 0; i < doc.weights.size(); ++i) {
    const Weight& w = doc.weights[i];
    const char* role = w.role == Weight::Role::Projective ? "proj" : "inj";
    out << "f " << role << " " << format_ivec(w.entries) << " = "
        << rows[i].value;
    if (o.witnessMax > 0) {
      if (rows[i].witness > 0)
        out << " witness n = " << rows[i].witness;
      else
        out << " witness none <= " << o.witnessMax;
    }
    out << "\n";
  }
  return out.str();
}

std::string run_polytope_command(const Opts& o, bool fan, bool edges) {
  InputDoc doc = load_input(o.input);
  AlgebraBasis alg = doc_algebra(doc);
  PolytopeReport r = select_polytope(doc, alg, o);
  std::string body;
  if (edges)
    body = write_edge_quiver(edge_quiver(r.p));
  else if (fan)
    body = write_fan(r.p);
  else
    body = write_polytope(r.p);
  if (r.sampled) return write_provenance(sample_info(o)) + body;
  return body;
}

std::string run_hom_e(const Opts& o) {
  InputDoc doc = load_input(o.input);
  AlgebraBasis alg = doc_algebra(doc);
  Rep<Rat> m = doc_to_rep(doc, alg);
  require(!doc.weights.empty(), ErrorCode::EmptyInput,
          "hom-e: document has no weight lines");
  const SampleInfo info = sample_info(o);

  std::vector<HomEResult> rows(doc.weights.size());
  parallel_for(o.jobs, doc.weights.size(), [&](std::size_t i) {
    Rng rng = item_rng(o, i);
    rows[i] = generic_hom_e(alg, doc.weights[i], m, rng, info);
  });

  std::ostringstream out;
  out << "hom-e\n" << write_provenance(info);
  for (std::size_t i = 0; i < doc.weights.size(); ++i) {
    const Weight& w = doc.weights[i];
    const char* role = w.role == Weight::Role::Projective ? "proj" : "inj";
    out << "hom " << role << " " << format_ivec(w.entries) << " = "
        << rows[i].hom << " e = " << rows[i].e << "\n";
  }
  return out.str();
}

std::string run_cluster_search(const Opts& o) {
  InputDoc doc = load_input(o.input);
  require(doc.hasQuiver, ErrorCode::EmptyInput, "document has no quiver");
  auto clusters =
      cluster_search(doc.quiver.exchange_matrix(), o.depth, o.normBound);
  return write_clusters(clusters);
}

std::string run_exchange_quiver(const Opts& o) {
  InputDoc doc = load_input(o.input);
  AlgebraBasis alg = doc_algebra(doc);
  Rng rng(o.rngSeed);
  const SampleInfo info = sample_info(o);
  std::vector<ClusterRecord> clusters;
  if (o.route == "search")
    clusters =
        cluster_search(doc.quiver.exchange_matrix(), o.depth, o.normBound);
  else if (o.route == "rigidity")
    clusters = rigid_clusters(alg, o.boxBound, rng, info);
  else
    fail(ErrorCode::ParseError, "unknown route: " + o.route);
  ExchangeGraph g = exchange_quiver(alg, clusters, rng, info);
  return write_provenance(info) + write_exchange_graph(g);
}

std::string run_pairing(const Opts& o) {
  InputDoc doc = load_input(o.input);
  AlgebraBasis alg = doc_algebra(doc);
  require(alg.relations().relations.empty(), ErrorCode::NonAdmissible,
          "pairing requires a relation-free quiver");
  const IVec* a = nullptr;
  const Weight* dcheck = nullptr;
  for (const Weight& w : doc.weights) {
    if (w.role == Weight::Role::Projective && a == nullptr) a = &w.entries;
    if (w.role == Weight::Role::Injective && dcheck == nullptr) dcheck = &w;
  }
  require(a != nullptr && dcheck != nullptr, ErrorCode::EmptyInput,
          "pairing needs one proj weight (a) and one inj weight");
  GenericExtTable table(doc.quiver);
  Rng rng(o.rngSeed);
  const SampleInfo info = sample_info(o);
  FgPairing r = fg_pairing_acyclic(table, alg, *a, *dcheck,
                                   doc.quiver.exchange_matrix(), rng, info);
  std::ostringstream out;
  out << "pairing\n" << write_provenance(info);
  out << "a " << format_ivec(*a) << "\n";
  out << "dual-weight " << format_ivec(dcheck->entries) << "\n";
  out << "delta " << format_ivec(r.delta) << "\n";
  out << "hom sampled = " << r.homSampled << "\n";
  out << "hom tropical = " << r.tropical << "\n";
  out << "routes " << (r.homSampled == r.tropical ? "agree" : "disagree")
      << "\n";
  out << "value = " << r.value << "\n";
  return out.str();
}

std::string run_schur_seq(const Opts& o) {
  InputDoc doc = load_input(o.input);
  require(doc.hasQuiver, ErrorCode::EmptyInput, "document has no quiver");
  require(doc.relations.relations.empty(), ErrorCode::NonAdmissible,
          "schur-seq requires a relation-free quiver");
  require(!doc.dims.empty(), ErrorCode::EmptyInput,
          "schur-seq needs a dims line");
  GenericExtTable table(doc.quiver);
  auto seqs = schur_sequences(table, doc.dims, o.seqBudget);
  std::ostringstream out;
  out << "schur-sequences count " << seqs.size() << "\n";
  for (const SchurSequence& s : seqs) {
    out << "sequence";
    for (std::size_t i = 0; i < s.roots.size(); ++i)
      out << " " << s.coeffs[i] << "*" << format_ivec(s.roots[i]);
    out << "\n";
  }
  return out.str();
}

// --- Example checks ---------------------------------------------------------

bool check_kronecker3(std::ostream& out, const Opts& o) {
  const AlgebraBasis& alg = fx::kron3_algebra();
  Rep<Rat> m = fx::kron3_rep33();
  const IVec delta{1, -1};
  const IVec twice{2, -2};

  Int f5 = tropical_f(subrep_lattice<5>(reduce_rep<5>(m), o.budget), delta);
  Int f7 = tropical_f(subrep_lattice<7>(reduce_rep<7>(m), o.budget), delta);
  Rng rng(o.rngSeed);
  const SampleInfo info = sample_info(o);
  Int h1 = generic_hom_e(alg, proj_weight(delta), m, rng, info).hom;
  Int h2 = generic_hom_e(alg, proj_weight(twice), m, rng, info).hom;

  out << write_provenance(info);
  out << "f proj " << format_ivec(delta) << " = " << f5 << " [field 5]\n";
  out << "f proj " << format_ivec(delta) << " = " << f7 << " [field 7]\n";
  out << "hom proj " << format_ivec(delta) << " = " << h1 << "\n";
  out << "hom proj " << format_ivec(twice) << " = " << h2 << "\n";
  return f5 == 0 && f7 == 0 && h1 == 1 && h2 == 0;
}

bool check_genacyclic(std::ostream& out, const Opts&) {
  Quiver q = fx::two_one();
  GenericExtTable table(q);
  const IVec alpha{3, 5, 2};
  const Polytope& p = table.newton(alpha);

  bool ok = p.vertices == sorted_rows(fx::two_one_newton_vertices());
  out << "vertices " << p.vertices.size() << "\n";
  for (const IVec& v : p.vertices) out << "vertex " << format_ivec(v) << "\n";
  if (!ok) out << "MISMATCH vertex set\n";

  const auto tableRows = fx::two_one_vertex_table();
  const IMat b = q.exchange_matrix();
  int certificate = 0;
  for (const auto& row : tableRows) {
    ++certificate;
    Seed seed = initial_seed(b);
    for (int k : row.sequence) seed = mutate_seed(seed, k);
    bool clusterOk = sorted_rows(seed.g) == sorted_rows(row.cluster);
    IVec h;
    for (const IVec& g : seed.g) h.push_back(support_value(p, g));
    IVec x = vertex_recovery(seed.g, h);
    bool vertexOk = x == row.vertex;
    out << "certificate " << certificate << " sequence "
        << format_sequence(row.sequence) << " vertex " << format_ivec(x)
        << (clusterOk && vertexOk ? " ok" : " MISMATCH") << "\n";
    ok = ok && clusterOk && vertexOk;
  }
  return ok;
}

template <long long P>
bool check_qp4_field(std::ostream& out, const Opts& o) {
  const AlgebraBasis& alg = fx::tricycle4_algebra();
  Rng rng(o.rngSeed);
  const SampleInfo info = sample_info(o);

  // Generic kernels minimize the dimension vector, and degeneration only
  // enlarges the Newton polytope: among the minimal-dims draws keep the one
  // whose polytope the others all contain.
  std::vector<Rep<Fp<P>>> draws;
  std::pair<Int, IVec> bestKey;
  for (int s = 0; s < info.samples; ++s) {
    Presentation d = sample_presentation(alg, inj_weight(fx::tricycle4_dual_weight()),
                                         rng, info.coeffBound);
    Rep<Fp<P>> ker = presentation_kernel<Fp<P>>(d);
    std::pair<Int, IVec> key{vec_total(ker.dims), ker.dims};
    if (draws.empty() || key < bestKey) bestKey = key;
    draws.push_back(std::move(ker));
  }
  std::vector<std::pair<Rep<Fp<P>>, Polytope>> cands;
  for (Rep<Fp<P>>& ker : draws)
    if (std::pair<Int, IVec>{vec_total(ker.dims), ker.dims} == bestKey) {
      Polytope hull = newton_polytope(subrep_lattice<P>(ker, o.budget));
      cands.emplace_back(std::move(ker), std::move(hull));
    }
  std::size_t pick = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size() && minimal; ++j) {
      if (i == j) continue;
      for (const IVec& v : cands[i].second.vertices)
        if (!polytope_contains(cands[j].second, v)) {
          minimal = false;
          break;
        }
    }
    if (minimal) {
      pick = i;
      break;
    }
  }
  const Rep<Fp<P>>& m = cands[pick].first;
  const Polytope& p = cands[pick].second;

  out << write_provenance(info);
  out << "kernel dims " << format_ivec(m.dims) << "\n";
  bool ok = m.dims == fx::tricycle4_kernel_dims();
  if (!ok) out << "MISMATCH kernel dims\n";
  bool vertsOk = p.vertices == sorted_rows(fx::tricycle4_newton_vertices());
  out << "vertices " << p.vertices.size() << "\n";
  for (const IVec& v : p.vertices) out << "vertex " << format_ivec(v) << "\n";
  if (!vertsOk) out << "MISMATCH vertex set\n";
  ok = ok && vertsOk;

  const auto tableRows = fx::tricycle4_vertex_table();
  const IMat b = fx::tricycle4_B();
  int certificate = 0;
  for (const auto& row : tableRows) {
    ++certificate;
    Seed seed = initial_seed(b);
    for (int k : row.sequence) seed = mutate_seed(seed, k);
    bool clusterOk = sorted_rows(seed.g) == sorted_rows(row.cluster);
    // Every cluster weight must be maximized at the row's vertex: the vertex
    // lies in the normal cone selected by the mutation sequence.
    bool coneOk = true;
    for (const IVec& g : seed.g)
      coneOk = coneOk && support_value(p, g) == dot(g, row.vertex);
    out << "certificate " << certificate << " sequence "
        << format_sequence(row.sequence) << " vertex "
        << format_ivec(row.vertex)
        << (clusterOk && coneOk ? " ok" : " MISMATCH") << "\n";
    ok = ok && clusterOk && coneOk;
  }
  return ok;
}

bool check_qp4(std::ostream& out, const Opts& o) {
  if (o.field == 7) return check_qp4_field<7>(out, o);
  require(o.field == 5, ErrorCode::ParseError, "unsupported field (use 5 or 7)");
  return check_qp4_field<5>(out, o);
}

bool check_ab0(std::ostream& out, const Opts& o) {
  const AlgebraBasis& alg = fx::ztriangle_algebra();
  Rep<Rat> m = fx::ztriangle_regular_rep();
  SubrepLattice lat = o.field == 7
                          ? subrep_lattice<7>(reduce_rep<7>(m), o.budget)
                          : subrep_lattice<5>(reduce_rep<5>(m), o.budget);
  Polytope p = newton_polytope(lat);
  bool ok = p.vertices == sorted_rows(fx::ztriangle_newton_vertices());
  out << "vertices " << p.vertices.size() << "\n";
  for (const IVec& v : p.vertices) out << "vertex " << format_ivec(v) << "\n";
  if (!ok) out << "MISMATCH vertex set\n";

  // Printed generator triples are recovered up to sign; each must land in
  // the normal cone of exactly one vertex and span a full-dimensional cone.
  std::set<IVec> matched;
  int row_no = 0;
  for (const auto& row : fx::ztriangle_cone_table()) {
    ++row_no;
    IMat gens;
    for (const IVec& g : row.generators) gens.push_back(neg(g));
    std::vector<IVec> hits;
    for (const IVec& v : p.vertices) {
      Cone c = normal_cone(p, v);
      bool all = true;
      for (const IVec& g : gens) all = all && cone_contains(c, g);
      if (all) hits.push_back(v);
    }
    bool fullDim = cone_dim(Cone{gens, {}}, 3) == 3;
    bool rowOk = hits.size() == 1 && fullDim;
    out << "cone row " << row_no;
    if (hits.size() == 1) {
      out << " vertex " << format_ivec(hits[0]) << (fullDim ? " ok" : "");
      matched.insert(hits[0]);
    }
    out << (rowOk ? "" : " MISMATCH") << "\n";
    ok = ok && rowOk;
  }
  bool bijective = matched.size() == 7 && !matched.count(IVec{0, 0, 0}) &&
                   !matched.count(m.dims);
  if (!bijective) out << "MISMATCH cone rows do not pair with the 7 proper vertices\n";
  ok = ok && bijective;

  Rng rng(o.rngSeed);
  const SampleInfo info = sample_info(o);
  out << write_provenance(info);
  auto clusters = rigid_clusters(alg, o.boxBound, rng, info);
  ExchangeGraph g = exchange_quiver(alg, clusters, rng, info);
  out << "clusters " << clusters.size() << "\n";
  out << "exchange arrows " << g.arrows.size() << "\n";
  bool exchangeOk = clusters.size() == 18 && g.arrows.size() == 27;
  if (!exchangeOk) out << "MISMATCH exchange structure\n";
  return ok && exchangeOk;
}

int run_check_example(const Opts& o) {
  std::ostringstream out;
  out << "check " << o.example << "\n";
  bool pass = false;
  if (o.example == "kronecker3")
    pass = check_kronecker3(out, o);
  else if (o.example == "genacyclic")
    pass = check_genacyclic(out, o);
  else if (o.example == "qp4")
    pass = check_qp4(out, o);
  else if (o.example == "ab0")
    pass = check_ab0(out, o);
  else
    fail(ErrorCode::ParseError, "unknown example: " + o.example);
  out << (pass ? "PASS" : "FAIL") << "\n";
  emit(out.str(), o.output);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qtrop: exact tropical F-polynomials, Newton polytopes, and cluster "
      "structures of quiver representations"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--jobs", o.jobs, "worker threads for per-item commands")
      ->check(CLI::PositiveNumber);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input document")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "write the report to a file");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "oracle field (5 or 7)")
        ->check(CLI::IsMember({5, 7}));
    sub->add_option("--budget", o.budget,
                    "subspace-tuple budget for the oracle");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "presentation samples per value")
        ->check(CLI::PositiveNumber);
    sub->add_option("--coeff-bound", o.coeffBound,
                    "coefficient bound for sampling")
        ->check(CLI::PositiveNumber);
    sub->add_option("--rng-seed", o.rngSeed, "random seed (reproducibility)");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--depth", o.depth, "mutation search depth")
        ->check(CLI::PositiveNumber);
    sub->add_option("--norm-bound", o.normBound,
                    "prune weights with entries beyond this bound")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* fpoly = app.add_subcommand(
      "fpoly", "evaluate the tropical F-polynomial at the document's weights");
  add_input(fpoly);
  add_output(fpoly);
  add_field(fpoly);
  add_sampling(fpoly);
  fpoly->add_option("--witness-nmax", o.witnessMax,
                    "also report the least n with hom(n delta) = n f(delta)");

  CLI::App* newton = app.add_subcommand(
      "newton", "Newton polytope of the document's representation");
  add_input(newton);
  add_output(newton);
  add_field(newton);
  newton->add_flag("--dual", o.dual, "hull of quotient dimension vectors");

  CLI::App* gnewton = app.add_subcommand(
      "generic-newton", "generic Newton polytope of a dimension vector");
  add_input(gnewton);
  add_output(gnewton);
  add_sampling(gnewton);
  add_search(gnewton);
  gnewton->add_option("--route", o.route, "hereditary | cluster")
      ->check(CLI::IsMember({"hereditary", "cluster"}));

  CLI::App* fan =
      app.add_subcommand("fan", "normal fan of a Newton polytope");
  CLI::App* edges =
      app.add_subcommand("edges", "edge quiver of a Newton polytope");
  for (CLI::App* sub : {fan, edges}) {
    add_input(sub);
    add_output(sub);
    add_field(sub);
    add_sampling(sub);
    add_search(sub);
    sub->add_option("--route", o.route, "oracle | hereditary | cluster")
        ->check(CLI::IsMember({"oracle", "hereditary", "cluster"}));
  }

  CLI::App* home = app.add_subcommand(
      "hom-e", "sampled generic hom/e of each weight against the module");
  add_input(home);
  add_output(home);
  add_sampling(home);

  CLI::App* csearch = app.add_subcommand(
      "cluster-search", "enumerate seeds reachable by mutation");
  add_input(csearch);
  add_output(csearch);
  add_search(csearch);

  CLI::App* exq = app.add_subcommand(
      "exchange-quiver", "oriented exchange structure on clusters");
  add_input(exq);
  add_output(exq);
  add_sampling(exq);
  add_search(exq);
  exq->add_option("--route", o.route, "search | rigidity")
      ->check(CLI::IsMember({"search", "rigidity"}));
  exq->add_option("--box-bound", o.boxBound,
                  "entry bound for the rigidity box search")
      ->check(CLI::PositiveNumber);

  CLI::App* pairing = app.add_subcommand(
      "pairing", "duality pairing of a projective weight with a dual weight");
  add_input(pairing);
  add_output(pairing);
  add_sampling(pairing);

  CLI::App* schur = app.add_subcommand(
      "schur-seq", "Schur sequences of the document's dimension vector");
  add_input(schur);
  add_output(schur);
  schur->add_option("--budget", o.seqBudget, "enumeration budget");

  CLI::App* check = app.add_subcommand(
      "check-example", "reproduce a built-in worked example");
  check->add_option("id", o.example, "kronecker3 | genacyclic | qp4 | ab0")
      ->required()
      ->check(CLI::IsMember({"kronecker3", "genacyclic", "qp4", "ab0"}));
  add_output(check);
  add_field(check);
  add_sampling(check);
  check->add_option("--box-bound", o.boxBound,
                    "entry bound for the rigidity box search")
      ->check(CLI::PositiveNumber);

  for (CLI::App* sub : {fpoly, newton, gnewton, fan, edges, home, csearch,
                        exq, pairing, schur, check})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (fpoly->parsed()) {
      emit(run_fpoly(o), o.output);
    } else if (newton->parsed()) {
      o.route = "oracle";
      emit(run_polytope_command(o, false, false), o.output);
    } else if (gnewton->parsed()) {
      if (o.route.empty()) o.route = "hereditary";
      emit(run_polytope_command(o, false, false), o.output);
    } else if (fan->parsed()) {
      if (o.route.empty()) o.route = "oracle";
      emit(run_polytope_command(o, true, false), o.output);
    } else if (edges->parsed()) {
      if (o.route.empty()) o.route = "oracle";
      emit(run_polytope_command(o, false, true), o.output);
    } else if (home->parsed()) {
      emit(run_hom_e(o), o.output);
    } else if (csearch->parsed()) {
      emit(run_cluster_search(o), o.output);
    } else if (exq->parsed()) {
      if (o.route.empty()) o.route = "search";
      emit(run_exchange_quiver(o), o.output);
    } else if (pairing->parsed()) {
      emit(run_pairing(o), o.output);
    } else if (schur->parsed()) {
      emit(run_schur_seq(o), o.output);
    } else if (check->parsed()) {
      return run_check_example(o);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
