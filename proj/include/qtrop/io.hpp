#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtrop/cluster.hpp"
#include "qtrop/polytope.hpp"
#include "qtrop/quiver.hpp"
#include "qtrop/rational.hpp"
#include "qtrop/representation.hpp"

namespace qtrop {

/**
 * In-memory form of one structured-text input document.
 *
 * The format is line-oriented, with `#` starting a comment and a mandatory
 * `qtrop 1` version header. Vertex indices are 1-based in files (matching
 * the printed tables) and 0-based here. Directives:
 *
 *   qtrop 1
 *   quiver <n>
 *   arrow <label> <source> <target>
 *   relation (<coeff> <label>[.<label>...])+
 *   dims <d1> ... <dn>
 *   matrix <label> <rows> <cols>   (followed by <rows> lines of rationals)
 *   weight proj|inj <w1> ... <wn>
 */
struct InputDoc {
  int version = 1;
  bool hasQuiver = false;
  Quiver quiver;
  RelationSet relations;
  IVec dims;  // empty when the document carries no dims line
  std::vector<std::pair<std::string, Matrix<Rat>>> matrices;
  std::vector<Weight> weights;
};

/** Parses a document; throws ParseError with "line L, column C" context. */
InputDoc parse_input(const std::string& text);

/** Reads and parses a file; throws ParseError when it cannot be read. */
InputDoc load_input(const std::string& path);

/** Serializes a document back to the structured text format. Parsing the
 *  result reproduces the document (canonical round trip). */
std::string write_input(const InputDoc& doc);

/** Assembles the representation carried by the document over the rationals:
 *  declared matrices by arrow label, zero matrices elsewhere. Shapes and
 *  relations are validated. */
Rep<Rat> doc_to_rep(const InputDoc& doc, const AlgebraBasis& alg);

/** "p" for integers, "p/q" otherwise. */
std::string format_rational(const Rat& q);

/** "(a, b, c)". */
std::string format_ivec(const IVec& v);

// --- Deterministic report writers (stable order, newline-terminated) ------

std::string write_polytope(const Polytope& p);
std::string write_fan(const Polytope& p);
std::string write_edge_quiver(const EdgeQuiver& eq);
/** Witness mutation sequences are printed 1-based. */
std::string write_clusters(const std::vector<ClusterRecord>& clusters);
std::string write_exchange_graph(const ExchangeGraph& g);
std::string write_provenance(const SampleInfo& info);

}  // namespace qtrop
