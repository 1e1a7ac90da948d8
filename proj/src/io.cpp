#include "qtrop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qtrop/error.hpp"

namespace qtrop {
namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based column of the first character
};

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(col) +
                                         ": " + msg);
}

/** Splits one line into whitespace-separated tokens, dropping comments. */
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start),
                   static_cast<int>(start) + 1});
  }
  return out;
}

bool is_integer_token(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

Int parse_int(const Token& tok, int line, const char* what) {
  if (!is_integer_token(tok.text))
    fail(line, tok.col, std::string("expected an integer ") + what + ", got '" +
                            tok.text + "'");
  return Int(std::stoll(tok.text));
}

Rat parse_rational(const Token& tok, int line) {
  const std::size_t slash = tok.text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(tok.text))
      fail(line, tok.col, "expected a rational, got '" + tok.text + "'");
    return Rat(std::stoll(tok.text));
  }
  const std::string num = tok.text.substr(0, slash);
  const std::string den = tok.text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    fail(line, tok.col, "expected a rational, got '" + tok.text + "'");
  const long long d = std::stoll(den);
  if (d == 0) fail(line, tok.col, "rational with zero denominator");
  return Rat(std::stoll(num)) / Rat(d);
}

std::vector<std::string> split_labels(const Token& tok, int line) {
  std::vector<std::string> labels;
  std::string cur;
  for (char c : tok.text) {
    if (c == '.') {
      if (cur.empty()) fail(line, tok.col, "empty arrow label in path");
      labels.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) fail(line, tok.col, "empty arrow label in path");
  labels.push_back(cur);
  return labels;
}

std::string join_ints(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

InputDoc parse_input(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    lines.push_back(cur);
  }

  InputDoc doc;
  bool sawHeader = false;
  int pendingRows = 0;  // data rows still expected for the open matrix
  Matrix<Rat>* openMatrix = nullptr;
  std::size_t nextDataRow = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line = static_cast<int>(li) + 1;
    const std::vector<Token> toks = tokenize(lines[li]);
    if (toks.empty()) continue;

    if (pendingRows > 0) {
      if (toks.size() != openMatrix->cols())
        fail(line, toks[0].col,
             "matrix row needs " + std::to_string(openMatrix->cols()) +
                 " entries, got " + std::to_string(toks.size()));
      for (std::size_t j = 0; j < toks.size(); ++j)
        (*openMatrix)(nextDataRow, j) = parse_rational(toks[j], line);
      ++nextDataRow;
      --pendingRows;
      continue;
    }

    const std::string& head = toks[0].text;
    if (!sawHeader) {
      if (head != "qtrop")
        fail(line, toks[0].col, "expected the 'qtrop 1' version header");
      if (toks.size() != 2 || toks[1].text != "1")
        fail(line, toks.size() > 1 ? toks[1].col : toks[0].col,
             "unsupported format version");
      sawHeader = true;
      continue;
    }

    if (head == "quiver") {
      if (doc.hasQuiver) fail(line, toks[0].col, "duplicate quiver directive");
      if (toks.size() != 2)
        fail(line, toks[0].col, "usage: quiver <vertex count>");
      const Int n = parse_int(toks[1], line, "vertex count");
      if (n <= 0) fail(line, toks[1].col, "vertex count must be positive");
      doc.quiver.n = static_cast<int>(n);
      doc.hasQuiver = true;
    } else if (head == "arrow") {
      if (!doc.hasQuiver)
        fail(line, toks[0].col, "arrow before the quiver directive");
      if (toks.size() != 4)
        fail(line, toks[0].col, "usage: arrow <label> <source> <target>");
      const Int s = parse_int(toks[2], line, "source vertex");
      const Int t = parse_int(toks[3], line, "target vertex");
      if (s < 1 || s > doc.quiver.n)
        fail(line, toks[2].col, "source vertex out of range");
      if (t < 1 || t > doc.quiver.n)
        fail(line, toks[3].col, "target vertex out of range");
      doc.quiver.arrows.push_back({static_cast<int>(s) - 1,
                                   static_cast<int>(t) - 1, toks[1].text});
    } else if (head == "relation") {
      if (!doc.hasQuiver)
        fail(line, toks[0].col, "relation before the quiver directive");
      if (toks.size() < 3 || (toks.size() - 1) % 2 != 0)
        fail(line, toks[0].col,
             "usage: relation (<coeff> <label>[.<label>...])+");
      PathCombo combo;
      bool first = true;
      for (std::size_t i = 1; i + 1 < toks.size(); i += 2) {
        const Rat c = parse_rational(toks[i], line);
        PathCombo term;
        try {
          term = make_relation(doc.quiver, split_labels(toks[i + 1], line), c);
        } catch (const Error& e) {
          fail(line, toks[i + 1].col, e.what());
        }
        if (first) {
          combo = term;
          first = false;
        } else {
          if (term.source != combo.source || term.target != combo.target)
            fail(line, toks[i + 1].col,
                 "relation terms must share source and target");
          combo.terms.push_back(term.terms.front());
        }
      }
      combo.normalize();
      doc.relations.relations.push_back(std::move(combo));
    } else if (head == "dims") {
      if (!doc.hasQuiver)
        fail(line, toks[0].col, "dims before the quiver directive");
      if (!doc.dims.empty())
        fail(line, toks[0].col, "duplicate dims directive");
      if (static_cast<int>(toks.size()) - 1 != doc.quiver.n)
        fail(line, toks[0].col,
             "dims needs one entry per vertex (" +
                 std::to_string(doc.quiver.n) + ")");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const Int d = parse_int(toks[i], line, "dimension");
        if (d < 0) fail(line, toks[i].col, "dimensions must be nonnegative");
        doc.dims.push_back(d);
      }
    } else if (head == "matrix") {
      if (!doc.hasQuiver)
        fail(line, toks[0].col, "matrix before the quiver directive");
      if (toks.size() != 4)
        fail(line, toks[0].col, "usage: matrix <label> <rows> <cols>");
      if (doc.quiver.arrow_index(toks[1].text) < 0)
        fail(line, toks[1].col, "unknown arrow '" + toks[1].text + "'");
      const Int r = parse_int(toks[2], line, "row count");
      const Int c = parse_int(toks[3], line, "column count");
      if (r < 0 || c < 0)
        fail(line, toks[2].col, "matrix shape must be nonnegative");
      doc.matrices.emplace_back(
          toks[1].text, Matrix<Rat>(static_cast<std::size_t>(r),
                                    static_cast<std::size_t>(c)));
      openMatrix = &doc.matrices.back().second;
      pendingRows = static_cast<int>(r);
      nextDataRow = 0;
    } else if (head == "weight") {
      if (!doc.hasQuiver)
        fail(line, toks[0].col, "weight before the quiver directive");
      if (toks.size() < 2 ||
          (toks[1].text != "proj" && toks[1].text != "inj"))
        fail(line, toks.size() > 1 ? toks[1].col : toks[0].col,
             "usage: weight proj|inj <entries>");
      if (static_cast<int>(toks.size()) - 2 != doc.quiver.n)
        fail(line, toks[0].col,
             "weight needs one entry per vertex (" +
                 std::to_string(doc.quiver.n) + ")");
      Weight w;
      w.role = toks[1].text == "proj" ? Weight::Role::Projective
                                      : Weight::Role::Injective;
      for (std::size_t i = 2; i < toks.size(); ++i)
        w.entries.push_back(parse_int(toks[i], line, "weight entry"));
      doc.weights.push_back(std::move(w));
    } else {
      fail(line, toks[0].col, "unknown directive '" + head + "'");
    }
  }

  if (!sawHeader) fail(1, 1, "expected the 'qtrop 1' version header");
  if (pendingRows > 0)
    fail(static_cast<int>(lines.size()), 1,
         "unterminated matrix: " + std::to_string(pendingRows) +
             " data rows missing");
  return doc;
}

InputDoc load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::ParseError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string write_input(const InputDoc& doc) {
  std::string out = "qtrop 1\n";
  if (!doc.hasQuiver) return out;
  out += "quiver " + std::to_string(doc.quiver.n) + "\n";
  for (const Arrow& a : doc.quiver.arrows)
    out += "arrow " + a.label + " " + std::to_string(a.source + 1) + " " +
           std::to_string(a.target + 1) + "\n";
  for (const PathCombo& rel : doc.relations.relations) {
    out += "relation";
    for (const auto& [path, coeff] : rel.terms) {
      out += " " + format_rational(coeff) + " ";
      for (std::size_t k = 0; k < path.arrows.size(); ++k) {
        if (k) out += ".";
        out += doc.quiver.arrows[static_cast<std::size_t>(path.arrows[k])]
                   .label;
      }
    }
    out += "\n";
  }
  if (!doc.dims.empty()) out += "dims " + join_ints(doc.dims) + "\n";
  for (const auto& [label, mat] : doc.matrices) {
    out += "matrix " + label + " " + std::to_string(mat.rows()) + " " +
           std::to_string(mat.cols()) + "\n";
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        if (j) out += " ";
        out += format_rational(mat(i, j));
      }
      out += "\n";
    }
  }
  for (const Weight& w : doc.weights)
    out += std::string("weight ") +
           (w.role == Weight::Role::Projective ? "proj " : "inj ") +
           join_ints(w.entries) + "\n";
  return out;
}

Rep<Rat> doc_to_rep(const InputDoc& doc, const AlgebraBasis& alg) {
  require(doc.hasQuiver, ErrorCode::EmptyInput,
          "document carries no quiver");
  require(!doc.dims.empty(), ErrorCode::EmptyInput,
          "document carries no dims line");
  Rep<Rat> rep = semisimple_rep<Rat>(alg, doc.dims);
  for (const auto& [label, mat] : doc.matrices) {
    const int ai = alg.quiver().arrow_index(label);
    require(ai >= 0, ErrorCode::ParseError, "unknown arrow '" + label + "'");
    const Arrow& a = alg.quiver().arrows[static_cast<std::size_t>(ai)];
    require(mat.rows() == static_cast<std::size_t>(
                              doc.dims[static_cast<std::size_t>(a.target)]) &&
                mat.cols() == static_cast<std::size_t>(
                                  doc.dims[static_cast<std::size_t>(a.source)]),
            ErrorCode::DimensionMismatch,
            "matrix for arrow '" + label + "' has the wrong shape");
    rep.mats[static_cast<std::size_t>(ai)] = mat;
  }
  validate(rep);
  return rep;
}

std::string format_rational(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_ivec(const IVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string write_polytope(const Polytope& p) {
  std::string out = "polytope ambient " + std::to_string(p.ambient) + " dim " +
                    std::to_string(p.dim) + " vertices " +
                    std::to_string(p.vertices.size()) + "\n";
  for (const IVec& v : p.vertices) out += "vertex " + join_ints(v) + "\n";
  std::vector<std::pair<IVec, Int>> facets;
  facets.reserve(p.facets.size());
  for (const Facet& f : p.facets) facets.emplace_back(f.normal, f.offset);
  std::sort(facets.begin(), facets.end());
  for (const auto& [normal, offset] : facets)
    out += "facet " + join_ints(normal) + " <= " + std::to_string(offset) + "\n";
  return out;
}

std::string write_fan(const Polytope& p) {
  std::string out =
      "fan maximal-cones " + std::to_string(p.vertices.size()) + "\n";
  const std::vector<Cone> cones = normal_fan(p);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    out += "vertex " + join_ints(p.vertices[i]) + "\n";
    IMat rays = cones[i].generators;
    std::sort(rays.begin(), rays.end());
    for (const IVec& r : rays) out += "  ray " + join_ints(r) + "\n";
    IMat lines = cones[i].lineality;
    std::sort(lines.begin(), lines.end());
    for (const IVec& l : lines) out += "  line " + join_ints(l) + "\n";
  }
  return out;
}

std::string write_edge_quiver(const EdgeQuiver& eq) {
  std::string out = "edge-quiver vertices " +
                    std::to_string(eq.vertices.size()) + " edges " +
                    std::to_string(eq.edges.size()) + "\n";
  for (const IVec& v : eq.vertices) out += "vertex " + join_ints(v) + "\n";
  std::vector<std::pair<int, int>> edges = eq.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [from, to] : edges) {
    const IVec factor = sub(eq.vertices[static_cast<std::size_t>(to)],
                            eq.vertices[static_cast<std::size_t>(from)]);
    out += "edge " + std::to_string(from) + " -> " + std::to_string(to) +
           " factor " + join_ints(factor) + "\n";
  }
  return out;
}

std::string write_clusters(const std::vector<ClusterRecord>& clusters) {
  std::string out = "clusters " + std::to_string(clusters.size()) + "\n";
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    out += "cluster " + std::to_string(i) + " witness";
    for (int k : clusters[i].witness) out += " " + std::to_string(k + 1);
    out += "\n";
    for (const IVec& row : clusters[i].rows)
      out += "  weight " + join_ints(row) + "\n";
  }
  return out;
}

std::string write_exchange_graph(const ExchangeGraph& g) {
  std::string out = "exchange-quiver nodes " + std::to_string(g.nodes.size()) +
                    " arrows " + std::to_string(g.arrows.size()) + "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "node " + std::to_string(i) + "\n";
    for (const IVec& row : g.nodes[i])
      out += "  weight " + join_ints(row) + "\n";
  }
  std::vector<std::pair<int, int>> arrows = g.arrows;
  std::sort(arrows.begin(), arrows.end());
  for (const auto& [from, to] : arrows)
    out += "arrow " + std::to_string(from) + " -> " + std::to_string(to) +
           "\n";
  return out;
}

std::string write_provenance(const SampleInfo& info) {
  return "provenance samples=" + std::to_string(info.samples) +
         " coeffBound=" + std::to_string(info.coeffBound) +
         " rngSeed=" + std::to_string(info.rngSeed) + "\n";
}

}  // namespace qtrop
