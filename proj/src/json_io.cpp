#include "gbl/json_io.hpp"

#include "gbl/errors.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace gbl {

namespace {

std::size_t one_based(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

// Runs a decoder, turning library and schema exceptions into ParseError.
template <class F>
auto decode(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json rows_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Integer>> rows_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("rows must be an array of arrays");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("rows must be an array of arrays");
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(integer_from_json(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix square_from_json(const Json& j) {
  auto rows = rows_from_json(j);
  if (rows.empty()) return IntMatrix(0, 0);
  return IntMatrix::from_rows(rows);
}

Json vector_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json index_to_json(const MultiIndex& index) {
  Json out = Json::array();
  for (int j : index) out.push_back(j + 1);
  return out;
}

}  // namespace

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(v));
  }
  return Json(v.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw ParseError("empty integer string");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("not an integer: \"" + s + "\"");
    }
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const SeifertMatrix& m) {
  Json j;
  j["m"] = m.components();
  j["block_sizes"] = m.block_sizes();
  j["rows"] = rows_to_json(m.entries());
  return j;
}

SeifertMatrix matrix_from_json(const Json& j) {
  return decode("matrix", [&] {
    const Json& sizes_json = array_field(j, "block_sizes");
    std::vector<std::size_t> sizes;
    for (const auto& s : sizes_json) {
      if (!s.is_number_integer() || s.get<long long>() < 0) throw ParseError("block sizes must be non-negative");
      sizes.push_back(s.get<std::size_t>());
    }
    if (j.contains("m") && j["m"].get<std::size_t>() != sizes.size()) {
      throw ParseError("field 'm' disagrees with the number of block sizes");
    }
    return SeifertMatrix(sizes, square_from_json(field(j, "rows")));
  });
}

Json to_json(const SMove& move) {
  Json j;
  if (const auto* c = std::get_if<Congruence>(&move)) {
    j["type"] = "congruence";
    j["blocks"] = Json::array();
    for (const auto& b : c->blocks) j["blocks"].push_back(rows_to_json(b));
  } else if (const auto* e = std::get_if<Enlargement>(&move)) {
    j["type"] = "enlargement";
    j["k"] = e->k + 1;
    j["eps"] = e->eps;
    j["eps_prime"] = e->eps_prime;
    j["positions"] = {e->pos_u + 1, e->pos_v + 1};
    j["rows"] = Json::array();
    for (const auto& r : e->rows) j["rows"].push_back(vector_to_json(r));
  } else {
    const auto& r = std::get<Reduction>(move);
    j["type"] = "reduction";
    j["k"] = r.k + 1;
    j["u"] = r.u + 1;
    j["v"] = r.v + 1;
  }
  return j;
}

SMove move_from_json(const Json& j) {
  return decode("move", [&]() -> SMove {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "congruence") {
      Congruence c;
      for (const auto& b : array_field(j, "blocks")) c.blocks.push_back(square_from_json(b));
      return c;
    }
    if (type == "enlargement") {
      Enlargement e;
      e.k = one_based(field(j, "k"), "k");
      e.eps = field(j, "eps").get<int>();
      e.eps_prime = field(j, "eps_prime").get<int>();
      if (j.contains("positions")) {
        const Json& p = array_field(j, "positions");
        if (p.size() != 2) throw ParseError("positions must hold two entries");
        e.pos_u = one_based(p[0], "position");
        e.pos_v = one_based(p[1], "position");
      }
      for (const auto& r : array_field(j, "rows")) {
        if (!r.is_array()) throw ParseError("enlargement rows must be arrays");
        std::vector<Integer> row;
        for (const auto& v : r) row.push_back(integer_from_json(v));
        e.rows.push_back(std::move(row));
      }
      return e;
    }
    if (type == "reduction") {
      return Reduction{one_based(field(j, "k"), "k"), one_based(field(j, "u"), "u"), one_based(field(j, "v"), "v")};
    }
    throw ParseError("unknown move type '" + type + "'");
  });
}

Json to_json(const MoveSequence& seq) {
  Json j;
  j["start"] = to_json(seq.start);
  j["moves"] = Json::array();
  for (const auto& m : seq.moves) j["moves"].push_back(to_json(m));
  return j;
}

MoveSequence moves_from_json(const Json& j) {
  if (j.is_object() && j.contains("sequence") && !j.contains("moves")) {
    if (j["sequence"].is_null()) throw ParseError("search result holds no move sequence");
    return moves_from_json(j["sequence"]);
  }
  MoveSequence seq;
  seq.start = matrix_from_json(field(j, "start"));
  for (const auto& m : array_field(j, "moves")) seq.moves.push_back(move_from_json(m));
  return seq;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  j["sequence"] = r.sequence ? to_json(*r.sequence) : Json(nullptr);
  return j;
}

Json to_json(const GoodBasisOrdering& g) {
  Json j;
  j["pairs"] = Json::array();
  for (const auto& p : g.order) {
    Json pj;
    pj["component"] = p.component + 1;
    pj["pair"] = p.index + 1;
    pj["flipped"] = p.flipped;
    j["pairs"].push_back(std::move(pj));
  }
  j["signs"] = g.signs;
  j["reductions"] = to_json(g.reductions);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["rule"] = v.rule;
    vj["block"] = {v.i + 1, v.j + 1};
    vj["detail"] = v.detail;
    j["violations"].push_back(std::move(vj));
  }
  return j;
}

Json to_json(const LinkDiagram& d) {
  Json j;
  j["kind"] = d.is_string_link() ? "string" : "closed";
  j["strands"] = Json::array();
  for (const auto& s : d.strands()) {
    Json code = Json::array();
    for (const auto& p : s.passages) {
      long long id = static_cast<long long>(p.crossing) + 1;
      code.push_back(p.over ? id : -id);
    }
    j["strands"].push_back(std::move(code));
  }
  j["crossings"] = Json::array();
  for (const auto& x : d.crossings()) j["crossings"].push_back({x.over + 1, x.under + 1, x.sign});
  j["components"] = Json::object();
  for (std::size_t i = 0; i < d.strand_count(); ++i) j["components"][d.strands()[i].label] = Json::array({i + 1});
  if (d.is_string_link()) {
    Json bottom = Json::array();
    for (auto p : d.bottom()) bottom.push_back(p + 1);
    j["bottom"] = std::move(bottom);
  }
  return j;
}

LinkDiagram diagram_from_json(const Json& j) {
  return decode("diagram", [&] {
    const std::string kind_name = field(j, "kind").get<std::string>();
    DiagramKind kind;
    if (kind_name == "string") {
      kind = DiagramKind::string_link;
    } else if (kind_name == "closed") {
      kind = DiagramKind::closed;
    } else {
      throw ParseError("kind must be \"string\" or \"closed\"");
    }
    std::vector<Strand> strands;
    for (const auto& code : array_field(j, "strands")) {
      if (!code.is_array()) throw ParseError("each strand must be an array of signed crossing numbers");
      Strand s;
      for (const auto& v : code) {
        if (!v.is_number_integer() || v.get<long long>() == 0) throw ParseError("passages must be non-zero integers");
        long long id = v.get<long long>();
        s.passages.push_back(Passage{static_cast<std::size_t>(std::llabs(id) - 1), id > 0});
      }
      strands.push_back(std::move(s));
    }
    std::vector<Crossing> crossings;
    for (const auto& x : array_field(j, "crossings")) {
      if (!x.is_array() || x.size() != 3) throw ParseError("crossings must be [over, under, sign] triples");
      crossings.push_back(Crossing{one_based(x[0], "over strand"), one_based(x[1], "under strand"), x[2].get<int>()});
    }
    const Json& comps = field(j, "components");
    if (!comps.is_object()) throw ParseError("components must map labels to strand lists");
    std::vector<bool> named(strands.size(), false);
    for (const auto& [label, list] : comps.items()) {
      if (!list.is_array() || list.size() != 1) {
        throw ParseError("component '" + label + "' must consist of exactly one strand");
      }
      std::size_t s = one_based(list[0], "strand");
      if (s >= strands.size() || named[s]) throw ParseError("component '" + label + "' names a bad strand");
      named[s] = true;
      strands[s].label = label;
    }
    for (std::size_t s = 0; s < strands.size(); ++s) {
      if (!named[s]) throw ParseError("strand " + std::to_string(s + 1) + " belongs to no component");
    }
    std::vector<std::size_t> bottom;
    if (j.contains("bottom")) {
      if (kind != DiagramKind::string_link) throw ParseError("closed diagrams have no bottom endpoints");
      for (const auto& p : array_field(j, "bottom")) bottom.push_back(one_based(p, "bottom endpoint"));
    }
    return LinkDiagram(kind, std::move(strands), std::move(crossings), std::move(bottom));
  });
}

Json to_json(const Bundle& b) {
  Json j;
  j["matrix"] = to_json(b.matrix);
  j["derived"] = Json::array();
  for (const auto& p : b.derived) {
    Json pj;
    pj["a"] = to_json(p.a);
    pj["b"] = to_json(p.b);
    j["derived"].push_back(std::move(pj));
  }
  return j;
}

Bundle bundle_from_json(const Json& j) {
  Bundle b;
  b.matrix = matrix_from_json(field(j, "matrix"));
  for (const auto& p : array_field(j, "derived")) {
    b.derived.push_back(DerivedPair{diagram_from_json(field(p, "a")), diagram_from_json(field(p, "b"))});
  }
  return b;
}

Json to_json(const MuTable& t) {
  Json out = Json::array();
  for (const auto& [index, v] : t) {
    Json e;
    e["index"] = index_to_json(index);
    e["value"] = to_json(v.value);
    e["indeterminacy"] = to_json(v.indeterminacy);
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const HomotopyVerdict& v) {
  Json j;
  j["trivial"] = v.trivial;
  j["witness"] = v.witness ? index_to_json(*v.witness) : Json(nullptr);
  j["table"] = to_json(v.table);
  return j;
}

Json to_json(const HtPlusVerdict& v) {
  Json j;
  j["trivial"] = v.trivial;
  j["components"] = Json::array();
  for (const auto& c : v.components) {
    Json cj;
    cj["component"] = c.component;
    cj["homotopy"] = to_json(c.verdict);
    j["components"].push_back(std::move(cj));
  }
  return j;
}

Json to_json(const CheckNode& n) {
  Json j;
  j["name"] = n.name;
  j["status"] = to_string(n.status);
  if (!n.code.empty()) j["code"] = n.code;
  if (!n.detail.empty()) j["detail"] = n.detail;
  if (n.homotopy) j["homotopy"] = to_json(*n.homotopy);
  if (!n.children.empty()) {
    j["children"] = Json::array();
    for (const auto& c : n.children) j["children"].push_back(to_json(c));
  }
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["tool"] = "gbl";
  j["version"] = GBL_VERSION;
  j["verdict"] = to_string(c.verdict);
  j["inputs"] = Json::array();
  for (const auto& [role, hash] : c.inputs) {
    Json ij;
    ij["role"] = role;
    ij["sha256"] = hash;
    j["inputs"].push_back(std::move(ij));
  }
  j["checks"] = Json::array();
  for (const auto& n : c.checks) j["checks"].push_back(to_json(n));
  j["ordering"] = c.ordering ? to_json(*c.ordering) : Json(nullptr);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

MultiIndex parse_index(const std::string& text) {
  MultiIndex out;
  bool separated = text.find_first_of(", ") != std::string::npos;
  if (separated) {
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, text.find(',') != std::string::npos ? ',' : ' ')) {
      if (token.empty()) continue;
      for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != ' ') throw ParseError("bad index '" + text + "'");
      }
      int v = std::stoi(token);
      if (v < 1) throw ParseError("index entries start at 1");
      out.push_back(v - 1);
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad index '" + text + "'");
      out.push_back(ch - '1');
    }
  }
  if (out.empty()) throw ParseError("empty multi-index");
  return out;
}

}  // namespace gbl
