#include "brauer/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace brauer {

namespace {

int json_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("tree document lacks '") + key + "'");
  return *it;
}

std::string bigstr(const BigInt& x) { return x.get_str(); }

Json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return bigstr(x);
}

}  // namespace

PlaneTree parse_tree(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed tree document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("tree document must be an object");

  const Json& jv = field(doc, "vertices");
  const Json& je = field(doc, "edges");
  const Json& jr = field(doc, "rotations");
  if (!jv.is_array() || !je.is_array() || !jr.is_object())
    throw InputError("tree document fields have the wrong shape");

  std::vector<VertexId> verts;
  for (const Json& v : jv) verts.push_back({json_int(v, "vertex id")});
  std::map<EdgeId, PlaneTree::Ends> ends;
  for (const Json& e : je) {
    if (!e.is_object()) throw InputError("edge entries must be objects");
    const EdgeId id{json_int(field(e, "id"), "edge id")};
    const Json& en = field(e, "ends");
    if (!en.is_array() || en.size() != 2) throw InputError("edge ends must be a pair");
    if (!ends.emplace(id, PlaneTree::Ends{{json_int(en[0], "vertex id")},
                                          {json_int(en[1], "vertex id")}})
             .second)
      throw InputError("duplicate edge id " + std::to_string(id.value));
  }
  std::map<VertexId, std::vector<EdgeId>> rot;
  for (const auto& [key, list] : jr.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("rotation key '" + key + "' is not a vertex id");
    }
    if (!list.is_array()) throw InputError("rotation lists must be arrays");
    auto& r = rot[{v}];
    for (const Json& e : list) r.push_back({json_int(e, "edge id")});
  }
  return PlaneTree::create(std::move(verts), std::move(ends), std::move(rot));
}

PlaneTree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tree(ss.str());
}

Json tree_to_json(const PlaneTree& g) {
  Json doc;
  doc["vertices"] = Json::array();
  for (VertexId v : g.vertices()) doc["vertices"].push_back(v.value);
  doc["edges"] = Json::array();
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.ends(e);
    doc["edges"].push_back({{"id", e.value}, {"ends", {a.value, b.value}}});
  }
  doc["rotations"] = Json::object();
  for (VertexId v : g.vertices()) {
    Json list = Json::array();
    for (EdgeId e : g.rotation(v)) list.push_back(e.value);
    doc["rotations"][std::to_string(v.value)] = list;
  }
  return doc;
}

Json collections_to_json(const CollectionSet& set) {
  Json out = Json::array();
  for (const auto& x : set.collections()) {
    Json arcs = Json::array();
    for (std::size_t i : x.arcs) arcs.push_back(set.arc(i).g());
    out.push_back({{"gvec", x.gvec}, {"arcs", arcs}});
  }
  return out;
}

Json counts_to_json(EdgeId e, const std::map<int, std::size_t>& counts) {
  Json c = Json::object();
  for (auto [j, n] : counts) c[std::to_string(j)] = n;
  return {{"edge", e.value}, {"counts", c}};
}

std::string counts_table(EdgeId e, const std::map<int, std::size_t>& counts) {
  std::ostringstream os;
  os << "edge " << e.value << "\n";
  os << std::setw(6) << "j" << std::setw(12) << "count" << "\n";
  for (auto [j, n] : counts) os << std::setw(6) << j << std::setw(12) << n << "\n";
  return os.str();
}

Json report_to_json(const Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"instance", row.instance},
                    {"claim", row.claim},
                    {"expected", big_json(row.expected)},
                    {"actual", big_json(row.actual)},
                    {"status", row.pass ? "pass" : "fail"}});
  return {{"suite", r.suite}, {"pass", r.pass()}, {"rows", rows}, {"notes", r.notes}};
}

std::string report_table(const Report& r) {
  std::size_t wi = 8, wc = 5;
  for (const auto& row : r.rows) {
    wi = std::max(wi, row.instance.size());
    wc = std::max(wc, row.claim.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wi) + 2) << "instance"
     << std::setw(static_cast<int>(wc) + 2) << "claim" << std::right << std::setw(14) << "expected"
     << std::setw(14) << "actual" << "  status\n";
  for (const auto& row : r.rows)
    os << std::left << std::setw(static_cast<int>(wi) + 2) << row.instance
       << std::setw(static_cast<int>(wc) + 2) << row.claim << std::right << std::setw(14)
       << bigstr(row.expected) << std::setw(14) << bigstr(row.actual) << "  "
       << (row.pass ? "pass" : "FAIL") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.rows.size() << " rows, "
     << r.failures() << " failed)\n";
  return os.str();
}

ArrowPath basis_arrows(const BrauerAlgebra& alg, std::size_t index) {
  const BasisElement& b = alg.basis(index);
  if (b.kind != BasisKind::path) throw InputError("only radical paths have an arrow form");
  const PlaneTree& g = alg.tree();
  ArrowPath p;
  EdgeId x = b.source;
  for (std::uint32_t i = 0; i < b.length; ++i) {
    p.push_back(alg.quiver().arrow_index(b.at, x));
    x = g.next_at(b.at, x);
  }
  return p;
}

Json complex_to_json(const BrauerAlgebra& alg, const TwoTermComplex& t) {
  Json deg0 = Json::array(), degm1 = Json::array(), d = Json::array();
  for (EdgeId e : t.degree0) deg0.push_back(e.value);
  for (EdgeId e : t.degree_minus1) degm1.push_back(e.value);
  for (std::size_t i = 0; i < t.differential.size(); ++i)
    for (std::size_t j = 0; j < t.differential[i].size(); ++j)
      for (const auto& [b, c] : t.differential[i][j].terms())
        d.push_back({{"row", i}, {"col", j}, {"coeff", c.get_str()},
                     {"arrows", basis_arrows(alg, b)}});
  return {{"deg0", deg0}, {"degm1", degm1}, {"d", d}};
}

std::string quiver_dot(const PlaneTree& g, const Quiver& q) {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (EdgeId e : g.edges()) os << "  e" << e.value << " [label=\"" << e.value << "\"];\n";
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    os << "  e" << a.source.value << " -> e" << a.target.value << " [label=\"" << a.at.value
       << "\", id=\"a" << i << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json relations_to_json(const PlaneTree& g, const Quiver& q) {
  const RelationGenerators r = relation_generators(g, q);
  Json arrows = Json::array();
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    arrows.push_back(
        {{"id", i}, {"source", a.source.value}, {"target", a.target.value}, {"at", a.at.value}});
  }
  Json comm = Json::array();
  for (const auto& [x, y] : r.commutations) comm.push_back({x, y});
  return {{"arrows", arrows},
          {"I", r.zero_paths},
          {"J", comm},
          {"Isc", r.special_cycles}};
}

}  // namespace brauer
