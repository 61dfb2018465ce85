#include "flagdeg/io.hpp"

#include <sstream>

namespace flagdeg {

Json to_json(const QuiverShape& shape) {
  Json j;
  j["type"] = shape.is_a() ? "A" : "D";
  j["p"] = shape.p;
  if (shape.is_a()) j["q"] = shape.q;
  return j;
}

QuiverShape shape_from_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "D") return QuiverShape::typeD(j.at("p").get<int>());
  if (type == "A") return QuiverShape::typeA(j.at("p").get<int>(), j.at("q").get<int>());
  throw Error("unknown quiver type '" + type + "'");
}

Json to_json(const QuiverShape& shape, const IndecId& id) {
  Json j;
  switch (id.kind) {
    case IdKind::Pair:
      j["kind"] = "pair";
      break;
    case IdKind::Plus:
      j["kind"] = "plus";
      break;
    case IdKind::Minus:
      j["kind"] = "minus";
      break;
  }
  j["i"] = id.i;
  if (id.is_pair()) {
    if (shape.is_d() && id.j == shape.inf())
      j["j"] = "inf";
    else
      j["j"] = id.j;
  }
  return j;
}

IndecId id_from_json(const QuiverShape& shape, const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int i = j.at("i").get<int>();
  IndecId id;
  if (kind == "plus") {
    id = IndecId::plus(i);
  } else if (kind == "minus") {
    id = IndecId::minus(i);
  } else if (kind == "pair") {
    const auto& jj = j.at("j");
    int second = jj.is_string() ? (jj.get<std::string>() == "inf" ? shape.inf() : -1) : jj.get<int>();
    if (second < 0) throw Error("pair index must be an integer or \"inf\"");
    id = IndecId::pair(i, second);
  } else {
    throw Error("unknown id kind '" + kind + "'");
  }
  auto quiver = Quiver::of(shape);
  if (!quiver->contains(id)) throw Error("id " + to_string(shape, id) + " is not a vertex of " + to_string(shape));
  return id;
}

Json to_json(const FlagObject& f) {
  Json j;
  j["shape"] = to_json(f.shape());
  Json summands = Json::array();
  for (const auto& [id, mult] : f.summands()) summands.push_back({{"id", to_json(f.shape(), id)}, {"mult", mult}});
  j["summands"] = summands;
  return j;
}

FlagObject object_from_json(const Json& j) {
  QuiverShape shape = shape_from_json(j.at("shape"));
  FlagObject f(shape);
  auto quiver = Quiver::of(shape);
  for (const auto& s : j.at("summands")) {
    IndecId id = id_from_json(shape, s.at("id"));
    if (quiver->is_fake(id)) throw Error("the fake vertex is not an object");
    int mult = s.contains("mult") ? s.at("mult").get<int>() : 1;
    if (mult < 0) throw Error("negative multiplicity");
    f.add(id, mult);
  }
  return f;
}

Json to_json(const RankVector& rv) {
  const auto& quiver = *Quiver::of(rv.shape());
  Json ids = Json::array();
  for (const auto& id : quiver.ids()) ids.push_back(to_string(rv.shape(), id));
  Json j;
  j["shape"] = to_json(rv.shape());
  j["ids"] = ids;
  j["values"] = std::vector<int>(rv.values().begin(), rv.values().end());
  return j;
}

Json to_json(const Region& r) {
  Json params;
  auto put = [&](const char* name, int v) {
    if (v < 0) return;
    if (r.shape.is_d() && v == r.shape.inf())
      params[name] = "inf";
    else
      params[name] = v;
  };
  put("i", r.params.i);
  put("j", r.params.j);
  put("i'", r.params.ip);
  put("j'", r.params.jp);
  Json j;
  j["kind"] = to_string(r.kind);
  j["params"] = params;
  j["init"] = Json::array({to_json(r.shape, r.source), to_json(r.shape, r.sink)});
  Json term = Json::array();
  for (const auto& t : r.term) term.push_back(to_json(r.shape, t));
  j["term"] = term;
  return j;
}

// ---------------------------------------------------------------------------

Json to_json(const SubspaceConfig& c) {
  Json j;
  j["n"] = c.n;
  j["a"] = c.a;
  if (c.shape.is_a()) j["b"] = c.b;
  j["q"] = c.q;
  if (c.shape.is_a()) {
    j["second_flag"] = c.second_flag;
  } else {
    j["U"] = c.U;
    j["W"] = c.W;
  }
  return j;
}

namespace {

Matrix read_matrix(const Json& j, const PrimeField& f) {
  Matrix m;
  for (const auto& row : j) {
    std::vector<int> v;
    for (const auto& x : row) v.push_back(f.reduce(x.get<long long>()));
    m.push_back(std::move(v));
  }
  return m;
}

}  // namespace

SubspaceConfig config_from_json(const Json& j) {
  SubspaceConfig c;
  c.n = j.at("n").get<int>();
  c.a = j.at("a").get<std::vector<int>>();
  c.q = j.contains("q") ? j.at("q").get<int>() : 5;
  PrimeField f(c.q);
  if (j.contains("b")) {
    c.b = j.at("b").get<std::vector<int>>();
    c.shape = QuiverShape::typeA(static_cast<int>(c.a.size()), static_cast<int>(c.b.size()));
    c.second_flag = read_matrix(j.at("second_flag"), f);
  } else {
    c.shape = QuiverShape::typeD(static_cast<int>(c.a.size()));
    c.U = read_matrix(j.at("U"), f);
    c.W = read_matrix(j.at("W"), f);
  }
  if (j.contains("flag")) {
    // Coordinates with respect to the flag basis make the flag standard.
    Matrix basis = read_matrix(j.at("flag"), f);
    Matrix inverse = invert(f, basis);
    c.U = multiply(f, c.U, inverse);
    c.W = multiply(f, c.W, inverse);
    if (c.shape.is_a()) c.second_flag = multiply(f, c.second_flag, inverse);
  }
  check_config(c);
  return c;
}

// ---------------------------------------------------------------------------

std::string base64_encode(const std::vector<unsigned char>& bytes) {
  static const char* alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  std::size_t x = 0;
  for (; x + 2 < bytes.size(); x += 3) {
    unsigned v = (bytes[x] << 16) | (bytes[x + 1] << 8) | bytes[x + 2];
    for (int s = 18; s >= 0; s -= 6) out += alphabet[(v >> s) & 63];
  }
  std::size_t rest = bytes.size() - x;
  if (rest == 1) {
    unsigned v = bytes[x] << 16;
    out += alphabet[(v >> 18) & 63];
    out += alphabet[(v >> 12) & 63];
    out += "==";
  } else if (rest == 2) {
    unsigned v = (bytes[x] << 16) | (bytes[x + 1] << 8);
    out += alphabet[(v >> 18) & 63];
    out += alphabet[(v >> 12) & 63];
    out += alphabet[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<std::string> relation_rows_base64(const Relation& r) {
  std::vector<std::string> rows;
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    std::vector<unsigned char> bytes(static_cast<std::size_t>((n + 7) / 8), 0);
    for (int y = 0; y < n; ++y)
      if (r.test(x, y)) bytes[y / 8] |= static_cast<unsigned char>(1U << (y % 8));
    rows.push_back(base64_encode(bytes));
  }
  return rows;
}

HasseDiagram move_graph(const OrbitPoset& poset) {
  HasseDiagram h{&poset, {}, {}};
  for (const auto& e : poset.edges) {
    h.edges.emplace_back(e.from, e.to);
    h.labels.push_back(to_string(e.region.kind));
  }
  return h;
}

HasseDiagram cover_graph(const OrbitPoset& poset) {
  return {&poset, transitive_reduction(poset.relation), {}};
}

HasseDiagram reduced_move_graph(const OrbitPoset& poset) {
  return {&poset, poset.distinct_edges(), {}};
}

std::string to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph orbits {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t x = 0; x < h.poset->nodes.size(); ++x)
    out << "  n" << x << " [label=\"" << to_string(h.poset->nodes[x]) << "\"];\n";
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    out << "  n" << h.edges[e].first << " -> n" << h.edges[e].second;
    if (!h.labels.empty()) out << " [label=\"" << h.labels[e] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const HasseDiagram& h) {
  const auto& poset = *h.poset;
  Json j;
  j["shape"] = to_json(poset.shape);
  j["dv"] = to_string(poset.dv);
  j["order"] = to_string(poset.order);
  Json nodes = Json::array();
  for (std::size_t x = 0; x < poset.nodes.size(); ++x) {
    Json node = to_json(poset.nodes[x]);
    nodes.push_back({{"index", x}, {"label", to_string(poset.nodes[x])}, {"summands", node["summands"]}});
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    Json edge{{"from", h.edges[e].first}, {"to", h.edges[e].second}};
    if (!h.labels.empty()) {
      edge["kind"] = h.labels[e];
      edge["region"] = to_json(poset.edges[e].region);
    }
    edges.push_back(edge);
  }
  j["edges"] = edges;
  j["relation"] = {{"size", poset.relation.size()}, {"rows", relation_rows_base64(poset.relation)}};
  return j;
}

}  // namespace flagdeg
