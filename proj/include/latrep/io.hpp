#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "representation.hpp"

namespace latrep {

using Json = nlohmann::ordered_json;

inline Json covers_json(const std::vector<Pair>& covers) {
  Json a = Json::array();
  for (auto [x, y] : covers) a.push_back({x, y});
  return a;
}

inline Json to_json(const Poset& p) { return {{"n", p.size()}, {"covers", covers_json(p.covers())}}; }

inline Json to_json(const Lattice& l) {
  Json j = to_json(l.poset());
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  return j;
}

inline Json to_json(const Graph& g) { return {{"vertices", g.size()}, {"edges", covers_json(g.edges())}}; }

inline Json to_json(const GroupTable& g) { return {{"order", g.n}, {"table", g.table}}; }

inline Json to_json(const Partition& p) {
  Json a = Json::array();
  for (const auto& b : p.blocks()) a.push_back(b);
  return a;
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::vector<Pair> pairs_from(const Json& a) {
  if (!a.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of pairs");
  std::vector<Pair> r;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw Error(ErrorKind::InvalidInput, "expected [i,j] with non-negative integers");
    r.emplace_back(e[0].get<Index>(), e[1].get<Index>());
  }
  return r;
}

inline std::size_t count_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' must be a count");
  return v.get<std::size_t>();
}

}  // namespace detail

inline Poset poset_from_json(const Json& j) {
  return poset_from_covers(detail::count_from(j, "n"), detail::pairs_from(detail::field(j, "covers")));
}

inline Lattice lattice_from_json(const Json& j) {
  auto l = as_lattice(poset_from_json(j));
  if (j.contains("bottom") && j.at("bottom") != l.bottom())
    throw Error(ErrorKind::InvalidInput, "'bottom' is not the least element");
  if (j.contains("top") && j.at("top") != l.top()) throw Error(ErrorKind::InvalidInput, "'top' is not the greatest element");
  return l;
}

inline Graph graph_from_json(const Json& j) {
  return graph_from_edges(detail::count_from(j, "vertices"), detail::pairs_from(detail::field(j, "edges")));
}

inline GroupTable group_from_json(const Json& j) {
  GroupTable g;
  g.n = detail::count_from(j, "order");
  try {
    g.table = detail::field(j, "table").get<std::vector<std::vector<Index>>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidTable, e.what());
  }
  g.validate();
  return g;
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

inline void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

// Named families as in group_table, or "table:<file>" holding {"order", "table"}.
inline GroupTable group_from_spec(const std::string& spec) {
  if (spec.rfind("table:", 0) == 0) return group_from_json(read_json(spec.substr(6)));
  return group_table(spec);
}

inline Json princ_json(const PrincipalPoset& pp) {
  Json j = to_json(pp.order);
  Json nodes = Json::array();
  for (std::size_t i = 0; i < pp.reps.size(); ++i)
    nodes.push_back({{"rep", {pp.reps[i].first, pp.reps[i].second}},
                     {"blocks", pp.congruences[i].num_blocks()},
                     {"partition", to_json(pp.congruences[i])}});
  j["nodes"] = nodes;
  return j;
}

inline std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

// Hasse diagram drawn bottom to top; labeled elements show their names.
inline std::string hasse_dot(const Poset& p, const std::map<Index, std::string>& labels = {},
                             const std::string& name = "hasse") {
  std::ostringstream o;
  o << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=point];\n";
  for (const auto& [v, s] : labels)
    o << "  " << v << " [shape=plaintext, label=\"" << dot_escape(s) << "\"];\n";
  for (auto [a, b] : p.covers()) o << "  " << a << " -> " << b << " [arrowhead=none];\n";
  o << "}\n";
  return o.str();
}

inline std::map<Index, std::string> labels_of(const LabeledLattice& b) {
  std::map<Index, std::string> r;
  for (const auto& [s, v] : b.labels) {
    auto& t = r[v];
    t += (t.empty() ? "" : "=") + s;
  }
  return r;
}

inline std::string princ_dot(const PrincipalPoset& pp) {
  std::map<Index, std::string> labels;
  for (std::size_t i = 0; i < pp.reps.size(); ++i)
    labels[Index(i)] = "con" + pair_str(pp.reps[i]) + " [" + std::to_string(pp.congruences[i].num_blocks()) + "]";
  return hasse_dot(pp.order, labels, "princ");
}

inline std::string key_name(const Frame& f, Index k) {
  if (k == f.anchor_key) return "1";
  if (k >= f.p_size) return "v" + std::to_string(k - f.p_size);
  return "p" + std::to_string(k);
}

// Frame Hasse diagram: chain endpoints labeled, gadget elements grouped per
// gadget (dotted for edge gadgets, dashed for arrow gadgets).
inline std::string frame_dot(const Frame& f) {
  std::ostringstream o;
  o << "digraph frame {\n  rankdir=BT;\n  node [shape=point];\n";
  for (const auto& [k, iv] : f.intervals) {
    o << "  " << iv.lo << " [shape=plaintext, label=\"a_" << key_name(f, k) << "\"];\n";
    o << "  " << iv.hi << " [shape=plaintext, label=\"b_" << key_name(f, k) << "\"];\n";
  }
  for (std::size_t g = 0; g < f.gadgets.size(); ++g) {
    const auto& gd = f.gadgets[g];
    o << "  subgraph cluster_g" << g << " { style=" << (gd.name == "edge" ? "dotted" : "dashed") << "; label=\""
      << gd.name << " " << key_name(f, gd.x) << "->" << key_name(f, gd.y) << "\";";
    for (Index v : gd.fresh) o << " " << v << ";";
    o << " }\n";
  }
  for (auto [a, b] : f.lattice.covers()) o << "  " << a << " -> " << b << " [arrowhead=none];\n";
  o << "}\n";
  return o.str();
}

// Final lattice with every inflated S-copy drawn as one gray oval between
// its endpoints.
inline std::string representation_dot(const Representation& r) {
  const Lattice& l = r.inflated.lattice;
  std::vector<Index> owner(l.size(), Index(-1));
  for (const auto& [k, emb] : r.inflated.copies) {
    auto iv = r.frame.intervals.at(k);
    for (Index v : emb)
      if (v != iv.lo && v != iv.hi) owner[v] = k;
  }
  std::ostringstream o;
  o << "digraph L {\n  rankdir=BT;\n  node [shape=point];\n";
  for (const auto& [k, iv] : r.frame.intervals) {
    o << "  " << iv.lo << " [shape=plaintext, label=\"a_" << key_name(r.frame, k) << "\"];\n";
    o << "  " << iv.hi << " [shape=plaintext, label=\"b_" << key_name(r.frame, k) << "\"];\n";
  }
  for (const auto& [k, emb] : r.inflated.copies) {
    auto iv = r.frame.intervals.at(k);
    o << "  S" << k << " [shape=ellipse, style=filled, fillcolor=gray80, label=\"S(" << r.assignment.at(k)
      << ")\"];\n";
    o << "  " << iv.lo << " -> S" << k << " [arrowhead=none];\n  S" << k << " -> " << iv.hi
      << " [arrowhead=none];\n";
  }
  for (auto [a, b] : l.covers())
    if (owner[a] == Index(-1) && owner[b] == Index(-1)) o << "  " << a << " -> " << b << " [arrowhead=none];\n";
  o << "}\n";
  return o.str();
}

inline Json timings_json(const std::map<std::string, double>& s) {
  Json j = Json::object();
  for (const auto& [k, v] : s) j[k] = v;
  return j;
}

inline Json verification_json(const Verification& v) {
  Json j = to_json(v.report);
  if (v.princ_iso) {
    Json m = Json::array();
    for (std::size_t i = 0; i < v.princ_iso->size(); ++i)
      m.push_back({{"congruence", {v.princ_reps[i].first, v.princ_reps[i].second}}, {"element", (*v.princ_iso)[i]}});
    j["princ_iso"] = m;
  } else {
    j["princ_iso"] = nullptr;
  }
  j["aut_order"] = v.aut_order;
  j["aut_iso"] = v.aut_iso ? Json(*v.aut_iso) : Json(nullptr);
  j["length"] = v.length;
  j["length_matches_sixteen"] = v.length == 16;
  j["selfdual"] = v.selfdual;
  j["timings"] = timings_json(v.seconds);
  return j;
}

}  // namespace latrep
