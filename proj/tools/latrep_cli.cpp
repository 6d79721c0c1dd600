#include <CLI11.hpp>

#include <iostream>

#include "latrep/latrep.hpp"

using namespace latrep;

namespace {

struct Options {
  std::string poset, group, graph, lattice, out, report, dot, frame_dot, block;
  std::optional<std::size_t> s, t, t_dual;
  bool verify = false, frucht = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::NotALattice:
    case ErrorKind::Unbounded:
    case ErrorKind::InvalidTable:
    case ErrorKind::InvalidInput:
    case ErrorKind::TooLarge:
    case ErrorKind::NotFound:
      return true;
    default:
      return false;
  }
}

void emit(const std::string& path, const Json& j) {
  if (path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json(path, j);
}

int finish(const Options& o, const Report& r, Json report) {
  if (!o.report.empty()) write_json(o.report, report);
  for (const auto& c : r.checks)
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  return r.ok() ? 0 : 1;
}

Lattice need_lattice(const Options& o) {
  if (o.lattice.empty()) throw Error(ErrorKind::InvalidInput, "--lattice is required");
  return lattice_from_json(read_json(o.lattice));
}

Poset need_poset(const Options& o) {
  if (o.poset.empty()) throw Error(ErrorKind::InvalidInput, "--poset is required");
  return poset_from_json(read_json(o.poset));
}

GroupTable need_group(const Options& o) {
  if (o.group.empty()) throw Error(ErrorKind::InvalidInput, "--group is required");
  return group_from_spec(o.group);
}

int cmd_blocks(const Options& o) {
  LabeledLattice b;
  std::optional<Report> cert;
  std::size_t chosen = std::size_t(o.s.has_value()) + o.t.has_value() + o.t_dual.has_value() + !o.block.empty();
  if (chosen != 1) throw Error(ErrorKind::InvalidInput, "choose exactly one of --s, --t, --t-dual, --block");
  if (o.s) {
    b = build_S(*o.s);
    if (o.verify) cert = verify_S(b, *o.s, o.budget);
  } else if (o.t) {
    b = build_T(*o.t);
  } else if (o.t_dual) {
    b = build_T_dual(*o.t_dual);
  } else if (o.block == "middle") {
    b = middle_block();
    if (o.verify) cert = certify_block(b, middle_spec(), o.budget);
  } else if (o.block == "anchor") {
    b = anchor_block();
    if (o.verify) cert = certify_block(b, anchor_spec(), o.budget);
  } else if (o.block == "edge") {
    b = edge_block();
    if (o.verify) cert = certify_block(b, edge_spec(), o.budget);
  } else if (o.block == "edge-dual") {
    b = edge_block_dual();
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown block '" + o.block + "' (middle, anchor, edge, edge-dual)");
  }
  Json j = to_json(b.lattice);
  Json labels = Json::object();
  for (const auto& [name, v] : b.labels) labels[name] = v;
  j["labels"] = labels;
  emit(o.out, j);
  if (!o.dot.empty()) write_text(o.dot, hasse_dot(b.lattice.poset(), labels_of(b), "block"));
  if (!cert) return 0;
  return finish(o, *cert, to_json(*cert));
}

int cmd_frucht(const Options& o) {
  auto g = need_group(o);
  auto t0 = std::chrono::steady_clock::now();
  Graph gr = frucht_graph(g, o.budget);
  double built = since(t0);
  emit(o.out, to_json(gr));
  if (!o.dot.empty()) {
    std::ostringstream d;
    d << "graph frucht {\n  node [shape=point];\n";
    for (auto [u, v] : gr.edges()) d << "  " << u << " -- " << v << ";\n";
    d << "}\n";
    write_text(o.dot, d.str());
  }
  if (!o.verify) return 0;
  Report r;
  t0 = std::chrono::steady_clock::now();
  auto brute = brute_graph_automorphisms(gr);
  r.add("Aut(graph) ≅ G by brute force", brute.order() == g.n && groups_isomorphic(group_of(brute), g),
        "|Aut| = " + std::to_string(brute.order()));
  Json j = to_json(r);
  j["vertices"] = gr.size();
  j["timings"] = {{"build", built}, {"verify", since(t0)}};
  return finish(o, r, j);
}

int cmd_represent(const Options& o) {
  auto P = need_poset(o);
  auto G = need_group(o);
  Representation rep;
  if (!o.graph.empty()) {
    // A caller-supplied graph must already realize G.
    rep.graph = graph_from_json(read_json(o.graph));
    if (!graph_realizes(rep.graph, G, o.budget))
      throw Error(ErrorKind::InvalidInput, "--graph does not have automorphism group G");
    auto t0 = std::chrono::steady_clock::now();
    rep.frame = build_frame(P, rep.graph);
    rep.frame_report = certify_frame(rep.frame, P, build_H_nu(P, rep.graph.size()));
    rep.seconds["frame"] = since(t0);
    if (!rep.frame_report.ok()) throw Error(ErrorKind::CertificationFailed, "frame certification failed");
    t0 = std::chrono::steady_clock::now();
    rep.assignment = assign_blocks(P, rep.graph.size());
    rep.inflated = inflate(rep.frame, rep.assignment);
    rep.seconds["inflate"] = since(t0);
  } else {
    rep = represent(P, G, o.frucht, o.budget);
  }
  emit(o.out, to_json(rep.inflated.lattice));
  if (!o.dot.empty()) write_text(o.dot, representation_dot(rep));
  if (!o.frame_dot.empty()) write_text(o.frame_dot, frame_dot(rep.frame));
  Json j;
  j["elements"] = rep.inflated.lattice.size();
  j["frame_elements"] = rep.frame.lattice.size();
  j["graph"] = to_json(rep.graph);
  j["frame"] = to_json(rep.frame_report);
  Report r = rep.frame_report;
  if (o.verify) {
    auto v = verify_representation(rep.inflated.lattice, P, G, o.budget);
    j["verification"] = verification_json(v);
    for (const auto& c : v.report.checks) r.add(c.name, c.pass, c.detail);
  }
  j["ok"] = r.ok();
  j["timings"] = timings_json(rep.seconds);
  return finish(o, r, j);
}

int cmd_verify(const Options& o) {
  auto L = need_lattice(o);
  auto P = need_poset(o);
  auto G = need_group(o);
  auto v = verify_representation(L, P, G, o.budget);
  Json j = verification_json(v);
  j["elements"] = L.size();
  return finish(o, v.report, j);
}

int cmd_princ(const Options& o) {
  auto L = need_lattice(o);
  auto pp = principal_poset(L);
  emit(o.out, princ_json(pp));
  if (!o.dot.empty()) write_text(o.dot, princ_dot(pp));
  return 0;
}

int cmd_aut(const Options& o) {
  std::size_t chosen = !o.lattice.empty() + !o.poset.empty() + !o.graph.empty();
  if (chosen != 1) throw Error(ErrorKind::InvalidInput, "choose exactly one of --lattice, --poset, --graph");
  PermGroup g = !o.lattice.empty() ? lattice_automorphisms(need_lattice(o), o.budget)
                : !o.poset.empty() ? poset_automorphisms(need_poset(o), o.budget)
                                   : graph_automorphisms(graph_from_json(read_json(o.graph)), o.budget);
  Json j{{"order", g.order()}, {"generators", g.generators()}};
  if (g.order() <= kGroupBound) j["table"] = to_json(group_of(g))["table"];
  emit(o.out, j);
  if (o.group.empty()) return 0;
  Report r;
  auto G = need_group(o);
  r.add("Aut ≅ G", g.order() == G.n && groups_isomorphic(group_of(g), G));
  return finish(o, r, to_json(r));
}

// Least-member oracle: every principal congruence equals the smallest
// enumerated congruence containing its pair. Returns the first mismatch.
std::optional<Pair> oracle_mismatch(const Lattice& l, std::size_t& pairs) {
  auto all = all_congruences(l);
  for (Index a = 0; a < l.size(); ++a)
    for (Index b : bits_to_vec(l.poset().up(a))) {
      if (a == b) continue;
      ++pairs;
      std::optional<Partition> least;
      for (const auto& c : all)
        if (c.same(a, b) && (!least || c.refines(*least))) least = c;
      if (!least || !(*least == principal_congruence(l, a, b))) return Pair{a, b};
    }
  return std::nullopt;
}

int cmd_oracle(const Options& o) {
  std::vector<Lattice> corpus;
  if (!o.lattice.empty())
    corpus.push_back(need_lattice(o));
  else
    for (std::size_t n = 1; n <= 6; ++n)
      for (auto& l : all_lattices(n)) corpus.push_back(std::move(l));
  std::size_t pairs = 0;
  std::string bad;
  for (std::size_t i = 0; i < corpus.size() && bad.empty(); ++i)
    if (auto m = oracle_mismatch(corpus[i], pairs)) bad = "lattice " + std::to_string(i) + ", con" + pair_str(*m);
  Report r;
  r.add("principal congruences match the enumeration (" + std::to_string(corpus.size()) + " lattices, " +
            std::to_string(pairs) + " pairs)",
        bad.empty(), bad);
  return finish(o, r, to_json(r));
}

int cmd_export(const Options& o) {
  std::size_t chosen = !o.lattice.empty() + !o.poset.empty() + !o.graph.empty();
  if (chosen != 1) throw Error(ErrorKind::InvalidInput, "choose exactly one of --lattice, --poset, --graph");
  if (!o.graph.empty()) {
    auto g = graph_from_json(read_json(o.graph));
    emit(o.out, to_json(g));
    if (!o.dot.empty()) {
      std::ostringstream d;
      d << "graph g {\n";
      for (Index v = 0; v < g.size(); ++v) d << "  " << v << ";\n";
      for (auto [u, v] : g.edges()) d << "  " << u << " -- " << v << ";\n";
      d << "}\n";
      write_text(o.dot, d.str());
    }
    return 0;
  }
  if (!o.lattice.empty()) {
    auto l = need_lattice(o);
    emit(o.out, to_json(l));
    if (!o.dot.empty()) write_text(o.dot, hasse_dot(l.poset(), {{l.bottom(), "0"}, {l.top(), "1"}}));
    return 0;
  }
  auto p = need_poset(o);
  emit(o.out, to_json(p));
  if (!o.dot.empty()) write_text(o.dot, hasse_dot(p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices with prescribed principal congruences and automorphisms"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "JSON output file (stdout if omitted)");
    c->add_option("--report", o.report, "JSON report file");
    c->add_option("--dot", o.dot, "DOT output file");
    c->add_option("--budget", o.budget, "search node budget");
    c->add_option("--jobs", o.jobs, "worker cap; results do not depend on it")->check(CLI::PositiveNumber);
  };
  auto blocks = app.add_subcommand("blocks", "emit a block or S(n)");
  blocks->add_option("--s", o.s, "S(n)");
  blocks->add_option("--t", o.t, "T(n)");
  blocks->add_option("--t-dual", o.t_dual, "dual of T(n)");
  blocks->add_option("--block", o.block, "middle, anchor, edge or edge-dual");
  blocks->add_flag("--verify", o.verify, "certify the block");
  auto frucht = app.add_subcommand("frucht", "graph with automorphism group G");
  frucht->add_option("--group", o.group, "c<n>, d<n>, s<n>, v4, products like c2xc3, or table:<file>");
  frucht->add_flag("--verify", o.verify, "brute-force the automorphism group");
  auto represent = app.add_subcommand("represent", "build L with Princ L ≅ P and Aut L ≅ G");
  represent->add_option("--poset", o.poset, "bounded poset JSON");
  represent->add_option("--group", o.group, "group spec");
  represent->add_option("--graph", o.graph, "graph JSON to use instead of the generated one");
  represent->add_flag("--frucht", o.frucht, "always use the Frucht graph");
  represent->add_option("--frame-dot", o.frame_dot, "DOT file for the frame before inflation");
  represent->add_flag("--verify", o.verify, "verify Princ and Aut of the result");
  auto verify = app.add_subcommand("verify", "check Princ L ≅ P and Aut L ≅ G");
  verify->add_option("--lattice", o.lattice, "lattice JSON");
  verify->add_option("--poset", o.poset, "poset JSON");
  verify->add_option("--group", o.group, "group spec");
  auto princ = app.add_subcommand("princ", "poset of principal congruences");
  princ->add_option("--lattice", o.lattice, "lattice JSON");
  auto aut = app.add_subcommand("aut", "automorphism group");
  aut->add_option("--lattice", o.lattice, "lattice JSON");
  aut->add_option("--poset", o.poset, "poset JSON");
  aut->add_option("--graph", o.graph, "graph JSON");
  aut->add_option("--group", o.group, "compare against this group");
  auto oracle = app.add_subcommand("oracle", "principal congruences against full enumeration");
  oracle->add_option("--lattice", o.lattice, "lattice JSON (default: every lattice with at most 6 elements)");
  auto exp = app.add_subcommand("export", "normalize JSON and emit DOT");
  exp->add_option("--lattice", o.lattice, "lattice JSON");
  exp->add_option("--poset", o.poset, "poset JSON");
  exp->add_option("--graph", o.graph, "graph JSON");
  for (auto* c : {blocks, frucht, represent, verify, princ, aut, oracle, exp}) common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (blocks->parsed()) return cmd_blocks(o);
    if (frucht->parsed()) return cmd_frucht(o);
    if (represent->parsed()) return cmd_represent(o);
    if (verify->parsed()) return cmd_verify(o);
    if (princ->parsed()) return cmd_princ(o);
    if (aut->parsed()) return cmd_aut(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (exp->parsed()) return cmd_export(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
  return 2;
}
