#include "stw/cli.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stw/generators.hpp"
#include "stw/io.hpp"
#include "stw/matrix.hpp"
#include "stw/mis.hpp"
#include "stw/overlap.hpp"
#include "stw/separator.hpp"
#include "stw/stretch.hpp"

namespace stw::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;
constexpr int kExitError = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "text";
  std::optional<long long> seed;
  int jobs = 1;
  int budget = 64;
  int limit_n = 0;  // 0 = default per command
};

void add_common(CLI::App* cmd, Options& opt, bool with_input = true) {
  cmd->set_help_flag("--help", "print help");
  if (with_input)
    cmd->add_option("--input", opt.inputs, "instance file (repeatable for batches)");
  cmd->add_option("--output", opt.output, "artifact output file");
  cmd->add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_option("--jobs", opt.jobs, "parallel jobs for batches")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", opt.budget, "edge budget for exact biclique search");
  cmd->add_option("--limit-n", opt.limit_n, "oracle size cap");
}

struct Outcome {
  json report;
  int code = kExitOk;
  std::string artifact;  // written to --output when set
};

std::string edge_str(const OrderedGraph& g, int e) {
  return std::to_string(g.edges[e].first) + "-" + std::to_string(g.edges[e].second);
}

json edges_json(const OrderedGraph& g, const std::vector<int>& ids) {
  json arr = json::array();
  for (int e : ids) arr.push_back({g.edges[e].first, g.edges[e].second});
  return arr;
}

std::string sequence_text(int n, const PartitionSequence& seq) {
  std::ostringstream ss;
  emit_sequence(ss, n, seq);
  return ss.str();
}

std::string divisions_text(int n, const DivisionSequence& chain) {
  std::ostringstream ss;
  emit_divisions(ss, n, chain);
  return ss.str();
}

json separation_json(const Separation& sep) {
  json j;
  j["n"] = sep.n;
  j["A"] = sep.A;
  j["B"] = sep.B;
  j["C"] = sep.C();
  j["min_side"] = std::min(sep.a_only().size(), sep.b_only().size());
  j["max_side"] = std::max(sep.a_only().size(), sep.b_only().size());
  return j;
}

Separation separation_from_json(const json& j, int expect_n) {
  Separation sep;
  const json& s = j.contains("separation") ? j["separation"] : j;
  sep.n = s.at("n").get<int>();
  if (expect_n >= 0 && sep.n != expect_n)
    throw Error(Errc::Parse, "separation n does not match the graph");
  sep.A = s.at("A").get<std::vector<int>>();
  sep.B = s.at("B").get<std::vector<int>>();
  std::sort(sep.A.begin(), sep.A.end());
  std::sort(sep.B.begin(), sep.B.end());
  return sep;
}

json decomposition_json(const TreeDecomposition& td) {
  json j;
  j["parent"] = td.parent;
  j["bags"] = td.bags;
  j["width"] = td.width();
  return j;
}

std::pair<int, int> parse_factor(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw Error(Errc::Parse, "factor must be p/q");
  int num = std::stoi(s.substr(0, slash));
  int den = std::stoi(s.substr(slash + 1));
  if (num < 0 || den <= 0 || num > den) throw Error(Errc::Parse, "factor must be within [0,1]");
  return {num, den};
}

// ---------------------------------------------------------------- gen

Outcome run_gen(const std::string& which, const Options& opt, int k, int b, int h, int n, int d,
                const std::vector<int>& edge, const std::string& emit) {
  Outcome out;
  json& rep = out.report;
  rep["command"] = "gen " + which;

  OrderedGraph graph;
  std::optional<PartitionSequence> witness;
  std::optional<int> claimed;
  std::vector<int> stems;

  if (which == "hk") {
    auto inst = gen_hk(k);
    graph = inst.graph;
    witness = inst.witness;
    claimed = inst.claimed_stretch;
    rep["k"] = k;
  } else if (which == "hk-bad") {
    graph = gen_hk_bad_order(k);
    rep["k"] = k;
  } else if (which == "a3") {
    auto inst = gen_abh(b, h);
    graph = inst.graph;
    witness = inst.witness;
    claimed = inst.claimed_stretch;
    rep["b"] = b;
    rep["h"] = h;
  } else if (which == "grid") {
    graph = gen_grid(k).graph;
    rep["k"] = k;
  } else if (which == "flatten-grid") {
    auto r = gen_flattened_grid(k);
    graph = std::move(r.graph);
    stems = std::move(r.stem);
    rep["k"] = k;
  } else if (which == "random") {
    if (!opt.seed) throw Error(Errc::Parse, "gen random requires --seed");
    graph = random_bounded_degree(n, d, static_cast<uint64_t>(*opt.seed));
    rep["n"] = n;
    rep["d"] = d;
    rep["seed"] = *opt.seed;
  } else {  // subdivide | flatten
    if (opt.inputs.size() != 1) throw Error(Errc::Parse, which + " needs exactly one --input");
    OrderedGraph g = expect_graph(parse_instance_file(opt.inputs[0]));
    if (edge.size() != 2) throw Error(Errc::Parse, "--edge needs two endpoints");
    auto r = which == "subdivide" ? subdivide_simple(g, {edge[0], edge[1]})
                                  : flatten_edge(g, {edge[0], edge[1]});
    graph = std::move(r.graph);
    stems = std::move(r.stem);
  }

  rep["n_out"] = graph.n;
  rep["m_out"] = graph.edge_count();
  if (claimed) rep["claimed_stretch"] = *claimed;

  std::ostringstream art;
  if (emit == "graph") {
    emit_graph(art, graph, stems.empty() ? nullptr : &stems);
  } else if (emit == "matrix") {
    emit_matrix(art, adjacency_matrix(graph));
  } else if (emit == "sequence") {
    if (!witness) throw Error(Errc::Parse, "this generator has no witness sequence");
    emit_sequence(art, graph.n, *witness);
  } else {
    throw Error(Errc::Parse, "unknown --emit kind '" + emit + "'");
  }
  out.artifact = art.str();
  if (witness && emit == "graph") rep["witness_available"] = true;
  return out;
}

// ---------------------------------------------------------------- stw

Outcome run_stw_exact(const Options& opt, const std::string& input) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  int order_limit = opt.limit_n > 0 ? opt.limit_n : 7;
  ExactResult r = exact_stw(g, order_limit);
  OrderedGraph relabeled = relabel_graph(g, r.best_order);
  StretchReport check = verify_sequence(relabeled, r.witness);
  Outcome out;
  out.report["command"] = "stw exact";
  out.report["instance"] = input;
  out.report["value"] = r.value;
  out.report["best_order"] = r.best_order;
  out.report["witness_verified"] = check.max_stretch == r.value;
  out.artifact = sequence_text(g.n, r.witness);
  return out;
}

Outcome run_stw_fixed(const Options& opt, const std::string& input, int cap) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  int lattice_limit = opt.limit_n > 0 ? opt.limit_n : 10;
  ExactFixedResult r = exact_stw_fixed_order(g, cap, lattice_limit);
  Outcome out;
  out.report["command"] = "stw fixed-order";
  out.report["instance"] = input;
  out.report["cap_exceeded"] = r.cap_exceeded;
  if (!r.cap_exceeded) {
    out.report["value"] = r.value;
    StretchReport check = verify_sequence(g, r.witness);
    out.report["witness_verified"] = check.max_stretch == r.value;
    out.artifact = sequence_text(g.n, r.witness);
  } else {
    out.code = kExitRefused;
  }
  return out;
}

Outcome run_stw_verify(const std::string& input, const std::string& seq_path) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  PartitionSequence seq = expect_sequence(parse_instance_file(seq_path));
  StretchReport r = verify_sequence(g, seq);
  Outcome out;
  out.report["command"] = "stw verify";
  out.report["instance"] = input;
  out.report["max_stretch"] = r.max_stretch;
  out.report["worst_step"] = r.worst_step;
  out.report["worst_part"] = r.worst_part_rep;
  out.report["per_step"] = r.per_step_stretch;
  return out;
}

Outcome run_stw_approx(const std::string& input, int k) {
  SymBitMatrix m = expect_matrix_or_graph(parse_instance_file(input));
  ApproxOutcome r = approx_stw(m, k);
  Outcome out;
  out.report["command"] = "stw approx";
  out.report["instance"] = input;
  out.report["k"] = k;
  out.report["bound"] = r.bound;
  if (r.success) {
    out.report["status"] = "success";
    out.report["verified_stretch"] = r.verified_stretch;
    out.artifact = sequence_text(m.n, r.witness);
  } else {
    out.report["status"] = "refused";
    out.report["claim"] = "stw > " + std::to_string(k);
    out.report["wide_k"] = r.wide_k;
    bool wide = true;
    for (int i = 0; i < r.refusal_witness.parts(); ++i)
      wide = wide && is_part_wide(m, r.refusal_witness, i, r.wide_k);
    out.report["witness_wide_verified"] = wide;
    DivisionSequence single;
    single.chain.push_back(r.refusal_witness);
    std::ostringstream ss;
    emit_divisions(ss, m.n, single);
    out.artifact = ss.str();
    out.code = kExitRefused;
  }
  return out;
}

// ---------------------------------------------------------------- overlap

Outcome run_overlap_build(const std::string& input) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  OverlapGraph ov = overlap_graph(g);
  Outcome out;
  out.report["command"] = "overlap build";
  out.report["instance"] = input;
  out.report["edges"] = g.edge_count();
  out.report["crossings"] = ov.crossings.size();
  json pairs = json::array();
  for (auto [a, b] : ov.crossings) pairs.push_back({edge_str(g, a), edge_str(g, b)});
  out.report["pairs"] = pairs;
  json isolated = json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    if (ov.crossing_degree(e) == 0) isolated.push_back(edge_str(g, e));
  out.report["isolated"] = isolated;
  return out;
}

Outcome run_overlap_rainbow(const std::string& input, int vertex) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  if (vertex < 0 || vertex >= g.n) throw Error(Errc::OutOfRange, "--vertex out of range");
  Rainbow r = max_rainbow_over(g, vertex);
  Outcome out;
  out.report["command"] = "overlap rainbow";
  out.report["instance"] = input;
  out.report["vertex"] = vertex;
  out.report["order"] = r.order();
  out.report["length"] = r.length(g);
  out.report["edges"] = edges_json(g, r.edge_ids);
  return out;
}

Outcome run_overlap_biclique(const Options& opt, const std::string& input, int s) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  BicliqueResult r = clean_biclique_at_least(g, s, opt.budget);
  Outcome out;
  out.report["command"] = "overlap clean-biclique";
  out.report["instance"] = input;
  out.report["s"] = s;
  out.report["nodes"] = r.nodes;
  out.report["exact"] = r.exact;
  if (r.status == SearchStatus::Found) {
    out.report["status"] = "found";
    out.report["X"] = edges_json(g, r.biclique.X);
    out.report["Y"] = edges_json(g, r.biclique.Y);
  } else {
    out.report["status"] = r.status == SearchStatus::Absent ? "absent" : "unresolved";
    out.code = kExitRefused;
  }
  return out;
}

Outcome run_overlap_ktt(const Options& opt, const std::string& input, int t) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  KttCertificate c = ktt_upper_check(g, t, opt.budget);
  Outcome out;
  out.report["command"] = "overlap ktt-check";
  out.report["instance"] = input;
  out.report["t"] = t;
  out.report["s"] = c.s;
  if (c.status == SearchStatus::Absent) {
    out.report["status"] = "certified";
    out.report["implied_t"] = c.implied_t;
  } else if (c.status == SearchStatus::Found) {
    out.report["status"] = "biclique-found";
    out.report["X"] = edges_json(g, c.obstruction->X);
    out.report["Y"] = edges_json(g, c.obstruction->Y);
    out.code = kExitRefused;
  } else {
    out.report["status"] = "unresolved";
    out.code = kExitRefused;
  }
  return out;
}

// ---------------------------------------------------------------- division

Outcome run_division_wide(const std::string& input, const std::string& div_path, int k) {
  SymBitMatrix m = expect_matrix_or_graph(parse_instance_file(input));
  DivisionSequence chain = expect_divisions(parse_instance_file(div_path));
  const SymDivision& d = chain.chain.back();
  Outcome out;
  out.report["command"] = "division wide";
  out.report["instance"] = input;
  out.report["k"] = k;
  json per = json::array();
  bool all_wide = true, any_wide = false;
  for (int i = 0; i < d.parts(); ++i) {
    bool w = is_part_wide(m, d, i, k);
    per.push_back(w);
    all_wide = all_wide && w;
    any_wide = any_wide || w;
  }
  out.report["parts"] = d.parts();
  out.report["per_part_wide"] = per;
  out.report["division_wide"] = all_wide;
  out.report["division_diagonal"] = !any_wide;
  return out;
}

Outcome run_division_diagonal_seq(const std::string& input, int q) {
  SymBitMatrix m = expect_matrix_or_graph(parse_instance_file(input));
  GreedyDivisionResult r = greedy_diagonal_sequence(m, q);
  Outcome out;
  out.report["command"] = "division diagonal-seq";
  out.report["instance"] = input;
  out.report["q"] = q;
  if (!r.stuck) {
    out.report["status"] = "complete";
    out.report["chain_length"] = r.chain.chain.size();
    out.artifact = divisions_text(m.n, r.chain);
  } else {
    out.report["status"] = "stuck";
    DivisionSequence single;
    single.chain.push_back(r.stuck_witness);
    out.artifact = divisions_text(m.n, single);
    out.code = kExitRefused;
  }
  return out;
}

Outcome run_division_to_sequence(const std::string& input, const std::string& div_path, int q) {
  SymBitMatrix m = expect_matrix_or_graph(parse_instance_file(input));
  DivisionSequence chain = expect_divisions(parse_instance_file(div_path));
  PartitionSequence seq = sequence_from_divisions(m, chain, q);
  int stretch = matrix_sequence_stretch(m, seq);
  Outcome out;
  out.report["command"] = "division to-sequence";
  out.report["instance"] = input;
  out.report["q"] = q;
  out.report["verified_stretch"] = stretch;
  out.report["bound_4q3"] = 4ull * q * q * q;
  out.artifact = sequence_text(m.n, seq);
  return out;
}

// ---------------------------------------------------------------- separator

Outcome run_separator_balanced(const std::string& input, int t) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  BalancedResult r = balanced_separator(g, t);
  bool valid = verify_separation(g, r.sep, 1, 12);
  Outcome out;
  out.report["command"] = "separator balanced";
  out.report["instance"] = input;
  out.report["t"] = t;
  out.report["case"] = r.case_used;
  out.report["fallback"] = r.fallback;
  out.report["separator_size"] = r.separator.size();
  out.report["valid_at_1_12"] = valid;
  out.report["separation"] = separation_json(r.sep);
  out.artifact = json{{"separation", separation_json(r.sep)}}.dump(2) + "\n";
  return out;
}

Outcome run_separator_left_right(const std::string& input, int t, int vertex) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  if (vertex < 0 || vertex >= g.n) throw Error(Errc::OutOfRange, "--vertex out of range");
  LeftRightResult r = left_right_separator(g, t, vertex);
  Outcome out;
  out.report["command"] = "separator left-right";
  out.report["instance"] = input;
  out.report["t"] = t;
  out.report["vertex"] = vertex;
  out.report["x"] = r.x;
  out.report["U"] = r.U;
  out.report["size"] = r.U.size();
  out.report["rainbow_length"] = r.rainbow_len;
  out.report["size_bound"] = r.size_bound;
  out.report["valid"] = verify_left_right(g, r.x, r.U);
  return out;
}

Outcome run_separator_verify(const std::string& input, const std::string& sep_path,
                             const std::string& factor) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  json j = json::parse(read_file(sep_path));
  Separation sep = separation_from_json(j, g.n);
  auto [num, den] = parse_factor(factor);
  bool valid = verify_separation(g, sep, num, den);
  Outcome out;
  out.report["command"] = "separator verify";
  out.report["instance"] = input;
  out.report["factor"] = factor;
  out.report["valid"] = valid;
  if (!valid) out.code = kExitRefused;
  return out;
}

Outcome run_separator_treedecomp(const std::string& input, int t) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  TreeDecomposition td = tree_decomposition(g, t);
  bool valid = validate_decomposition(g, td);
  Outcome out;
  out.report["command"] = "separator treedecomp";
  out.report["instance"] = input;
  out.report["t"] = t;
  out.report["width"] = td.width();
  out.report["nodes"] = td.bags.size();
  out.report["valid"] = valid;
  out.artifact = json{{"tree_decomposition", decomposition_json(td)}}.dump(2) + "\n";
  if (!valid) out.code = kExitRefused;
  return out;
}

// ---------------------------------------------------------------- mis

Outcome run_mis(const std::string& mode, const Options& opt, const std::string& input,
                int threshold, const std::string& td_path) {
  OrderedGraph g = expect_graph(parse_instance_file(input));
  MisResult r;
  Outcome out;
  if (mode == "exact") {
    r = mis_exact(g, opt.limit_n > 0 ? opt.limit_n : 24);
  } else if (mode == "branch") {
    r = mis_branch(g, threshold);
  } else {
    TreeDecomposition td;
    if (!td_path.empty()) {
      json j = json::parse(read_file(td_path));
      const json& t = j.contains("tree_decomposition") ? j["tree_decomposition"] : j;
      td.parent = t.at("parent").get<std::vector<int>>();
      td.bags = t.at("bags").get<std::vector<std::vector<int>>>();
      for (auto& b : td.bags) std::sort(b.begin(), b.end());
    } else {
      td = min_degree_decomposition(g);
    }
    r = mis_tw_dp(g, td);
    out.report["width"] = td.width();
  }
  out.report["command"] = "mis " + mode;
  out.report["instance"] = input;
  out.report["size"] = r.size;
  out.report["set"] = r.set;
  out.report["independent"] = is_independent_set(g, r.set);
  if (mode == "branch") {
    out.report["node_count"] = r.node_count;
    out.report["leaf_widths"] = r.leaf_widths;
  }
  return out;
}

// ---------------------------------------------------------------- driver

void print_text(std::ostream& os, const json& j, int indent = 0) {
  for (auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << std::string(indent, ' ') << key << ":\n";
      print_text(os, value, indent + 2);
    } else {
      os << std::string(indent, ' ') << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stretch-width toolkit"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options opt;

  // gen
  int k = 2, b = 3, h = 2, rn = 10, rd = 3, cap = 1 << 28, s = 1, t = 1, q = 4;
  int vertex = 0, threshold = 0, approx_k = 1;
  std::vector<int> edge;
  std::string emit = "graph", seq_path, div_path, sep_path, td_path, factor = "1/12";

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  std::vector<std::string> gen_kinds = {"hk", "hk-bad", "a3", "grid", "flatten-grid",
                                        "random", "subdivide", "flatten"};
  for (const auto& kind : gen_kinds) {
    CLI::App* c = gen->add_subcommand(kind);
    add_common(c, opt, kind == "subdivide" || kind == "flatten");
    c->add_option("--k", k, "size parameter");
    c->add_option("--b", b, "branching factor");
    c->add_option("--h", h, "height");
    c->add_option("--n", rn, "vertex count");
    c->add_option("--d", rd, "degree bound");
    c->add_option("--edge", edge, "edge endpoints")->expected(2);
    c->add_option("--emit", emit, "artifact kind: graph|matrix|sequence");
  }

  CLI::App* stw_cmd = app.add_subcommand("stw", "stretch-width computations");
  stw_cmd->require_subcommand(1);
  CLI::App* stw_exact_cmd = stw_cmd->add_subcommand("exact");
  add_common(stw_exact_cmd, opt);
  CLI::App* stw_fixed = stw_cmd->add_subcommand("fixed-order");
  add_common(stw_fixed, opt);
  stw_fixed->add_option("--cap", cap, "bottleneck cap");
  CLI::App* stw_verify = stw_cmd->add_subcommand("verify");
  add_common(stw_verify, opt);
  stw_verify->add_option("--sequence", seq_path, "sequence file")->required();
  CLI::App* stw_approx = stw_cmd->add_subcommand("approx");
  add_common(stw_approx, opt);
  stw_approx->add_option("--k", approx_k, "approximation parameter")->required();

  CLI::App* ov = app.add_subcommand("overlap", "overlap-graph analysis");
  ov->require_subcommand(1);
  CLI::App* ov_build = ov->add_subcommand("build");
  add_common(ov_build, opt);
  CLI::App* ov_rainbow = ov->add_subcommand("rainbow");
  add_common(ov_rainbow, opt);
  ov_rainbow->add_option("--vertex", vertex, "vertex")->required();
  CLI::App* ov_bic = ov->add_subcommand("clean-biclique");
  add_common(ov_bic, opt);
  ov_bic->add_option("--s", s, "biclique order")->required();
  CLI::App* ov_ktt = ov->add_subcommand("ktt-check");
  add_common(ov_ktt, opt);
  ov_ktt->add_option("--t", t, "target t")->required();

  CLI::App* div = app.add_subcommand("division", "matrix divisions");
  div->require_subcommand(1);
  CLI::App* div_wide = div->add_subcommand("wide");
  add_common(div_wide, opt);
  div_wide->add_option("--division", div_path, "division file")->required();
  div_wide->add_option("--k", k, "wideness parameter")->required();
  CLI::App* div_diag = div->add_subcommand("diagonal-seq");
  add_common(div_diag, opt);
  div_diag->add_option("--q", q, "diagonality parameter")->required();
  CLI::App* div_toseq = div->add_subcommand("to-sequence");
  add_common(div_toseq, opt);
  div_toseq->add_option("--divisions", div_path, "division chain file")->required();
  div_toseq->add_option("--q", q, "diagonality parameter")->required();

  CLI::App* sep = app.add_subcommand("separator", "balanced separators");
  sep->require_subcommand(1);
  CLI::App* sep_bal = sep->add_subcommand("balanced");
  add_common(sep_bal, opt);
  sep_bal->add_option("--t", t, "biclique-freeness parameter")->required();
  CLI::App* sep_lr = sep->add_subcommand("left-right");
  add_common(sep_lr, opt);
  sep_lr->add_option("--t", t, "biclique-freeness parameter")->required();
  sep_lr->add_option("--vertex", vertex, "pivot vertex")->required();
  CLI::App* sep_verify = sep->add_subcommand("verify");
  add_common(sep_verify, opt);
  sep_verify->add_option("--separation", sep_path, "separation json")->required();
  sep_verify->add_option("--factor", factor, "balance factor p/q");
  CLI::App* sep_td = sep->add_subcommand("treedecomp");
  add_common(sep_td, opt);
  sep_td->add_option("--t", t, "biclique-freeness parameter")->required();

  CLI::App* mis = app.add_subcommand("mis", "maximum independent set");
  mis->require_subcommand(1);
  CLI::App* mis_exact_cmd = mis->add_subcommand("exact");
  add_common(mis_exact_cmd, opt);
  CLI::App* mis_branch_cmd = mis->add_subcommand("branch");
  add_common(mis_branch_cmd, opt);
  mis_branch_cmd->add_option("--threshold", threshold, "branching threshold");
  CLI::App* mis_dp = mis->add_subcommand("dp");
  add_common(mis_dp, opt);
  mis_dp->add_option("--td", td_path, "tree decomposition json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    // gen family (no batching)
    for (const auto& kind : gen_kinds) {
      if (gen->got_subcommand(kind)) {
        Outcome o = run_gen(kind, opt, k, b, h, rn, rd, edge, emit);
        if (!opt.output.empty()) {
          write_file(opt.output, o.artifact);
          o.report["output"] = opt.output;
          if (opt.format == "json") out << o.report.dump(2) << "\n";
          else print_text(out, o.report);
        } else {
          // the artifact is the report for generators
          if (opt.format == "json") {
            o.report["content"] = o.artifact;
            out << o.report.dump(2) << "\n";
          } else {
            out << o.artifact;
          }
        }
        return o.code;
      }
    }

    // all other commands: one outcome per --input
    std::vector<std::string> inputs = opt.inputs;
    if (inputs.empty()) throw Error(Errc::Parse, "--input is required");
    if (inputs.size() > 1 && !opt.output.empty())
      throw Error(Errc::Parse, "--output cannot be combined with multiple inputs");

    auto dispatch = [&](const std::string& input) -> Outcome {
      if (stw_cmd->got_subcommand("exact")) return run_stw_exact(opt, input);
      if (stw_cmd->got_subcommand("fixed-order")) return run_stw_fixed(opt, input, cap);
      if (stw_cmd->got_subcommand("verify")) return run_stw_verify(input, seq_path);
      if (stw_cmd->got_subcommand("approx")) return run_stw_approx(input, approx_k);
      if (ov->got_subcommand("build")) return run_overlap_build(input);
      if (ov->got_subcommand("rainbow")) return run_overlap_rainbow(input, vertex);
      if (ov->got_subcommand("clean-biclique")) return run_overlap_biclique(opt, input, s);
      if (ov->got_subcommand("ktt-check")) return run_overlap_ktt(opt, input, t);
      if (div->got_subcommand("wide")) return run_division_wide(input, div_path, k);
      if (div->got_subcommand("diagonal-seq")) return run_division_diagonal_seq(input, q);
      if (div->got_subcommand("to-sequence")) return run_division_to_sequence(input, div_path, q);
      if (sep->got_subcommand("balanced")) return run_separator_balanced(input, t);
      if (sep->got_subcommand("left-right")) return run_separator_left_right(input, t, vertex);
      if (sep->got_subcommand("verify")) return run_separator_verify(input, sep_path, factor);
      if (sep->got_subcommand("treedecomp")) return run_separator_treedecomp(input, t);
      if (mis->got_subcommand("exact")) return run_mis("exact", opt, input, threshold, td_path);
      if (mis->got_subcommand("branch")) return run_mis("branch", opt, input, threshold, td_path);
      if (mis->got_subcommand("dp")) return run_mis("dp", opt, input, threshold, td_path);
      throw Error(Errc::Parse, "unhandled subcommand");
    };

    std::vector<Outcome> outcomes(inputs.size());
    if (inputs.size() > 1 && opt.jobs > 1) {
      std::vector<std::future<Outcome>> futs;
      for (const auto& input : inputs)
        futs.push_back(std::async(std::launch::async, dispatch, input));
      for (size_t i = 0; i < futs.size(); ++i) outcomes[i] = futs[i].get();
    } else {
      for (size_t i = 0; i < inputs.size(); ++i) outcomes[i] = dispatch(inputs[i]);
    }

    int code = kExitOk;
    if (outcomes.size() == 1) {
      Outcome& o = outcomes[0];
      if (!opt.output.empty() && !o.artifact.empty()) {
        write_file(opt.output, o.artifact);
        o.report["output"] = opt.output;
      }
      if (opt.format == "json") out << o.report.dump(2) << "\n";
      else print_text(out, o.report);
      code = o.code;
    } else {
      json batch = json::array();
      for (Outcome& o : outcomes) {
        batch.push_back(o.report);
        code = std::max(code, o.code);
      }
      if (opt.format == "json") out << batch.dump(2) << "\n";
      else
        for (Outcome& o : outcomes) {
          print_text(out, o.report);
          out << "\n";
        }
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace stw::cli
