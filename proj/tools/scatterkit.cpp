#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scatterkit/io.hpp"
#include "scatterkit/scatterkit.hpp"

using namespace scatterkit;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  bool no_verify = false;
  std::string output;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

WeightedGraph read_graph(const std::string& path) {
  auto in = open_in(path);
  return load_graph(in);
}

json read_json(const std::string& path) {
  auto in = open_in(path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

PathMode parse_mode(const std::string& m) { return m == "all-paths" ? PathMode::all_paths : PathMode::canonical; }

/// Prints a report (always to stderr on failure) and maps it to an exit code.
int report_exit(const VerificationReport& rep, const Options& o, const char* what) {
  if (o.json) {
    std::cout << dump(to_json(rep));
  } else if (rep.ok) {
    std::cerr << what << ": ok, worst tau " << rep.worst_tau << ", worst diameter " << rep.worst_diameter << "\n";
  }
  if (!rep.ok) {
    std::cerr << what << ": FAILED " << rep.message << "\n";
    if (!o.json) std::cerr << to_json(rep)["witness"].dump() << "\n";
  }
  return rep.ok ? kOk : kFailed;
}

VertexSet read_terminals(const std::string& path) {
  auto in = open_in(path);
  VertexSet t;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    long long v;
    while (ls >> v) {
      if (v < 0) throw ParseError("negative terminal id");
      t.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw ParseError("malformed terminal file " + path);
  }
  return t;
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      p.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + tok + "'");
    }
  }
  return p;
}

ScatteringScheme scheme_by_name(const std::string& name) {
  if (name == "tree-scatter" || name == "tree") return tree_scheme();
  if (name == "chordal") return chordal_scheme();
  if (name == "cactus") return cactus_scheme();
  throw CLI::ValidationError("--scheme", "spr supports tree-scatter, chordal, cactus");
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::size_t n = 16, d = 2, depth = 3, k = 2, w = 4, h = 4;
  double p = 0.1, weight = 1.0;
  bool binary_root = false, unit = false;
};

int run_gen(const GenArgs& a, const Options& o) {
  WeightedGraph g;
  const auto& f = a.family;
  if (f == "full-tree") g = gen_full_ary_tree(a.d, a.depth, a.binary_root);
  else if (f == "hypercube") g = gen_hypercube(a.d);
  else if (f == "grid") g = gen_grid(a.w, a.h);
  else if (f == "path") g = gen_path(a.n, a.weight);
  else if (f == "cycle") g = gen_cycle(a.n, a.weight);
  else if (f == "tree") g = gen_random_tree(a.n, o.seed, a.unit);
  else if (f == "gnp") g = gen_random_graph(a.n, a.p, o.seed);
  else if (f == "chordal") g = gen_random_chordal(a.n, a.k, o.seed);
  else if (f == "cactus") g = gen_random_cactus(a.n, o.seed);
  else if (f == "planar") g = gen_random_planar(a.n, o.seed);
  std::ostringstream out;
  write_graph(out, g);
  write_text(o.output, out.str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct PartitionArgs {
  std::string graph, scheme, shifts, spd, mode = "canonical";
  double delta = 0, ddim = 0;
};

int run_partition(const PartitionArgs& a, const Options& o) {
  auto g = read_graph(a.graph);
  const double n = static_cast<double>(g.size());
  const auto mode = parse_mode(a.mode);
  Partition p;
  std::function<VerificationReport()> check;
  json extra = json::object();
  const auto& s = a.scheme;
  if (s == "tree-scatter") {
    p = tree_scattering_partition(RootedTree(g), a.delta);
    check = [&] { return verify_scattering(g, p, 2, 3, a.delta, mode); };
  } else if (s == "tree-weak") {
    p = tree_weak_partition(RootedTree(g), a.delta);
    check = [&] { return verify_weak_sparse(g, p, 4, 3, a.delta); };
  } else if (s == "chordal") {
    const long d = static_cast<long>(std::floor(a.delta + kEps));
    p = chordal_scattering_partition(g, d);
    check = [&, d] { return verify_scattering(g, p, 2, 3, static_cast<double>(d), mode); };
  } else if (s == "cactus") {
    p = cactus_scattering_partition(g, a.delta);
    check = [&] { return verify_scattering(g, p, 4, 5, a.delta, mode); };
  } else if (s == "general" || s == "doubling") {
    SchemeResult res;
    if (s == "general") {
      res = general_strong_partition(g, a.delta, o.seed);
    } else {
      const double ddim = a.ddim > 0 ? a.ddim : estimate_ddim(g);
      extra["ddim"] = ddim;
      extra["ddim_estimated"] = !(a.ddim > 0);
      res = doubling_strong_partition(g, a.delta, ddim, o.seed);
    }
    p = std::move(res.partition);
    extra["attempts"] = res.attempts;
    std::ostringstream sh;
    write_shifts(sh, res.shifts);
    if (!a.shifts.empty()) write_text(a.shifts, sh.str());
    if (s == "general") {
      const double alpha = std::max(1.0, std::log2(n));
      extra["tau_bound"] = 6 * std::pow(n, 1 / alpha) * std::log(std::max(n, 2.0));
      check = [&, alpha] { return verify_strong_sparse(g, p, 8 * alpha, g.size(), a.delta); };
    } else {
      const double reach = 2 * (DoublingParams{}.c_top + 1) * a.delta;
      extra["diameter_bound"] = reach;
      check = [&, reach] { return verify_strong_sparse(g, p, 58 * reach / a.delta, g.size(), reach); };
    }
  } else if (s == "mpx") {
    if (a.shifts.empty()) throw CLI::ValidationError("--shifts", "mpx needs a shift file");
    auto in = open_in(a.shifts);
    auto shifts = parse_shifts(in);
    p = mpx_cluster(g, shifts, a.delta);
    check = [&] {
      VerificationReport r;
      r.ok = check_mpx_path_property(g, p);
      r.sigma = 1;
      if (!r.ok) r.message = "a shortest path to a center leaves its cluster";
      return r;
    };
  } else if (s == "spd-strong" || s == "spd-weak") {
    SPDHierarchy spd;
    if (a.spd.empty()) {
      spd = build_spd(g);
    } else {
      auto in = open_in(a.spd);
      spd = parse_spd(in);
    }
    const double rho = static_cast<double>(spd.depth());
    extra["rho"] = spd.depth();
    if (s == "spd-strong") {
      p = spd_strong_partition(g, spd, a.delta);
      const double e2 = std::exp(2.0);
      const auto tau = static_cast<std::size_t>((2 * rho + 4) * rho);
      check = [&, e2, rho, tau] { return verify_strong_sparse(g, p, 2 * e2 * rho, tau, 2 * e2 * a.delta); };
    } else {
      p = spd_weak_partition(g, spd, a.delta);
      const auto tau = static_cast<std::size_t>(5 * rho);
      check = [&, tau] { return verify_weak_sparse(g, p, 8, tau, a.delta); };
    }
  }
  json out = to_json(p);
  for (auto& [k, v] : extra.items()) out[k] = v;
  int code = kOk;
  if (!o.no_verify) {
    auto rep = check();
    out["verification"] = to_json(rep);
    if (!rep.ok) {
      std::cerr << "partition: self-check FAILED " << rep.message << "\n";
      code = kFailed;
    }
  }
  if (!o.output.empty()) write_text(o.output, dump(out));
  if (o.json || o.output.empty()) std::cout << dump(out);
  return code;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string graph, partition, cover, kind, mode = "canonical";
  double sigma = 1, delta = 0;
  std::size_t tau = 1;
};

int run_verify(const VerifyArgs& a, const Options& o) {
  auto g = read_graph(a.graph);
  if (a.kind == "cover") {
    if (a.cover.empty()) throw CLI::ValidationError("--cover", "cover verification needs --cover");
    auto c = cover_from_json(read_json(a.cover));
    return report_exit(verify_cover(g, c, a.sigma, a.tau, a.delta), o, "verify");
  }
  if (a.partition.empty()) throw CLI::ValidationError("--partition", "required for this kind");
  auto p = partition_from_json(read_json(a.partition), g.size());
  VerificationReport rep;
  if (a.kind == "scattering") rep = verify_scattering(g, p, a.sigma, a.tau, a.delta, parse_mode(a.mode));
  else if (a.kind == "weak") rep = verify_weak_sparse(g, p, a.sigma, a.tau, a.delta);
  else rep = verify_strong_sparse(g, p, a.sigma, a.tau, a.delta);
  return report_exit(rep, o, "verify");
}

// ---------------------------------------------------------------------------

struct ConvertArgs {
  std::string direction, graph, input;
  double sigma = 1;
};

int run_convert(const ConvertArgs& a, const Options& o) {
  auto g = read_graph(a.graph);
  json out;
  if (a.direction == "cover-to-partition") {
    out = to_json(cover_to_partition(g, cover_from_json(read_json(a.input))));
  } else {
    auto p = partition_from_json(read_json(a.input), g.size());
    out = to_json(partition_to_cover(g, p, a.sigma));
  }
  write_text(o.output, dump(out));
  return kOk;
}

struct CoverArgs {
  std::string graph;
  std::size_t r = 3;
  double delta = 1, c = 2;
};

int run_cover_kpr(const CoverArgs& a, const Options& o) {
  auto g = read_graph(a.graph);
  auto k = kpr_cover(g, a.r, a.delta, a.c);
  json out = to_json(k.cover);
  out["delta_prime"] = k.delta_prime;
  out["measured_diameter"] = k.measured_diameter;
  out["partitions"] = k.partitions;
  int code = kOk;
  if (!o.no_verify) {
    auto rep = verify_cover(g, k.cover, k.cover.sigma, std::size_t{1} << a.r, k.cover.delta);
    out["verification"] = to_json(rep);
    if (!rep.ok) code = kFailed;
  }
  write_text(o.output, dump(out));
  return code;
}

// ---------------------------------------------------------------------------

struct SpdArgs {
  std::string action, graph, spd, kind = "strong";
  double delta = 1;
};

int run_spd(const SpdArgs& a, Options o) {
  auto g = read_graph(a.graph);
  if (a.action == "build") {
    auto spd = build_spd(g);
    std::ostringstream out;
    write_spd(out, spd);
    write_text(o.output, out.str());
    std::cerr << "rho " << spd.depth() << "\n";
    return kOk;
  }
  if (a.spd.empty()) throw CLI::ValidationError("--spd", "required for " + a.action);
  if (a.action == "validate") {
    auto in = open_in(a.spd);
    auto spd = parse_spd(in);
    try {
      validate_spd(g, spd);
    } catch (const InvalidSPD& e) {
      std::cerr << "invalid SPD: " << e.what() << "\n";
      return kFailed;
    }
    if (o.json) std::cout << dump({{"ok", true}, {"rho", spd.depth()}});
    else std::cerr << "valid, rho " << spd.depth() << "\n";
    return kOk;
  }
  PartitionArgs pa;
  pa.graph = a.graph;
  pa.spd = a.spd;
  pa.delta = a.delta;
  pa.scheme = a.kind == "weak" ? "spd-weak" : "spd-strong";
  return run_partition(pa, o);
}

// ---------------------------------------------------------------------------

struct SprArgs {
  std::string graph, terminals, scheme = "tree-scatter", minor;
  std::size_t tau = 0;
};

int run_spr(const SprArgs& a, const Options& o) {
  auto g = read_graph(a.graph);
  auto terms = read_terminals(a.terminals);
  auto scheme = scheme_by_name(a.scheme);
  if (a.tau > 0) scheme.tau = a.tau;
  auto sol = solve_spr(g, terms, scheme);
  std::ostringstream minor;
  write_graph(minor, sol.minor);
  if (!a.minor.empty()) write_text(a.minor, minor.str());
  json out;
  out["terminals"] = sol.terminals;
  out["assignment"] = sol.assignment.terminal;
  out["iteration"] = sol.assignment.iteration;
  out["distortion"] = sol.distortion;
  out["worst_pair"] = {sol.worst_pair.first, sol.worst_pair.second};
  out["tau"] = sol.tau_used;
  int code = kOk;
  if (!o.no_verify) {
    auto diag = assignment_diagnostics(g, sol, scheme.tau_one());
    const double t = static_cast<double>(scheme.tau_one());
    const double gate = 64 * t * t * t;
    out["diagnostics"] = {{"ok", diag.ok()}, {"violations", diag.violations}, {"distortion_gate", gate}};
    if (!diag.ok() || sol.distortion > gate) code = kFailed;
  }
  if (a.minor.empty()) out["minor"] = minor.str();
  write_text(o.output, dump(out));
  return code;
}

// ---------------------------------------------------------------------------

struct EuclidArgs {
  std::string action, from, to;
  std::size_t dim = 2, trials = 10000;
  double delta = 1;
};

json cells_json(const std::vector<Cell>& cells) {
  json arr = json::array();
  for (const auto& c : cells) arr.push_back(c);
  return arr;
}

std::size_t rep_max(const json& out) { return out["max_cells"].get<std::size_t>(); }

int run_euclid(const EuclidArgs& a, const Options& o) {
  json out;
  int code = kOk;
  if (a.action == "cells") {
    auto from = parse_point(a.from), to = parse_point(a.to);
    if (from.size() != a.dim || to.size() != a.dim) throw ParseError("point dimension differs from --dim");
    auto cells = segment_cells(from, to, grid_scale(a.dim, a.delta));
    out = {{"count", cells.size()}, {"bound", 2 * a.dim}, {"cells", cells_json(cells)}};
  } else if (a.action == "fixture") {
    auto [x, y] = remark_fixture(a.dim);
    auto cells = segment_cells(x, y, 1.0);
    out = {{"from", x}, {"to", y}, {"count", cells.size()}, {"expected", 2 * a.dim}, {"cells", cells_json(cells)}};
    if (cells.size() != 2 * a.dim) code = kFailed;
  } else {
    auto rep = verify_grid_scattering(a.dim, a.delta, a.trials, o.seed);
    out = {{"ok", rep.ok}, {"trials", rep.trials}, {"max_cells", rep.max_cells}, {"violations", rep.violations}};
    if (!rep.ok) code = kFailed;
  }
  if (o.json) {
    std::cout << dump(out);
  } else if (out.contains("count")) {
    std::cout << out["count"].get<std::size_t>() << " cells\n";
  } else {
    std::cout << "max cells " << rep_max(out) << (code == kOk ? ", ok" : ", FAILED") << "\n";
  }
  return code;
}

// ---------------------------------------------------------------------------

struct ExperimentArgs {
  std::string name;
  std::size_t d = 2, depth = 2, k = 4, free_dims = 2, trials = 1000;
  std::string scheme = "tree-scatter";
};

int run_experiment(const ExperimentArgs& a, const Options& o) {
  json out;
  if (a.name == "tree-lb") {
    auto rep = experiment_tree_lb(a.d, a.depth, [&](const WeightedGraph& g, double delta) {
      return a.scheme == "tree-weak" ? tree_weak_partition(RootedTree(g), delta)
                                     : tree_scattering_partition(RootedTree(g), delta);
    });
    out = {{"d", rep.d}, {"depth", rep.depth}, {"n", rep.n}, {"delta", rep.delta},
           {"worst_ball", rep.worst_ball}, {"target", rep.target}, {"strong_diameter", rep.strong_diameter}};
  } else if (a.name == "tree-lb-exhaustive") {
    auto rep = exhaustive_tree_lb(a.d, a.depth);
    out = {{"partitions_checked", rep.partitions_checked}, {"min_worst_ball", rep.min_worst_ball},
           {"holds", rep.holds}};
  } else {
    auto p = hypercube_subcube_partition(a.d, a.free_dims);
    auto rep = experiment_supersc_lb(a.d, a.k, p, a.trials, o.seed);
    out = {{"trials", rep.trials}, {"max_separated", rep.max_separated}, {"mean_separated", rep.mean_separated},
           {"k", a.k}};
  }
  write_text(o.output, dump(out));
  return kOk;
}

// ---------------------------------------------------------------------------

int run_check(const std::string& what, const std::string& graph, const Options& o) {
  auto g = read_graph(graph);
  json out{{"class", what}};
  bool ok = true;
  if (what == "chordal") {
    try {
      auto ct = build_clique_tree(g);
      out["bags"] = ct.bags;
    } catch (const NotChordal& e) {
      ok = false;
      out["chordless_cycle"] = e.cycle();
      std::cerr << "not chordal: " << e.what() << "\n";
    }
  } else if (what == "cactus") {
    try {
      auto comp = cactus_composition(g);
      out["replay_matches"] = replay_matches(g, comp);
    } catch (const NotCactus& e) {
      ok = false;
      json block = json::array();
      for (const auto& ed : e.block()) block.push_back({ed.u, ed.v});
      out["offending_block"] = block;
      std::cerr << "not a cactus: " << e.what() << "\n";
    }
  } else {
    ok = g.edge_count() + 1 == g.size();
  }
  out["ok"] = ok;
  if (o.json) std::cout << dump(out);
  else std::cout << (ok ? "yes" : "no") << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scatterkit: scattering and sparse partitions, covers, and Steiner point removal"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool with_output = true) {
    sub->add_flag("--json", o.json, "machine readable output on stdout");
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_flag("--no-verify", o.no_verify, "skip the self-check");
    if (with_output) sub->add_option("-o,--output", o.output, "output file");
  };
  const std::vector<std::string> schemes{"tree-scatter", "tree-weak", "chordal", "cactus", "general",
                                         "doubling",     "mpx",       "spd-strong", "spd-weak"};
  int code = kOk;

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("family", ga.family)
      ->required()
      ->check(CLI::IsMember({"full-tree", "hypercube", "grid", "path", "cycle", "tree", "gnp", "chordal", "cactus",
                             "planar"}));
  gen->add_option("--n", ga.n);
  gen->add_option("--d", ga.d);
  gen->add_option("--depth", ga.depth);
  gen->add_option("--k", ga.k);
  gen->add_option("--width", ga.w);
  gen->add_option("--height", ga.h);
  gen->add_option("--p", ga.p);
  gen->add_option("--weight", ga.weight);
  gen->add_flag("--binary-root", ga.binary_root);
  gen->add_flag("--unit", ga.unit);
  common(gen);
  gen->callback([&] { code = run_gen(ga, o); });

  PartitionArgs pa;
  auto* part = app.add_subcommand("partition", "build and self-check a partition");
  part->add_option("--graph", pa.graph)->required();
  part->add_option("--scheme", pa.scheme)->required()->check(CLI::IsMember(schemes));
  part->add_option("--delta", pa.delta)->required()->check(CLI::PositiveNumber);
  part->add_option("--ddim", pa.ddim, "doubling dimension (estimated when absent)");
  part->add_option("--shifts", pa.shifts, "mpx shift file to read, or to write for general/doubling");
  part->add_option("--spd", pa.spd, "SPD file (built heuristically when absent)");
  part->add_option("--mode", pa.mode)->check(CLI::IsMember({"canonical", "all-paths"}));
  common(part);
  part->callback([&] { code = run_partition(pa, o); });

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "verify a partition or cover");
  ver->add_option("--graph", va.graph)->required();
  ver->add_option("--partition", va.partition);
  ver->add_option("--cover", va.cover);
  ver->add_option("--kind", va.kind)->required()->check(CLI::IsMember({"scattering", "weak", "strong", "cover"}));
  ver->add_option("--sigma", va.sigma)->required();
  ver->add_option("--tau", va.tau)->required();
  ver->add_option("--delta", va.delta)->required();
  ver->add_option("--mode", va.mode)->check(CLI::IsMember({"canonical", "all-paths"}));
  common(ver, false);
  ver->callback([&] { code = run_verify(va, o); });

  ConvertArgs ca;
  auto* conv = app.add_subcommand("convert", "convert between covers and partitions");
  conv->add_option("direction", ca.direction)
      ->required()
      ->check(CLI::IsMember({"cover-to-partition", "partition-to-cover"}));
  conv->add_option("--graph", ca.graph)->required();
  conv->add_option("--input", ca.input)->required();
  conv->add_option("--sigma", ca.sigma);
  common(conv);
  conv->callback([&] { code = run_convert(ca, o); });

  CoverArgs cva;
  auto* cov = app.add_subcommand("cover", "build a sparse cover");
  auto* kpr = cov->add_subcommand("kpr", "KPR chopping cover");
  cov->require_subcommand(1);
  kpr->add_option("--graph", cva.graph)->required();
  kpr->add_option("--r", cva.r);
  kpr->add_option("--delta", cva.delta)->required()->check(CLI::PositiveNumber);
  kpr->add_option("--c", cva.c);
  common(kpr);
  kpr->callback([&] { code = run_cover_kpr(cva, o); });

  SpdArgs sa;
  auto* spd = app.add_subcommand("spd", "shortest path decompositions");
  spd->add_option("action", sa.action)->required()->check(CLI::IsMember({"build", "validate", "partition"}));
  spd->add_option("--graph", sa.graph)->required();
  spd->add_option("--spd", sa.spd);
  spd->add_option("--delta", sa.delta);
  spd->add_option("--kind", sa.kind)->check(CLI::IsMember({"strong", "weak"}));
  common(spd);
  spd->callback([&] { code = run_spd(sa, o); });

  SprArgs ra;
  auto* spr = app.add_subcommand("spr", "Steiner point removal");
  spr->add_option("--graph", ra.graph)->required();
  spr->add_option("--terminals", ra.terminals)->required();
  spr->add_option("--scheme", ra.scheme)->check(CLI::IsMember({"tree-scatter", "chordal", "cactus"}));
  spr->add_option("--tau", ra.tau);
  spr->add_option("--minor", ra.minor, "write the minor in graph text format");
  common(spr);
  spr->callback([&] { code = run_spr(ra, o); });

  EuclidArgs ea;
  auto* euc = app.add_subcommand("euclid", "Euclidean grid scattering");
  euc->add_option("action", ea.action)->required()->check(CLI::IsMember({"cells", "fixture", "verify"}));
  euc->add_option("--dim", ea.dim)->check(CLI::PositiveNumber);
  euc->add_option("--delta", ea.delta)->check(CLI::PositiveNumber);
  euc->add_option("--from", ea.from, "comma separated coordinates");
  euc->add_option("--to", ea.to, "comma separated coordinates");
  euc->add_option("--trials", ea.trials);
  common(euc, false);
  euc->callback([&] { code = run_euclid(ea, o); });

  ExperimentArgs xa;
  auto* exp = app.add_subcommand("experiment", "lower bound experiments");
  exp->add_option("name", xa.name)->required()->check(CLI::IsMember({"tree-lb", "tree-lb-exhaustive", "supersc-lb"}));
  exp->add_option("--d", xa.d);
  exp->add_option("--depth", xa.depth);
  exp->add_option("--k", xa.k);
  exp->add_option("--free", xa.free_dims);
  exp->add_option("--trials", xa.trials);
  exp->add_option("--scheme", xa.scheme)->check(CLI::IsMember({"tree-scatter", "tree-weak"}));
  common(exp);
  exp->callback([&] { code = run_experiment(xa, o); });

  std::string check_class, check_graph;
  auto* chk = app.add_subcommand("check", "recognize a graph class");
  chk->add_option("class", check_class)->required()->check(CLI::IsMember({"chordal", "cactus", "tree"}));
  chk->add_option("--graph", check_graph)->required();
  common(chk, false);
  chk->callback([&] { code = run_check(check_class, check_graph, o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
