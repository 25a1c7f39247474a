#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crossfam/bench.hpp"
#include "crossfam/crossing.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/generate.hpp"
#include "crossfam/io.hpp"
#include "crossfam/oracle.hpp"
#include "crossfam/svg.hpp"
#include "crossfam/zones.hpp"

using namespace crossfam;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

class Mismatch : public Error {
 public:
  using Error::Error;
};

class Usage : public Error {
 public:
  using Error::Error;
};

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw Usage(e.what());
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CROSSFAM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("CROSSFAM_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") std::cout << content;
  else write_file(path, content);
}

struct RunOptions {
  std::string input, output, svg, mode = "crossing", m, eps = "1/4", delta = "1/4";
  bool theory = false, practical = false;
  std::size_t t = 3, k = 2;
  unsigned max_retries = 8, s = 2;
  double net_constant = kDefaultNetConstant;
  std::uint64_t seed = 0;
};

RunConfig make_config(const RunOptions& o) {
  RunConfig cfg;
  cfg.run = o.theory ? RunMode::Theory : RunMode::Practical;
  cfg.family = parse_family_mode(o.mode);
  try {
    if (!o.m.empty()) {
      std::size_t used = 0;
      cfg.m = std::stoull(o.m, &used);
      if (used != o.m.size() || o.m[0] == '-') throw Error("");
    }
  } catch (const std::exception&) {
    throw Usage("--m must be a positive integer, got '" + o.m + "'");
  }
  try {
    cfg.eps = Rational::parse(o.eps);
    cfg.delta = Rational::parse(o.delta);
  } catch (const Error& e) {
    throw Usage(std::string("bad rational parameter: ") + e.what());
  }
  cfg.t = o.t;
  cfg.k = o.k;
  cfg.seed = o.seed;
  cfg.max_retries = o.max_retries;
  cfg.net_constant = o.net_constant;
  cfg.theory_s = o.s;
  return cfg;
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg, std::size_t n) {
  std::vector<std::pair<std::string, std::string>> p;
  p.emplace_back("m", std::to_string(cfg.m.value_or(default_cluster_size(n))));
  p.emplace_back("eps", cfg.eps.to_string());
  p.emplace_back("delta", cfg.delta.to_string());
  p.emplace_back("t", std::to_string(cfg.t));
  p.emplace_back("k", std::to_string(cfg.k));
  p.emplace_back("max-retries", std::to_string(cfg.max_retries));
  std::ostringstream c;
  c << cfg.net_constant;
  p.emplace_back("net-constant", c.str());
  if (cfg.run == RunMode::Theory) p.emplace_back("s", std::to_string(cfg.theory_s));
  return p;
}

int cmd_run(const RunOptions& o) {
  RunConfig cfg = make_config(o);
  GraphFile file = parse_graph(load(o.input));
  GeometricGraph g = file.graph();
  const auto start = std::chrono::steady_clock::now();
  SegmentFamily f = find_family(g, cfg);
  const auto stop = std::chrono::steady_clock::now();
  if (!certify(f, g)) {
    std::cerr << "internal error: family failed verification\n";
    return kInternal;
  }
  ResultFile r;
  r.mode = f.mode;
  r.run = to_string(cfg.run);
  r.segments = f.segments;
  r.verified = f.verified;
  r.params = describe(cfg, g.vertex_count());
  r.seed = cfg.seed;
  r.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  emit(o.output, render_result(r));
  if (!o.svg.empty()) write_file(o.svg, render_svg(g, f));
  return kOk;
}

int cmd_verify(const std::string& result_path, const std::string& graph_path) {
  ResultFile r = parse_result(load(result_path));
  GraphFile file = parse_graph(load(graph_path));
  GeometricGraph g = file.graph();
  for (const Segment& s : r.segments) {
    if (s.a >= g.vertex_count() || s.b >= g.vertex_count()) {
      throw Mismatch("result references vertex " + std::to_string(std::max(s.a, s.b)) + " but the graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
    }
  }
  SegmentFamily f;
  f.mode = r.mode;
  f.segments = r.segments;
  if (auto w = verify_family(f, g)) {
    const Segment& s = f.segments[w->first];
    const Segment& t = f.segments[w->second];
    std::cout << "FAIL " << to_string(w->kind) << " segment " << w->first << " (" << s.a << ' ' << s.b << ")";
    if (w->second != w->first) std::cout << " and segment " << w->second << " (" << t.a << ' ' << t.b << ")";
    std::cout << '\n';
    return kVerifyFailed;
  }
  std::cout << "OK " << r.segments.size() << ' ' << to_string(r.mode) << " segments\n";
  return kOk;
}

int cmd_oracle(const std::string& input, const std::string& mode, std::size_t limit, const std::string& output) {
  GraphFile file = parse_graph(load(input));
  GeometricGraph g = file.graph();
  const auto start = std::chrono::steady_clock::now();
  SegmentFamily f = max_family_bruteforce(g, parse_family_mode(mode), limit);
  const auto stop = std::chrono::steady_clock::now();
  ResultFile r;
  r.mode = f.mode;
  r.run = "oracle";
  r.segments = f.segments;
  r.verified = f.verified;
  r.params.emplace_back("oracle-limit", std::to_string(limit));
  r.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  emit(output, render_result(r));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large pairwise crossing or avoiding edge families in geometric graphs"};
  app.require_subcommand(1);

  std::uint64_t env_seed = 0;
  try {
    env_seed = default_seed();
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }

  std::string gen_kind = "random-disk", gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = env_seed;
  std::int64_t gen_range = kDefaultRange;
  bool gen_complete = false;
  auto* gen = app.add_subcommand("generate", "Write a point set (or complete graph) file");
  gen->add_option("--kind", gen_kind, "random-disk, convex or grid-jitter")
      ->check(CLI::IsMember({"random-disk", "convex", "grid-jitter"}));
  gen->add_option("-n,--n", gen_n, "Number of points")->required();
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--range", gen_range, "Coordinates lie in [-range, range]");
  gen->add_flag("--complete", gen_complete, "Append 'edges complete' to produce a graph file");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  RunOptions ro;
  ro.seed = env_seed;
  auto* run = app.add_subcommand("run", "Find a family and write a result file");
  run->add_option("input", ro.input, "Graph file")->required();
  run->add_option("--mode", ro.mode, "crossing or avoiding")->check(CLI::IsMember({"crossing", "avoiding"}));
  auto* th = run->add_flag("--theory", ro.theory, "Exact parameter schedule");
  auto* pr = run->add_flag("--practical", ro.practical, "Adaptive parameters (default)");
  th->excludes(pr);
  run->add_option("--m", ro.m, "Starting cluster size");
  run->add_option("--eps", ro.eps, "Avoidance parameter");
  run->add_option("--delta", ro.delta, "Density parameter");
  run->add_option("--t", ro.t, "Split parameter t");
  run->add_option("--k", ro.k, "Split parameter k");
  run->add_option("--s", ro.s, "Recursion depth of the theory schedule");
  run->add_option("--seed", ro.seed, "Seed");
  run->add_option("--max-retries", ro.max_retries, "Adaptive retries per level");
  run->add_option("--net-constant", ro.net_constant, "Net size constant");
  run->add_option("--svg", ro.svg, "Also draw the result");
  run->add_option("-o,--output", ro.output, "Output path (default stdout)");

  std::string ver_result, ver_graph;
  auto* ver = app.add_subcommand("verify", "Check a result file against a graph file");
  ver->add_option("result", ver_result, "Result file")->required();
  ver->add_option("input", ver_graph, "Graph file")->required();

  std::string or_input, or_mode = "crossing", or_out;
  std::size_t or_limit = kOracleLimit;
  auto* orc = app.add_subcommand("oracle", "Exact maximum family by exhaustive search");
  orc->add_option("input", or_input, "Graph file")->required();
  orc->add_option("--mode", or_mode, "crossing or avoiding")->check(CLI::IsMember({"crossing", "avoiding"}));
  orc->add_option("--oracle-limit", or_limit, "Maximum number of edges");
  orc->add_option("-o,--output", or_out, "Output path (default stdout)");

  std::vector<std::size_t> bench_sizes{64, 128, 256};
  std::size_t bench_trials = 5;
  std::uint64_t bench_seed = env_seed;
  std::string bench_mode = "crossing";
  auto* bench = app.add_subcommand("bench", "Time the practical pipeline on complete graphs");
  bench->add_option("--sizes", bench_sizes, "Point counts")->delimiter(',');
  bench->add_option("--trials", bench_trials, "Trials per size");
  bench->add_option("--seed", bench_seed, "Seed");
  bench->add_option("--mode", bench_mode, "crossing or avoiding")->check(CLI::IsMember({"crossing", "avoiding"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      std::string text = render_points(generate_points(parse_point_kind(gen_kind), gen_n, gen_seed, gen_range));
      if (gen_complete) text += "edges complete\n";
      emit(gen_out, text);
      return kOk;
    }
    if (*run) return cmd_run(ro);
    if (*ver) return cmd_verify(ver_result, ver_graph);
    if (*orc) return cmd_oracle(or_input, or_mode, or_limit, or_out);
    if (*bench) {
      for (std::size_t n : bench_sizes) {
        if (n < 2) throw PreconditionViolated("bench sizes must be at least 2");
      }
      RunConfig cfg;
      cfg.family = parse_family_mode(bench_mode);
      std::cout << render_csv(run_bench(bench_sizes, bench_trials, bench_seed, cfg));
      return kOk;
    }
  } catch (const VerificationExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return kUsage;
  } catch (const TooLarge& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kUsage;
  } catch (const EmptyGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeTooSmall& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
