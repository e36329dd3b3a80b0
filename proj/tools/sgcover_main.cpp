#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "sgc/engine.hpp"
#include "sgc/gen.hpp"
#include "sgc/io.hpp"
#include "sgc/switching.hpp"

namespace {

using namespace sgc;

EngineLimits limits_from_env() {
  EngineLimits lim;
  if (const char* v = std::getenv("SGC_EXACT_VERTEX_LIMIT")) {
    lim.structure.switching.exact_vertex_limit = std::atoi(v);
    lim.structure.switching.cut_enum_vertex_limit = std::atoi(v);
  }
  if (const char* v = std::getenv("SGC_ORACLE_EDGE_LIMIT"))
    lim.oracle_edge_limit = std::atoi(v);
  if (const char* v = std::getenv("SGC_UNSIGNED_EDGE_LIMIT"))
    lim.unsigned_cover.exact_edge_limit = std::atoi(v);
  if (const char* v = std::getenv("SGC_SBRIDGELESS_EDGE_LIMIT"))
    lim.structure.s_bridgeless_edge_limit = std::atoi(v);
  return lim;
}

void print_ids(const std::string& label, const std::vector<int>& ids) {
  std::cout << label << ":";
  for (int id : ids) std::cout << " e" << id;
  if (ids.empty()) std::cout << " (none)";
  std::cout << "\n";
}

void print_bounds(const BoundReport& b, const char* prefix = "") {
  std::cout << prefix << "E=" << b.E << " V=" << b.V << " eps_n=" << b.eps_n
            << " k=" << b.k << "\n";
  std::cout << prefix << "z1=" << b.z1 << " bound_general=" << b.bound_general
            << "\n";
  std::cout << prefix << "z2=" << b.z2 << " bound_even=" << b.bound_even
            << "\n";
  std::cout << prefix << "corollary_bound=" << b.corollary_bound
            << " chained_bound=" << b.chained_bound << "\n";
}

int cmd_analyze(const std::string& file, const EngineLimits& lim) {
  auto g = load_instance(file);
  auto cert = negativeness_exact(g, lim.structure.switching);
  std::cout << "n=" << g.n << " m=" << g.edge_count()
            << " negatives=" << negative_edges(g).size()
            << " eps_n=" << cert.epsilon_n << "\n";
  std::cout << "minimal_signature="
            << (verify_minimal_signature(g, lim.structure.switching) ? "yes"
                                                                     : "no")
            << "\n";
  auto cat = classify_bridges(g);
  print_ids("bridges", cat.bridges);
  print_ids("s_bridges", cat.s_bridges);
  print_ids("g_class_bridges", cat.g_class_bridges);
  for (auto& [e, s] : cat.partner_sets) print_ids("S(e" + std::to_string(e) + ")", s);
  auto rep = is_s_bridgeless(g, lim.structure);
  std::cout << "s_bridgeless=" << (rep.ok ? "yes" : "no");
  if (!rep.ok) std::cout << " (edge e" << rep.uncovered_edge << ")";
  std::cout << "\n";
  std::cout << "g_bridgeless="
            << (is_g_bridgeless(g, lim.structure.switching) ? "yes" : "no")
            << "\n";
  return 0;
}

int cmd_cover(const std::string& file, bool oracle, const EngineLimits& lim) {
  auto g = load_instance(file);
  if (oracle) {
    auto res = exact_scc_signed(g, lim);
    if (!res.has_cover) {
      std::cout << "no cover\n";
      return 0;
    }
    std::cout << emit_cover(res.cover);
    std::cout << "# length=" << res.length << "\n";
    return 0;
  }
  auto res = scc_upper_cover(g, lim);
  std::cout << emit_cover(res.cover);
  // diagnostics as comments so the output feeds straight into `verify`
  std::cout << "# length=" << res.length
            << " stripped_length=" << res.stripped_length
            << " positive_loops=" << res.positive_loops << " k=" << res.k
            << "\n";
  print_bounds(res.bounds, "# ");
  return 0;
}

int cmd_verify(const std::string& file, const std::string& cover_file,
               const std::vector<int>& k_set) {
  auto g = load_instance(file);
  auto f = load_cover(g, cover_file);
  auto rep = verify_cover(g, f, k_set);
  if (!rep.valid) {
    std::cout << "invalid: " << rep.reason << "\n";
    return 1;
  }
  std::cout << "valid length=" << rep.stats.length << "\n";
  std::cout << "multiplicities:";
  for (int e = 0; e < g.edge_count(); ++e)
    std::cout << " e" << e << "=" << rep.stats.multiplicity[e];
  std::cout << "\n";
  return 0;
}

int cmd_bound(const std::string& file, const EngineLimits& lim) {
  auto g = load_instance(file);
  auto cert = negativeness_exact(g, lim.structure.switching);
  int k = (cert.epsilon_n % 2 == 0 && cert.epsilon_n >= 2 &&
           is_g_bridgeless(g, lim.structure.switching))
              ? 2
              : 3;
  int ploops = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e) && g.edge(e).sign > 0) ++ploops;
  print_bounds(theorem_bounds(g.edge_count() - ploops, g.n, cert.epsilon_n, k));
  return 0;
}

int cmd_gen(const GenOptions& opt, const std::string& out) {
  auto g = generate(opt);
  std::string text = emit_instance(g);
  if (out.empty())
    std::cout << text;
  else
    save_text(out, text);
  return 0;
}

int cmd_bench(const GenOptions& base, int count, const EngineLimits& lim) {
  int violations = 0;
  for (int i = 0; i < count; ++i) {
    GenOptions opt = base;
    opt.seed = base.seed + static_cast<uint64_t>(i);
    SignedMultigraph g;
    try {
      g = generate(opt);
    } catch (const Error& err) {
      std::cout << "instance " << i << " skip: " << err.what() << "\n";
      continue;
    }
    try {
      auto res = scc_upper_cover(g, lim);
      Rational bound = res.bounds.bound_general;
      Rational slack = bound - res.stripped_length;
      std::cout << "instance " << i << " ok length=" << res.stripped_length
                << " bound=" << bound << " slack=" << slack << "\n";
      if (slack < Rational(0)) ++violations;
    } catch (const Error& err) {
      std::cout << "instance " << i << " violation: " << err.what() << "\n";
      ++violations;
    }
  }
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "shortest signed-circuit cover toolkit: construct, verify, and bound "
      "covers of signed graphs"};
  app.require_subcommand(1);
  EngineLimits lim = limits_from_env();

  std::string file, cover_file, out_file;
  bool oracle = false;
  std::vector<int> k_set;
  GenOptions gopt;
  int count = 20;

  auto* analyze = app.add_subcommand("analyze", "signature and cut structure");
  analyze->add_option("file", file)->required();

  auto* cover = app.add_subcommand("cover", "construct a verified cover");
  cover->add_option("file", file)->required();
  cover->add_flag("--oracle", oracle, "exact minimum-length search");

  auto* verify = app.add_subcommand("verify", "check a cover file");
  verify->add_option("file", file)->required();
  verify->add_option("--cover", cover_file)->required();
  verify->add_option("--k", k_set, "allowed multiplicities");

  auto* bound = app.add_subcommand("bound", "bound report only");
  bound->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gopt.n);
  gen->add_option("--m", gopt.m);
  gen->add_option("--neg", gopt.negatives);
  gen->add_option("--seed", gopt.seed);
  gen->add_flag("--s-bridgeless", gopt.want_s_bridgeless);
  gen->add_flag("--g-bridgeless-even", gopt.want_g_bridgeless_even);
  gen->add_option("-o,--out", out_file);

  auto* bench = app.add_subcommand("bench", "generated corpus bound check");
  bench->add_option("--count", count);
  bench->add_option("--n", gopt.n);
  bench->add_option("--m", gopt.m);
  bench->add_option("--neg", gopt.negatives);
  bench->add_option("--seed", gopt.seed);
  bench->add_flag("--g-bridgeless-even", gopt.want_g_bridgeless_even);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(file, lim);
    if (cover->parsed()) return cmd_cover(file, oracle, lim);
    if (verify->parsed()) return cmd_verify(file, cover_file, k_set);
    if (bound->parsed()) return cmd_bound(file, lim);
    if (gen->parsed()) return cmd_gen(gopt, out_file);
    if (bench->parsed()) {
      gopt.want_s_bridgeless = true;
      gopt.limits = lim.structure;
      return cmd_bench(gopt, count, lim);
    }
  } catch (const sgc::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    switch (err.kind()) {
      case sgc::ErrorKind::Input:
        return 2;
      case sgc::ErrorKind::Limit:
        return 3;
      case sgc::ErrorKind::Defect:
        return 1;
    }
  }
  return 0;
}
