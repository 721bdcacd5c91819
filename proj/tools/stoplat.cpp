// Command-line front end. Exit codes: 0 success or PASS, 1 property
// FAIL, 2 usage or input errors.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stoplat/io.hpp"
#include "stoplat/mwi.hpp"
#include "stoplat/npo.hpp"
#include "stoplat/reductions.hpp"
#include "stoplat/selftest.hpp"
#include "stoplat/stop.hpp"

namespace {

struct Context {
  bool tsv = false;
  int exit_code = 0;
};

void print_status(const Context& ctx, const std::string& label, const std::string& status, const std::string& note = {}) {
  if (ctx.tsv) {
    std::cout << label << '\t' << status;
    if (!note.empty()) std::cout << '\t' << note;
  } else {
    std::cout << label << ": " << status;
    if (!note.empty()) std::cout << " (" << note << ")";
  }
  std::cout << '\n';
}

void run_ideals(Context& ctx, const std::string& poset_path, const std::string& family_path, const std::string& out_path,
                int limit) {
  if (poset_path.empty() == family_path.empty())
    throw stoplat::ParseError("ideals: provide exactly one of --poset or --family");
  if (!poset_path.empty()) {
    const stoplat::Poset p = stoplat::load_poset(poset_path);
    if (p.size() > limit)
      throw stoplat::LimitExceeded("ideals: ground set of " + std::to_string(p.size()) + " exceeds --limit " + std::to_string(limit));
    const stoplat::IdealFamily family = stoplat::enumerate_ideals(p);
    for (stoplat::Subset member : family.members()) std::cout << stoplat::format_member(member) << '\n';
    std::cout << (ctx.tsv ? "count\t" : "count=") << family.size() << '\n';
    if (!out_path.empty()) stoplat::save_ideal_family(family, out_path);
    return;
  }
  const stoplat::IdealFamily family = stoplat::load_ideal_family(family_path);
  const stoplat::Poset recovered = stoplat::recover_order(family);
  std::cout << stoplat::poset_to_text(recovered);
  const bool ok = stoplat::verify_birkhoff(family);
  print_status(ctx, "birkhoff", ok ? "PASS" : "FAIL");
  if (!ok) ctx.exit_code = 1;
  if (!out_path.empty()) stoplat::save_poset(recovered, out_path);
}

void run_check_stop(Context& ctx, const std::string& poset_path, const std::string& stop_path,
                    const std::string& weights_path, const std::string& graph_path, bool edge, bool vertex,
                    const std::string& tau_path) {
  const stoplat::StOpMap phi = stoplat::load_stop_map(stop_path);
  if (!poset_path.empty() && !(stoplat::load_poset(poset_path) == phi.base()))
    throw stoplat::BaseMismatch("check-stop: --poset differs from the base embedded in the stop file");
  if (!weights_path.empty() && !graph_path.empty())
    throw stoplat::ParseError("check-stop: --boundary and --graph are mutually exclusive");
  if (graph_path.empty() && (edge || vertex))
    throw stoplat::ParseError("check-stop: --edge/--vertex require --graph");
  if (!graph_path.empty() && edge == vertex)
    throw stoplat::ParseError("check-stop: pick exactly one of --edge or --vertex with --graph");

  bool failed = false;
  const auto report = [&](const std::string& axiom, bool ok) {
    print_status(ctx, axiom, ok ? "PASS" : "FAIL");
    failed = failed || !ok;
  };

  report("axiom1", stoplat::check_axiom1(phi));

  if (!weights_path.empty() || !graph_path.empty()) {
    stoplat::BoundaryFunctional boundary = stoplat::BoundaryFunctional::additive_weight({});
    if (!weights_path.empty()) {
      std::vector<long long> weights = stoplat::load_weights(weights_path);
      if (static_cast<int>(weights.size()) != phi.base().size())
        throw stoplat::SizeMismatch("check-stop: weight count differs from the ground set");
      boundary = stoplat::BoundaryFunctional::additive_weight(std::move(weights));
    } else {
      stoplat::Graph graph = stoplat::load_graph(graph_path);
      if (graph.size() != phi.base().size())
        throw stoplat::SizeMismatch("check-stop: graph order differs from the ground set");
      boundary = edge ? stoplat::BoundaryFunctional::edge_boundary(std::move(graph))
                      : stoplat::BoundaryFunctional::vertex_boundary(std::move(graph));
    }
    report("axiom2", stoplat::check_axiom2(phi, boundary));
  } else {
    print_status(ctx, "axiom2", "SKIP", "no --boundary or --graph");
  }

  report("axiom3", stoplat::check_axiom3(phi));

  if (!tau_path.empty()) {
    const stoplat::TotalExtension tau = stoplat::load_total_extension(tau_path);
    report("axiom4", stoplat::check_axiom4(phi, tau));
  } else {
    print_status(ctx, "axiom4", "SKIP", "no --tau");
  }

  print_status(ctx, "overall", failed ? "FAIL" : "PASS");
  if (failed) ctx.exit_code = 1;
}

void run_stop_order(const std::string& poset_path, const std::string& stop_path, const std::string& out_path) {
  const stoplat::StOpMap phi = stoplat::load_stop_map(stop_path);
  if (!poset_path.empty() && !(stoplat::load_poset(poset_path) == phi.base()))
    throw stoplat::BaseMismatch("stop-order: --poset differs from the base embedded in the stop file");
  const stoplat::Poset q = stoplat::stop_order(phi);
  std::cout << stoplat::poset_to_text(q);
  if (!out_path.empty()) stoplat::save_poset(q, out_path);
}

void run_superreduce(const std::string& base_path, const std::string& target_path, const std::string& tau_path,
                     const std::string& out_stop, const std::string& out_order, int limit) {
  const stoplat::Poset target = stoplat::load_poset(target_path);
  if (target.size() > limit)
    throw stoplat::LimitExceeded("superreduce: ground set of " + std::to_string(target.size()) + " exceeds --limit " + std::to_string(limit));
  const stoplat::Poset base = base_path.empty() ? stoplat::Poset(target.size()) : stoplat::load_poset(base_path);
  const stoplat::TotalExtension tau =
      tau_path.empty() ? stoplat::default_linear_extension(target) : stoplat::load_total_extension(tau_path);
  const stoplat::StOpMap phi = stoplat::superreduction(base, target, tau);
  const stoplat::Poset q = stoplat::stop_order(phi);
  bool printed = false;
  if (out_stop.empty()) {
    std::cout << stoplat::stop_map_to_text(phi);
    printed = true;
  } else {
    stoplat::save_stop_map(phi, out_stop);
  }
  if (out_order.empty()) {
    if (printed) std::cout << '\n';
    std::cout << stoplat::poset_to_text(q);
  } else {
    stoplat::save_poset(q, out_order);
  }
}

void run_theorem5(Context& ctx, const std::string& target_path, int limit) {
  const stoplat::Poset target = stoplat::load_poset(target_path);
  if (target.size() > limit)
    throw stoplat::LimitExceeded("theorem5: ground set of " + std::to_string(target.size()) + " exceeds --limit " + std::to_string(limit));
  const stoplat::StOpMap phi =
      stoplat::superreduction(stoplat::Poset(target.size()), target, stoplat::default_linear_extension(target));
  const stoplat::Poset q = stoplat::stop_order(phi);
  if (q == target) {
    std::cout << "PASS\n";
    return;
  }
  std::cout << "FAIL\n" << stoplat::poset_to_text(q);
  ctx.exit_code = 1;
}

void print_mwi_row(const Context& ctx, int k, const stoplat::MwiResult& r, bool with_k) {
  if (ctx.tsv) {
    std::cout << k << '\t' << r.value << '\t' << stoplat::format_member(r.witness) << '\t' << r.searched << '\n';
    return;
  }
  if (with_k) std::cout << "k=" << k << ' ';
  std::cout << "value=" << r.value << " witness=" << stoplat::format_member(r.witness) << " searched=" << r.searched << '\n';
}

void run_mwi(Context& ctx, const std::string& poset_path, const std::string& weights_path, const std::string& target_path,
             int k, bool k_given, bool all_k, int limit) {
  if (all_k == k_given) throw stoplat::ParseError("mwi: provide exactly one of --k or --all-k");
  const stoplat::Poset p = stoplat::load_poset(poset_path);
  if (p.size() > limit)
    throw stoplat::LimitExceeded("mwi: ground set of " + std::to_string(p.size()) + " exceeds --limit " + std::to_string(limit));
  const std::vector<long long> weights = stoplat::load_weights(weights_path);
  const bool reduced = !target_path.empty();
  const stoplat::Poset target = reduced ? stoplat::load_poset(target_path) : stoplat::Poset();
  const auto solve = [&](int kk) {
    return reduced ? stoplat::mwi_reduced(p, target, weights, kk) : stoplat::mwi_bruteforce(p, weights, kk);
  };
  if (all_k) {
    for (int kk = 0; kk <= p.size(); ++kk) print_mwi_row(ctx, kk, solve(kk), true);
    return;
  }
  print_mwi_row(ctx, k, solve(k), false);
}

void run_npo(int n, bool count, bool stream, int limit) {
  if (count && stream) throw stoplat::ParseError("npo: pick one of --count or --stream");
  if (stream) {
    const int stream_limit = limit > 0 ? limit : 7;
    if (n > stream_limit)
      throw stoplat::LimitExceeded("npo: --stream limit is " + std::to_string(stream_limit));
    stoplat::NpoIterator it(n);
    bool first = true;
    while (auto p = it.next()) {
      if (!first) std::cout << '\n';
      std::cout << stoplat::poset_to_text(*p);
      first = false;
    }
    return;
  }
  std::cout << stoplat::count_npo(n, limit > 0 ? limit : 10) << '\n';
}

void run_verify_npo(Context& ctx, int n, int limit) {
  const bool jd = stoplat::check_jordan_dedekind(n, limit);
  const bool sm = stoplat::check_semimodular(n, limit);
  print_status(ctx, "jordan-dedekind", jd ? "PASS" : "FAIL");
  print_status(ctx, "semimodular", sm ? "PASS" : "FAIL");
  if (!jd || !sm) ctx.exit_code = 1;
}

void run_bps(const Context& ctx, int n_max, int live_limit) {
  const auto rows = stoplat::bps_ratio_table(n_max, live_limit);
  if (!ctx.tsv) std::printf("%3s %16s %12s %10s\n", "n", "npo", "bps", "ratio");
  for (const auto& row : rows) {
    if (ctx.tsv)
      std::printf("%d\t%" PRIu64 "\t%.5g\t%.5g\n", row.n, row.npo_count, row.bps_value, row.ratio);
    else
      std::printf("%3d %16" PRIu64 " %12.5g %10.5g\n", row.n, row.npo_count, row.bps_value, row.ratio);
  }
}

void run_selftest_cmd(Context& ctx, bool full, std::uint64_t seed) {
  stoplat::SelftestOptions options;
  options.full = full;
  options.seed = seed;
  bool failed = false;
  for (const stoplat::CriterionResult& r : stoplat::run_selftest(options)) {
    print_status(ctx, r.name, r.pass ? "PASS" : "FAIL", r.detail);
    failed = failed || !r.pass;
  }
  print_status(ctx, "overall", failed ? "FAIL" : "PASS");
  if (failed) ctx.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steiner operations on ideal lattices of finite posets"};
  app.require_subcommand(1);
  app.fallthrough(true);

  Context ctx;
  app.add_flag("--tsv", ctx.tsv, "tab-separated output");

  std::string poset_path, family_path, stop_path, base_path, target_path, tau_path, weights_path, graph_path;
  std::string out_path, out_stop, out_order;
  int n = 0, k = 0, n_max = 0;
  int ideals_limit = 20, super_limit = 16, theorem5_limit = 16, mwi_limit = 20, npo_limit = 0, verify_limit = 5,
      live_limit = 7;
  bool edge = false, vertex = false, all_k = false, count = false, stream = false, full = false;
  std::uint64_t seed = stoplat::kDefaultSelftestSeed;

  CLI::App* ideals = app.add_subcommand("ideals", "enumerate the ideals of a poset, or recover a poset from a family");
  ideals->add_option("--poset", poset_path, "poset file; prints its ideals and count");
  ideals->add_option("--family", family_path, "ideal family file; prints the recovered order");
  ideals->add_option("--out", out_path, "also write the result to this file");
  ideals->add_option("--limit", ideals_limit, "largest ground set enumerated")->capture_default_str();
  ideals->callback([&] { run_ideals(ctx, poset_path, family_path, out_path, ideals_limit); });

  CLI::App* check = app.add_subcommand("check-stop", "per-axiom report for an explicit stop map");
  check->add_option("--poset", poset_path, "expected base poset (cross-checked against the stop file)");
  check->add_option("--stop", stop_path, "stop map file")->required();
  check->add_option("--boundary", weights_path, "weights file for the additive functional (axiom 2')");
  check->add_option("--graph", graph_path, "graph file for a boundary functional (axiom 2)");
  check->add_flag("--edge", edge, "use the edge boundary of --graph");
  check->add_flag("--vertex", vertex, "use the vertex boundary of --graph");
  check->add_option("--tau", tau_path, "total extension file (axiom 4)");
  check->callback([&] { run_check_stop(ctx, poset_path, stop_path, weights_path, graph_path, edge, vertex, tau_path); });

  CLI::App* order = app.add_subcommand("stop-order", "recover the order whose ideals form the range of an idempotent stop");
  order->add_option("--poset", poset_path, "expected base poset (cross-checked against the stop file)");
  order->add_option("--stop", stop_path, "stop map file")->required();
  order->add_option("--out", out_path, "also write the recovered poset to this file");
  order->callback([&] { run_stop_order(poset_path, stop_path, out_path); });

  CLI::App* super = app.add_subcommand("superreduce", "stable cyclic reduction from a base order toward a target order");
  super->add_option("--base", base_path, "base poset file (default: discrete order on the target's elements)");
  super->add_option("--target", target_path, "target poset file")->required();
  super->add_option("--tau", tau_path, "total extension file (default: greedy linear extension of the target)");
  super->add_option("--out-stop", out_stop, "write the stop map here instead of stdout");
  super->add_option("--out-order", out_order, "write the recovered order here instead of stdout");
  super->add_option("--limit", super_limit, "largest ground set accepted")->capture_default_str();
  super->callback([&] { run_superreduce(base_path, target_path, tau_path, out_stop, out_order, super_limit); });

  CLI::App* thm5 = app.add_subcommand("theorem5", "check that the superreduction from the discrete order recovers the target");
  thm5->add_option("--target", target_path, "target poset file")->required();
  thm5->add_option("--limit", theorem5_limit, "largest ground set accepted")->capture_default_str();
  thm5->callback([&] { run_theorem5(ctx, target_path, theorem5_limit); });

  CLI::App* mwi = app.add_subcommand("mwi", "minimum-weight ideal of a fixed cardinality");
  mwi->add_option("--poset", poset_path, "poset file")->required();
  mwi->add_option("--weights", weights_path, "weights file")->required();
  CLI::Option* kopt = mwi->add_option("--k", k, "ideal cardinality");
  mwi->add_flag("--all-k", all_k, "solve every cardinality 0..n");
  mwi->add_option("--target", target_path, "extension of --poset; search its (smaller) ideal family instead");
  mwi->add_option("--limit", mwi_limit, "largest ground set accepted")->capture_default_str();
  mwi->callback([&] { run_mwi(ctx, poset_path, weights_path, target_path, k, kopt->count() > 0, all_k, mwi_limit); });

  CLI::App* npo = app.add_subcommand("npo", "enumerate suborders of the natural total order");
  npo->add_option("--n", n, "ground set size")->required();
  npo->add_flag("--count", count, "print only the count (default)");
  npo->add_flag("--stream", stream, "print every poset, blank-line separated");
  npo->add_option("--limit", npo_limit, "size guard (default 10 for --count, 7 for --stream)");
  npo->callback([&] { run_npo(n, count, stream, npo_limit); });

  CLI::App* verify = app.add_subcommand("verify-npo", "chain condition and semimodularity of the lattice of natural orders");
  verify->add_option("--n", n, "ground set size")->required();
  verify->add_option("--limit", verify_limit, "largest size accepted")->capture_default_str();
  verify->callback([&] { run_verify_npo(ctx, n, verify_limit); });

  CLI::App* bps_cmd = app.add_subcommand("bps", "asymptotic count table: n, count, estimate, ratio");
  bps_cmd->add_option("--n-max", n_max, "last row of the table")->required();
  bps_cmd->add_option("--live-limit", live_limit, "largest n counted by enumeration; beyond it the known sequence is used")
      ->capture_default_str();
  bps_cmd->callback([&] { run_bps(ctx, n_max, live_limit); });

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance criteria and report per-criterion PASS/FAIL");
  selftest->add_flag("--full", full, "full suite (default: quick property suites at n <= 4)");
  selftest->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
  selftest->callback([&] { run_selftest_cmd(ctx, full, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const stoplat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return ctx.exit_code;
}
