#include "disclosure/app/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "disclosure/app/suite.hpp"
#include "disclosure/app/svg.hpp"
#include "disclosure/dpconnected.hpp"
#include "disclosure/errors.hpp"
#include "disclosure/game.hpp"
#include "disclosure/hardness.hpp"
#include "disclosure/io.hpp"
#include "disclosure/lpmech.hpp"
#include "disclosure/uniform2.hpp"

namespace disclosure::app {

namespace {

std::string exact(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", r.to_double());
  return r.str() + " (~" + buf + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw ValidationError("cannot write " + path);
  out << "wrote " << path << "\n";
}

// Inline JSON when it starts with '[' or '{', a file path otherwise.
std::string document(const std::string& arg) {
  const auto pos = arg.find_first_not_of(" \t\n");
  if (pos != std::string::npos && (arg[pos] == '[' || arg[pos] == '{')) return arg;
  return read_file(arg);
}

std::vector<unsigned long> parse_sizes(const std::string& text) {
  std::vector<unsigned long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad size '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

std::string one_based(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(idx[i] + 1);
  }
  return s + "}";
}

std::string flag(bool b) { return b ? "yes" : "no"; }

void print_pair(std::ostream& out, const Rational& ua, const Rational& ub) {
  out << "uA    = " << exact(ua) << "\n";
  out << "uB    = " << exact(ub) << "\n";
  out << "total = " << exact(ua + ub) << "\n";
}

void print_outcome(std::ostream& out, const DiscreteInstance& inst, const game::GameOutcome& g) {
  out << "revenue        = " << exact(g.expected_revenue) << "\n";
  for (std::size_t j = 0; j < g.buyer_utility.size(); ++j) {
    out << "utility buyer " << j + 1 << " = " << exact(g.buyer_utility[j]) << "\n";
  }
  out << "total surplus  = " << exact(g.total_surplus) << "\n";
  out << "always sold    = " << flag(g.always_all_sold) << "\n";
  out << "efficient      = " << flag(g.efficient) << "\n";
  for (std::size_t k = 0; k < inst.goods_count(); ++k) {
    out << "unsold good " << k + 1 << "  = " << exact(g.unsold_probability[k]) << "\n";
  }
}

int cmd_eval_uniform(std::ostream& out, const std::string& a, const std::string& b, bool per_case,
                     const std::string& path) {
  const auto rep = uniform2::profile_surplus(IntervalPartition::parse(a), IntervalPartition::parse(b));
  out << "A: " << IntervalPartition::parse(a).str() << "\nB: " << IntervalPartition::parse(b).str()
      << "\n";
  print_pair(out, rep.uA, rep.uB);
  if (per_case) {
    out << "\nmessage pair contributions\n";
    for (const auto& r : rep.rows) {
      out << (r.a_full ? std::string("A full") : "A [" + r.segA.a.str() + "," + r.segA.b.str() + "]")
          << "  "
          << (r.b_full ? std::string("B full") : "B [" + r.segB.a.str() + "," + r.segB.b.str() + "]")
          << "  prob " << r.prob.str() << "  uA " << r.uA.str() << "  uB " << r.uB.str()
          << "  sum " << (r.uA + r.uB).str() << "\n";
    }
  }
  if (!path.empty()) write_file(path, rep.csv(), out);
  return kSuccess;
}

int cmd_zeno(std::ostream& out, unsigned depth, const std::string& b, const std::string& path) {
  const auto z = uniform2::zeno_partition(depth);
  const auto pb = b.empty() ? z : IntervalPartition::parse(b);
  const auto rep = uniform2::profile_surplus(z, pb);
  out << "A: " << z.str() << "\nB: " << pb.str() << "\n";
  print_pair(out, rep.uA, rep.uB);
  if (!path.empty()) write_file(path, rep.csv(), out);
  return kSuccess;
}

int cmd_threshold(std::ostream& out, const std::string& t_text) {
  const Rational t = Rational::parse(t_text);
  const auto got = uniform2::threshold_surplus(t);
  const auto want = uniform2::threshold_closed_form(t);
  out << "threshold t = " << t.str() << "\n";
  const auto row = [&](const char* name, const Rational& g, const Rational& w) {
    out << name << exact(g) << "  closed form " << w.str() << (g == w ? "" : "  MISMATCH") << "\n";
  };
  row("low/low   ", got.low_low, want.low_low);
  row("low/high  ", got.low_high, want.low_high);
  row("high/low  ", got.high_low, want.high_low);
  row("high/high ", got.high_high, want.high_high);
  row("per buyer ", got.per_buyer, want.per_buyer);
  row("total     ", got.total, want.total);
  const bool ok = got.low_low == want.low_low && got.low_high == want.low_high &&
                  got.high_low == want.high_low && got.high_high == want.high_high &&
                  got.total == want.total;
  if (!ok) throw AssertionFailure("threshold surplus disagrees with the closed form");
  return kSuccess;
}

int cmd_lp_solve(std::ostream& out, const std::string& path, const std::string& csv) {
  const auto inst = parse_instance(read_file(path));
  const auto sol = solve_mechanism(inst);
  const auto rep = verify_mechanism(inst, sol.mechanism);
  out << "revenue      = " << exact(sol.revenue) << "\n";
  out << "buyer surplus = " << exact(sol.buyer_surplus) << "\n";
  out << "pivots       = " << sol.pivots << "\n";
  out << "feasible     = " << flag(rep.valid) << "\n\n";
  out << posted_menu_view(inst, sol);
  if (!csv.empty()) write_file(csv, mechanism_csv(inst, sol.mechanism), out);
  if (!rep.valid) throw AssertionFailure("solver output violates " + rep.violation);
  return kSuccess;
}

int cmd_game_eval(std::ostream& out, const std::string& path, const std::string& profile_arg,
                  const std::string& csv) {
  const auto inst = parse_instance(read_file(path));
  const auto profile =
      profile_arg.empty() ? game::no_disclosure_profile(inst) : parse_profile(document(profile_arg), inst);
  const auto g = game::evaluate_profile(inst, profile);
  out << "profile " << profile_label(profile) << "\n";
  print_outcome(out, inst, g);
  out << "\nmessages\n";
  for (const auto& m : g.per_message) {
    std::string label;
    for (std::size_t j = 0; j < m.blocks.size(); ++j) {
      if (j > 0) label += " x ";
      std::vector<std::size_t> block;
      for (auto t : profile[j][m.blocks[j]]) block.push_back(t);
      label += one_based(block);
    }
    out << label << "  prob " << m.probability.str() << "  revenue " << m.solution->revenue.str()
        << "  surplus " << m.solution->buyer_surplus.str() << "\n";
  }
  if (!csv.empty()) write_file(csv, mechanism_csv(inst, g.mechanism), out);
  return kSuccess;
}

int cmd_search(std::ostream& out, const std::string& path, bool connected, std::uint64_t max_profiles,
               std::size_t top, const std::string& csv) {
  const auto inst = parse_instance(read_file(path));
  const auto ranked = game::search_profiles(inst, {connected, max_profiles});
  out << ranked.size() << " profiles" << (connected ? " (connected)" : "") << "\n";
  for (std::size_t i = 0; i < ranked.size() && i < top; ++i) {
    const auto& r = ranked[i];
    out << i + 1 << ". " << profile_label(r.profile) << "  total " << r.outcome.total_surplus.str()
        << "  revenue " << r.outcome.expected_revenue.str()
        << "  sold " << flag(r.outcome.always_all_sold) << "  efficient " << flag(r.outcome.efficient)
        << "\n";
  }
  if (!csv.empty()) write_file(csv, game::ranking_csv(inst, ranked), out);
  return kSuccess;
}

int cmd_dp(std::ostream& out, const std::string& path, bool brute) {
  const auto inst = parse_instance(read_file(path));
  const auto single = dp::SingleBuyerInstance::from(inst);
  const auto order = inst.value_order(0);
  const auto opt = dp::optimal_connected(single);
  const auto original = [&](const SetPartition& p) {
    SetPartition q;
    for (const auto& b : p) {
      Block ob;
      for (auto i : b) ob.push_back(order[i]);
      q.push_back(std::move(ob));
    }
    return partition_label(canonicalize(q));
  };
  out << "connected optimum " << original(opt.partition) << "\n";
  out << "utility = " << exact(opt.utility) << "\n";
  for (const auto& b : opt.partition) {
    out << "  block price " << dp::buyer_utility(single, b).price.str() << "\n";
  }
  if (brute) {
    const auto bf = dp::brute_force_connected(single);
    out << "brute force " << original(bf.partition) << " utility " << exact(bf.utility) << "\n";
    if (bf.utility != opt.utility) throw AssertionFailure("dynamic program disagrees with brute force");
  }
  return kSuccess;
}

int cmd_reduce(std::ostream& out, const std::string& sizes) {
  const auto red = hardness::reduce(hardness::PartitionProblem(parse_sizes(sizes)));
  out << serialize_instance(red.reduced.instance.to_discrete());
  out << "target = " << exact(red.reduced.target) << "\n";
  return kSuccess;
}

int cmd_verify_reduction(std::ostream& out, const std::string& sizes) {
  const hardness::PartitionProblem pp(parse_sizes(sizes));
  const auto rep = hardness::verify_reduction(pp);
  out << "partition solvable = " << flag(rep.solvable);
  if (rep.subset) out << "  subset " << one_based(*rep.subset);
  out << "\ntarget U     = " << exact(rep.target) << "\n";
  out << "best surplus = " << exact(rep.best_surplus) << "  " << partition_label(rep.best_partition)
      << "\n";
  if (rep.witness) {
    out << "witness      = " << partition_label(*rep.witness) << "  surplus " << exact(rep.witness_surplus)
        << "\n";
    out << "pooled price = " << exact(rep.pooled_price) << "\n";
  }
  out << "equivalence  = " << flag(rep.equivalence_holds) << "\n";
  if (!rep.equivalence_holds) throw AssertionFailure("reduction equivalence fails");
  return kSuccess;
}

int cmd_efficiency_witness(std::ostream& out, const std::string& a, const std::string& b) {
  const auto w = uniform2::efficiency_witness(IntervalPartition::parse(a), IntervalPartition::parse(b));
  out << "vA = " << exact(w.vA) << "\nvB = " << exact(w.vB) << "\n";
  out << "winner  " << uniform2::to_string(w.outcome.winner) << "  payment " << w.outcome.payment.str()
      << "\n";
  out << "kind    " << uniform2::to_string(w.kind) << "\n";
  out << "case    " << w.case_index << "  epsilon " << w.epsilon.str() << "\n";
  if (w.fully_disclosing) out << "buyer A discloses fully; roles swapped\n";
  return kSuccess;
}

int cmd_plot(std::ostream& out, const std::string& a, const std::string& b, const std::string& path) {
  write_file(path, allocation_svg(IntervalPartition::parse(a), IntervalPartition::parse(b)), out);
  return kSuccess;
}

int cmd_suite(std::ostream& out, bool show_numbers, bool quick) {
  const auto results = run_suite({quick, show_numbers}, out);
  const int first = first_failure(results);
  if (first != 0) {
    for (const auto& r : results) {
      if (r.id == first) throw AssertionFailure("item " + std::to_string(first) + " failed: " + r.failure);
    }
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voluntary disclosure in auctions: exact evaluation tools"};
  app.require_subcommand(1);
  int code = kSuccess;
  std::function<int()> action;

  std::string a, b, out_path, instance, profile, sizes, t;
  bool per_case = false, connected = false, brute = false, show_numbers = false, quick = false;
  unsigned depth = 12;
  std::uint64_t max_profiles = 1'000'000;
  std::size_t top = 10;

  auto* eu = app.add_subcommand("eval-uniform", "buyer surplus of an interval partition profile");
  eu->add_option("--a", a, "buyer A breakpoints, e.g. 0,1/2,1 or full")->required();
  eu->add_option("--b", b, "buyer B breakpoints")->required();
  eu->add_flag("--per-case", per_case, "print each message pair");
  eu->add_option("--out", out_path, "CSV path for the per-pair table");
  eu->callback([&] { action = [&] { return cmd_eval_uniform(out, a, b, per_case, out_path); }; });

  auto* ze = app.add_subcommand("zeno", "truncated Zeno partition for buyer A");
  ze->add_option("--depth", depth, "number of halvings")->check(CLI::PositiveNumber);
  ze->add_option("--b", b, "buyer B breakpoints (default: the same Zeno partition)");
  ze->add_option("--out", out_path, "CSV path");
  ze->callback([&] { action = [&] { return cmd_zeno(out, depth, b, out_path); }; });

  auto* th = app.add_subcommand("threshold", "symmetric threshold family");
  th->add_option("--t", t, "threshold in [0,1/2]")->required();
  th->callback([&] { action = [&] { return cmd_threshold(out, t); }; });

  auto* lp = app.add_subcommand("lp-solve", "revenue-optimal mechanism of a discrete instance");
  lp->add_option("--instance", instance, "instance JSON")->required();
  lp->add_option("--out", out_path, "mechanism CSV path");
  lp->callback([&] { action = [&] { return cmd_lp_solve(out, instance, out_path); }; });

  auto* ge = app.add_subcommand("game-eval", "outcome of a partition profile");
  ge->add_option("--instance", instance, "instance JSON")->required();
  ge->add_option("--profile", profile, "partition JSON or path (default: no disclosure)");
  ge->add_option("--out", out_path, "mechanism CSV path");
  ge->callback([&] { action = [&] { return cmd_game_eval(out, instance, profile, out_path); }; });

  auto* se = app.add_subcommand("search", "rank every partition profile by buyer surplus");
  se->add_option("--instance", instance, "instance JSON")->required();
  se->add_flag("--connected", connected, "value-contiguous blocks only");
  se->add_option("--max-profiles", max_profiles, "enumeration guard");
  se->add_option("--top", top, "rows to print");
  se->add_option("--out", out_path, "ranking CSV path");
  se->callback([&] { action = [&] { return cmd_search(out, instance, connected, max_profiles, top, out_path); }; });

  auto* dpc = app.add_subcommand("dp", "optimal connected partition for one buyer");
  dpc->add_option("--instance", instance, "single-buyer instance JSON")->required();
  dpc->add_flag("--brute-force", brute, "compare with exhaustive search");
  dpc->callback([&] { action = [&] { return cmd_dp(out, instance, brute); }; });

  auto* re = app.add_subcommand("reduce", "BUYER-OPT instance of a PARTITION instance");
  re->add_option("--sizes", sizes, "comma-separated positive integers")->required();
  re->callback([&] { action = [&] { return cmd_reduce(out, sizes); }; });

  auto* vr = app.add_subcommand("verify-reduction", "check the reduction by exhaustive search");
  vr->add_option("--sizes", sizes, "comma-separated positive integers")->required();
  vr->callback([&] { action = [&] { return cmd_verify_reduction(out, sizes); }; });

  auto* ew = app.add_subcommand("efficiency-witness", "values at which the auction is inefficient");
  ew->add_option("--a", a, "buyer A breakpoints")->required();
  ew->add_option("--b", b, "buyer B breakpoints")->required();
  ew->callback([&] { action = [&] { return cmd_efficiency_witness(out, a, b); }; });

  auto* pl = app.add_subcommand("plot", "SVG of the allocation regions");
  pl->add_option("--a", a, "buyer A breakpoints")->required();
  pl->add_option("--b", b, "buyer B breakpoints")->required();
  pl->add_option("--out", out_path, "SVG path")->required();
  pl->callback([&] { action = [&] { return cmd_plot(out, a, b, out_path); }; });

  auto* su = app.add_subcommand("suite", "acceptance battery");
  su->add_flag("--paper-numbers", show_numbers, "print the exact values behind each item");
  su->add_flag("--quick", quick, "skip the slowest items");
  su->callback([&] { action = [&] { return cmd_suite(out, show_numbers, quick); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kValidationError;
  }

  try {
    code = action();
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    code = kValidationError;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    code = kGuardExceeded;
  } catch (const std::exception& e) {
    err << "assertion failed: " << e.what() << "\n";
    code = kAssertionFailure;
  }
  out.flush();
  return code;
}

}  // namespace disclosure::app
