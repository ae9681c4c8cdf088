#include "hqft/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hqft/census.hpp"
#include "hqft/io.hpp"

namespace hqft {

namespace {

struct Options {
  std::string algebra_file;
  std::string word_file;
  std::string surface_file;
  std::string tier = "extended";
  bool json = false;
  bool trace_diagnostic = false;
  int table = -1;
  bool force = false;
  std::string ring;
  int pi = 0;
  std::string ranks;
  std::string out_dir;
  std::uint64_t bound = CensusQuery{}.bound;
  std::string t = "1";
  std::string a = "1";
};

std::vector<std::size_t> parse_ranks(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw InputError("bad rank list '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  if (out.empty()) throw InputError("empty rank list");
  return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  const AlgebraData A = parse_algebra(read_text_file(o.algebra_file));
  const AxiomReport report = verify(A, parse_tier(o.tier));
  out << (o.json ? report_to_json(report) : report.to_text());
  if (o.trace_diagnostic) {
    const auto diffs = trace_reading_discrepancies(A);
    out << "trace orders: " << (diffs.empty() ? "agree" : "differ") << '\n';
    for (const auto& d : diffs) out << "  " << d << '\n';
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream&) {
  const AlgebraData A = parse_algebra(read_text_file(o.algebra_file));
  const CobordismWord w = parse_word(read_text_file(o.word_file), A.pi_rank);
  out << evaluate(A, w).to_text();
  return kExitOk;
}

int cmd_invariant(const Options& o, std::ostream& out, std::ostream& err) {
  const AlgebraData A = parse_algebra(read_text_file(o.algebra_file));
  if (o.table < 0) {
    if (o.surface_file.empty()) throw InputError("give a surface file or --table N");
    const SurfaceSpec s = parse_surface(read_text_file(o.surface_file), A.pi_rank);
    const Scalar value = surface_invariant(A, s);
    const Scalar alt = surface_invariant_alt(A, s);
    out << value << '\n';
    if (value != alt) {
      err << "cross-check failed: alternate word gives " << alt << '\n';
      return kExitFailed;
    }
    return kExitOk;
  }
  if (!o.force && (o.table > 4 || A.order() > 4)) {
    err << "table limited to N <= 4 and |pi| <= 4; pass --force to override\n";
    return kExitRefused;
  }
  int failures = 0;
  for (const auto& e : surface_table(A, o.table)) {
    out << e.surface.to_string() << " -> " << e.value;
    if (!e.consistent) {
      out << "  MISMATCH " << e.detail;
      ++failures;
    }
    out << '\n';
  }
  out << (failures ? std::to_string(failures) + " cross-check failures" : "all cross-checks agree")
      << '\n';
  return failures ? kExitFailed : kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream&) {
  CensusQuery q;
  q.ring = RingDesc::parse(o.ring);
  q.pi_rank = o.pi;
  q.ranks = parse_ranks(o.ranks);
  q.tier = parse_tier(o.tier);
  q.bound = o.bound;
  namespace fs = std::filesystem;
  if (!o.out_dir.empty() && fs::exists(o.out_dir) &&
      !(fs::is_directory(o.out_dir) && fs::is_empty(o.out_dir))) {
    throw InputError("output directory " + o.out_dir + " exists and is not empty");
  }
  const CensusResult r = run_census(q);
  if (!o.out_dir.empty()) write_census(r, o.out_dir);
  out << census_summary_json(r);
  return kExitOk;
}

int cmd_roundtrip(const Options& o, std::ostream& out, std::ostream&) {
  const AlgebraData A = parse_algebra(read_text_file(o.algebra_file));
  const AlgebraData B = extract_underlying(A);
  const bool same = A == B;
  const AxiomReport rel = relation_suite(A);
  out << "extracted algebra " << (same ? "matches" : "DIFFERS from") << " the input\n";
  out << "relations: " << (rel.passed() ? "all hold" : "violations") << '\n';
  if (!rel.passed()) out << rel.to_text();
  return same && rel.passed() ? kExitOk : kExitFailed;
}

int cmd_example(const Options& o, std::ostream& out, std::ostream&) {
  const RingDesc ring = RingDesc::parse(o.ring.empty() ? "Z/5" : o.ring);
  const AlgebraData A =
      make_cocycle_algebra(ring, ring.parse_scalar(o.t), ring.parse_scalar(o.a));
  out << dump_algebra(A);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact extended crossed algebras and unoriented surface invariants", "hqft"};
  app.require_subcommand(1);
  Options o;

  auto* verify_cmd = app.add_subcommand("verify", "Check the axioms of an algebra file");
  verify_cmd->add_option("algebra", o.algebra_file)->required();
  verify_cmd->add_option("--tier", o.tier)->check(CLI::IsMember({"frobenius", "crossed", "extended"}));
  verify_cmd->add_flag("--json", o.json, "Print the report as JSON");
  verify_cmd->add_flag("--trace-diagnostic", o.trace_diagnostic,
                       "Also compare both composition orders of the trace condition");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a cobordism word");
  eval_cmd->add_option("algebra", o.algebra_file)->required();
  eval_cmd->add_option("word", o.word_file)->required();

  auto* inv_cmd = app.add_subcommand("invariant", "Closed surface invariants");
  inv_cmd->add_option("algebra", o.algebra_file)->required();
  inv_cmd->add_option("surface", o.surface_file);
  inv_cmd->add_option("--table", o.table, "All surfaces with handles + crosscaps <= N")
      ->check(CLI::NonNegativeNumber);
  inv_cmd->add_flag("--force", o.force, "Allow tables beyond N = 4 or |pi| = 4");

  auto* census_cmd = app.add_subcommand("census", "Enumerate algebras over Z/n");
  census_cmd->add_option("--ring", o.ring)->required();
  census_cmd->add_option("--pi", o.pi, "Rank k of pi = (Z/2)^k")->check(CLI::Range(0, 8));
  census_cmd->add_option("--ranks", o.ranks, "Comma separated ranks in grade order")->required();
  census_cmd->add_option("--tier", o.tier)->check(CLI::IsMember({"frobenius", "crossed", "extended"}));
  census_cmd->add_option("--out", o.out_dir, "Directory for the fixtures");
  census_cmd->add_option("--bound", o.bound, "Largest search space accepted");

  auto* rt_cmd = app.add_subcommand("roundtrip", "Re-extract an algebra from its cobordisms");
  rt_cmd->add_option("algebra", o.algebra_file)->required();

  auto* ex_cmd = app.add_subcommand("example", "Print the rank-one cocycle algebra graded by Z/2");
  ex_cmd->add_option("--ring", o.ring);
  ex_cmd->add_option("--t", o.t, "Cocycle value on the nontrivial pair");
  ex_cmd->add_option("--a", o.a, "Crosscap scalar");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*eval_cmd) return cmd_eval(o, out, err);
    if (*inv_cmd) return cmd_invariant(o, out, err);
    if (*census_cmd) return cmd_census(o, out, err);
    if (*rt_cmd) return cmd_roundtrip(o, out, err);
    if (*ex_cmd) return cmd_example(o, out, err);
  } catch (const SearchSpaceTooLarge& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const SignatureMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace hqft
