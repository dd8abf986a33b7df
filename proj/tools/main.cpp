#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "cosetchar/coset_theory.hpp"
#include "cosetchar/errors.hpp"
#include "cosetchar/group_io.hpp"
#include "cosetchar/inversion.hpp"
#include "cosetchar/report.hpp"
#include "cosetchar/selftest.hpp"

namespace {

enum ExitCode { kOk = 0, kParse = 2, kHypothesis = 3, kInternal = 4 };

using namespace cosetchar;

struct Options {
  std::string group_file;
  std::string theta_file;
  std::string coset;
  std::size_t order_limit = FiniteGroup::kDefaultOrderLimit;
  bool json = false;
  std::size_t samples = 10;
};

Format format_of(const Options& o) { return o.json ? Format::kJson : Format::kText; }

Problem load(const Options& o) {
  const AnyGroupSpec spec = parse_group_file(o.group_file);
  GroupSpec perm = to_permutation_spec(spec);
  if (perm.label.empty()) perm.label = o.group_file;
  return build_problem(perm, o.order_limit);
}

int cmd_analyze(const Options& o) {
  const Problem p = load(o);
  const CosetAnalysis a = CosetAnalysis::make(p.group, p.normal);
  std::optional<CosetIndex> only;
  if (!o.coset.empty()) {
    only = a.parse_coset_label(o.coset);
    if (!only) throw ParseError("unknown coset label '" + o.coset + "'");
  }
  std::cout << render_analysis(a, p.label, only, format_of(o));
  return kOk;
}

int cmd_table(const Options& o) {
  const Problem p = load(o);
  std::cout << render_table(character_table(p.group), p.label, format_of(o));
  return kOk;
}

int cmd_invert(const Options& o) {
  const Problem p = load(o);
  const CosetAnalysis a = CosetAnalysis::make(p.group, p.normal);
  const ThetaSpec ts = parse_theta_file(o.theta_file);
  Theta theta;
  if (ts.kind == ThetaSpec::Kind::kMultiplicities) {
    theta = Theta::from_multiplicities(a.table(), ts.multiplicities);
  } else {
    if (ts.values.size() != p.group->class_count()) {
      throw ParseError("Theta has " + std::to_string(ts.values.size()) + " values, group has " +
                       std::to_string(p.group->class_count()) + " classes");
    }
    theta = Theta::from_values(a.table(), ClassFunction(p.group, ts.values));
  }
  const auto comps = decompose(a, theta);
  std::cout << render_inversion(a, theta, comps, p.label, format_of(o));
  return kOk;
}

int cmd_selftest(const Options& o) {
  const SelftestSummary s = run_selftest(o.samples);
  std::cout << render_selftest(s, format_of(o));
  return s.all_passed() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset decomposition of character tables over abelian quotients"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "per-coset classes, orbits, M_q and extendability");
  analyze->add_option("groupfile", o.group_file, "group description")->required()->check(CLI::ExistingFile);
  analyze->add_option("--coset", o.coset, "restrict the coset reports to one coset (N, q^j or (e1,e2,...))");

  auto* table = app.add_subcommand("table", "exact character table of G");
  table->add_option("groupfile", o.group_file, "group description")->required()->check(CLI::ExistingFile);

  auto* invert = app.add_subcommand("invert", "decompose Theta as a sum of Psi (x) rho");
  invert->add_option("groupfile", o.group_file, "group description")->required()->check(CLI::ExistingFile);
  invert->add_option("thetafile", o.theta_file, "character values or multiplicities")
      ->required()
      ->check(CLI::ExistingFile);

  auto* selftest = app.add_subcommand("selftest", "property suite over the built-in corpus");
  selftest->add_option("--samples", o.samples, "random inversion round trips per group")->capture_default_str();

  for (auto* sub : {analyze, table, invert, selftest}) {
    sub->add_flag("--json", o.json, "machine-readable output");
    if (sub != selftest) {
      sub->add_option("--order-limit", o.order_limit, "refuse groups larger than this")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*table) return cmd_table(o);
    if (*invert) return cmd_invert(o);
    return cmd_selftest(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const HypothesisError& e) {
    std::cerr << e.what() << '\n';
    return kHypothesis;
  } catch (const InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
