#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gyro/gyro.hpp"
#include "gyro/report_json.hpp"

namespace gyro {

enum ExitCode : int { kExitPass = 0, kExitFinding = 1, kExitUsage = 2 };

namespace detail {

inline SubsetMask parse_subset(const std::string& text, std::size_t order) {
  SubsetMask s(order);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad subset element '" + item + "'");
    }
    if (used != item.size()) throw ParseError("bad subset element '" + item + "'");
    if (v >= order) throw ParseError("subset element " + item + " outside carrier of order " + std::to_string(order));
    s.insert(static_cast<Element>(v));
  }
  if (s.empty()) throw EmptySubsetError();
  return s;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

// Entry point shared by the `gyro` binary and the tests. Reports go to `out`
// as JSON; diagnostics go to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite and model gyrogroup engine"};
  app.require_subcommand(1);

  std::string file, subset_text, model_name = "mobius";
  bool all = false;
  std::size_t samples = 10000, p_samples = 50;
  double tol = kDefaultModelTolerance;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  SearchConfig search;

  auto* verify = app.add_subcommand("verify", "Check the gyrogroup axioms and identities of a table");
  verify->add_option("file", file, "Table file (JSON or plain text)")->required();

  auto* classify = app.add_subcommand("classify", "Classify subgyrogroups of a table");
  classify->add_option("file", file, "Table file")->required();
  auto* subset_opt = classify->add_option("--subset", subset_text, "Comma-separated elements");
  auto* all_opt = classify->add_flag("--all", all, "Classify every subgyrogroup");
  subset_opt->excludes(all_opt);

  auto* quotient = app.add_subcommand("quotient", "Build G/H and run the quotient checks");
  quotient->add_option("file", file, "Table file")->required();
  quotient->add_option("--subset", subset_text, "Comma-separated elements of H")->required();
  quotient->add_option("--p-samples", p_samples, "Random symmetric sets for the intersection identity");
  quotient->add_option("--seed", seed, "Sampling seed");

  auto* models = app.add_subcommand("models", "Sample identities in a continuous model");
  models->add_option("--model", model_name, "mobius or einstein")->check(CLI::IsMember({"mobius", "einstein"}));
  models->add_option("--samples", samples, "Number of sampled triples");
  models->add_option("--tol", tol, "Residual tolerance");
  models->add_option("--seed", seed, "Sampling seed");
  models->add_option("--workers", workers, "Worker threads");

  auto* search_cmd = app.add_subcommand("search", "Search for an L-subgyrogroup that is not strongly L");
  search_cmd->add_option("--max-order", search.max_order, "Largest order generated")->required();
  search_cmd->add_option("--catalog", search.catalog_dir, "Directory of extra tables");
  search_cmd->add_option("--workers", search.worker_count, "Worker threads");
  search_cmd->add_option("--output", search.output_path, "Directory receiving the scanned tables");
  search_cmd->add_flag("--allow-large", search.allow_large, "Permit orders above the exhaustive bound");
  bool keep_isomorphs = false;
  search_cmd->add_flag("--no-isomorph-reject", keep_isomorphs, "Scan labeled tables instead of canonical forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const auto g = load_table_file(file);
      const auto axioms = verify_axioms(g);
      const auto ids = check_identity_suite(g);
      const Json report = verify_json(g, axioms, ids);
      detail::emit(out, report);
      return report["ok"].get<bool>() ? kExitPass : kExitFinding;
    }
    if (classify->parsed()) {
      if (!all && subset_text.empty()) {
        err << "usage error: classify needs --subset or --all\n";
        return kExitUsage;
      }
      const auto g = load_table_file(file);
      if (!verify_axioms(g).ok()) throw StructureError("table is not a gyrogroup");
      if (all) {
        Json list = Json::array();
        bool finding = false;
        for (const auto& h : enumerate_subgyrogroups(g)) {
          const auto c = classify_subset(g, h);
          finding = finding || (c.is_L && !c.is_strongly_L);
          list.push_back(to_json(c));
        }
        detail::emit(out, Json{{"order", g.order()}, {"subgyrogroups", list}, {"finding", finding}});
        return finding ? kExitFinding : kExitPass;
      }
      const auto h = detail::parse_subset(subset_text, g.order());
      if (auto failure = subgyrogroup_failure(g, h)) {
        detail::emit(out, Json{{"subset", to_json(h)},
                               {"flags", {{"subgyrogroup", false}, {"L", false}, {"strongly_L", false}, {"normal_sufficient", false}}},
                               {"witnesses", {{"subgyrogroup", {{"reason", failure->reason}, {"tuple", failure->tuple}}}}}});
        return kExitFinding;
      }
      const auto c = classify_subset(g, h);
      detail::emit(out, to_json(c));
      return c.is_L && !c.is_strongly_L ? kExitFinding : kExitPass;
    }
    if (quotient->parsed()) {
      const auto g = load_table_file(file);
      if (!verify_axioms(g).ok()) throw StructureError("table is not a gyrogroup");
      const auto h = detail::parse_subset(subset_text, g.order());
      if (!h.contains(0)) throw PreconditionError("H does not contain 0");
      QuotientCheckOptions opt;
      opt.p_samples = p_samples;
      opt.seed = seed;
      const auto report = run_quotient_checks(g, h, opt);
      detail::emit(out, to_json(report));
      return report.ok() ? kExitPass : kExitFinding;
    }
    if (models->parsed()) {
      const auto kind = model_name == "einstein" ? ModelKind::einstein : ModelKind::mobius;
      const auto report = model_identity_sampler(kind, samples, tol, seed, workers);
      detail::emit(out, to_json(report));
      return report.ok() ? kExitPass : kExitFinding;
    }
    if (search_cmd->parsed()) {
      search.isomorph_reject = !keep_isomorphs;
      const auto result = search_L_not_SL(search);
      detail::emit(out, to_json(result));
      return result.witness ? kExitFinding : kExitPass;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gyro
