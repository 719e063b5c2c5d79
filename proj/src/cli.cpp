#include "mzv/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mzv/expr.hpp"
#include "mzv/forms.hpp"
#include "mzv/suite.hpp"

namespace mzv {

namespace {

EvalConfig apply_env_cap(EvalConfig cfg) {
  if (const char* cap = std::getenv("MZV_MAX_CUTOFF")) {
    char* end = nullptr;
    long long v = std::strtoll(cap, &end, 10);
    if (end != cap && v >= 10) cfg.max_cutoff = std::min(cfg.max_cutoff, v);
  }
  return cfg;
}

// "k=2..8,r=1..4" -> cartesian product of inclusive ranges
std::vector<Params> parse_grid_spec(const std::string& spec) {
  std::vector<std::pair<std::string, std::pair<long long, long long>>> axes;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string piece = spec.substr(pos, comma == std::string::npos ? spec.size() - pos
                                                                    : comma - pos);
    std::size_t eq = piece.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("grid piece '" + piece + "' needs name=lo..hi");
    std::string name = piece.substr(0, eq);
    std::string range = piece.substr(eq + 1);
    std::size_t dots = range.find("..");
    long long lo, hi;
    if (dots == std::string::npos) {
      lo = hi = std::stoll(range);
    } else {
      lo = std::stoll(range.substr(0, dots));
      hi = std::stoll(range.substr(dots + 2));
    }
    if (hi < lo) throw std::invalid_argument("empty range in grid piece '" + piece + "'");
    axes.emplace_back(name, std::make_pair(lo, hi));
    pos = comma == std::string::npos ? spec.size() : comma + 1;
  }
  std::vector<Params> grid{{}};
  for (const auto& [name, range] : axes) {
    std::vector<Params> next;
    for (const Params& base : grid)
      for (long long v = range.first; v <= range.second; ++v) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    grid = std::move(next);
  }
  return grid;
}

std::string format_params(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += " ";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

void print_verdicts(const std::vector<Verdict>& verdicts) {
  int pass = 0, fail = 0, ood = 0, budget = 0;
  for (const Verdict& v : verdicts) {
    const char* status = to_string(v.status);
    switch (v.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::OutOfDomain: ++ood; break;
      case Status::BudgetNotMet: ++budget; break;
    }
    if (v.status == Status::OutOfDomain) {
      std::printf("[%s] %s %s  (%s)\n", status, v.id.c_str(), format_params(v.params).c_str(),
                  v.note.c_str());
    } else {
      std::printf("[%s] %s %s  |diff|=%.3g budget=%.3g\n", status, v.id.c_str(),
                  format_params(v.params).c_str(), v.abs_diff, v.budget);
      if (!v.note.empty()) std::printf("       note: %s\n", v.note.c_str());
    }
  }
  std::printf("%zu instances: %d PASS, %d FAIL, %d OUT_OF_DOMAIN, %d BUDGET_NOT_MET\n",
              verdicts.size(), pass, fail, ood, budget);
}

int write_report(const std::vector<Verdict>& verdicts, const SuiteConfig& cfg,
                 const std::string& path, const std::string& format) {
  std::string body;
  if (format == "json")
    body = report_json(verdicts, cfg);
  else if (format == "csv")
    body = report_csv(verdicts);
  else if (format == "md")
    body = report_markdown(verdicts);
  else {
    std::fprintf(stderr, "unknown report format '%s'\n", format.c_str());
    return 2;
  }
  std::ofstream out(path);
  if (!out) {
    std::fprintf(stderr, "cannot write report to '%s'\n", path.c_str());
    return 2;
  }
  out << body;
  return 0;
}

std::vector<Params> full_suite_extras(const std::string& id) {
  std::vector<Params> g;
  if (id == "sum_formula" || id == "sum_formula_star") {
    for (long long k = 9; k <= 10; ++k)
      for (long long r = 1; r < k; ++r) g.push_back({{"k", k}, {"r", r}});
  } else if (id == "thm2" || id == "thm3") {
    g.push_back({{"p", 6}});
  } else if (id == "thm4") {
    g.push_back({{"m", 4}, {"n", 4}});
  } else if (id == "s6_1m2") {
    g.push_back({{"m", 9}});
    g.push_back({{"m", 10}});
  } else if (id == "s6_1_2n" || id == "eq_112n") {
    g.push_back({{"n", 5}});
  } else if (id == "prop71") {
    long long i = 0;
    admissible_by_weight(8, [&](const MultiIndex& idx) {
      for (long long m = 1; m <= idx.depth() - 1; ++m)
        g.push_back({{"w", 8}, {"i", i}, {"m", m}});
      ++i;
    });
  }
  return g;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"multiple zeta value laboratory: certified evaluation, exact expansion, "
               "and identity verification"};
  app.require_subcommand(1);

  // shared evaluation settings
  double eps = 1e-7;
  long long max_cutoff = 100000000;
  bool plain_summation = false;

  auto add_eval_flags = [&](CLI::App* cmd) {
    cmd->add_option("--eps", eps, "requested accuracy per evaluated side");
    cmd->add_option("--max-cutoff", max_cutoff, "hard cap on series cutoffs");
    cmd->add_flag("--plain-summation", plain_summation,
                  "accumulate without compensation (wider rounding allowance)");
  };

  std::string expr_text;
  bool as_json = false;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression with a certified bound");
  eval_cmd->add_option("expr", expr_text, "expression, e.g. 'zetastar(1,2) - 2*zeta(3)'")
      ->required();
  add_eval_flags(eval_cmd);
  eval_cmd->add_flag("--json", as_json, "emit JSON");

  std::string idx_text;
  CLI::App* dual_cmd = app.add_subcommand("dual", "print the dual of an admissible index");
  dual_cmd->add_option("index", idx_text, "index, e.g. '1,2' or '1,{1}^2,3'")->required();

  std::string kind_text, upper_text, lower_text;
  int max_depth = ExpandLimits{}.max_total_depth;
  CLI::App* expand_cmd =
      app.add_subcommand("expand", "expand a two-chain sum into strict-chain values");
  expand_cmd->add_option("kind", kind_text, "zb, zl, or zu")->required();
  expand_cmd->add_option("--upper", upper_text, "strict-chain exponents")->required();
  expand_cmd->add_option("--lower", lower_text, "weak-chain exponents (may be empty)");
  expand_cmd->add_option("--max-depth", max_depth, "combined depth limit for the expansion");
  expand_cmd->add_flag("--json", as_json, "emit JSON");

  std::string verify_id, grid_spec, report_path, report_format = "json";
  std::vector<std::string> param_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check one identity on given parameters");
  verify_cmd->add_option("id", verify_id, "identity id (see 'list')")->required();
  verify_cmd->add_option("--param", param_args, "name=value, repeatable");
  verify_cmd->add_option("--grid", grid_spec, "grid spec, e.g. 'k=2..8,r=1..4'");
  verify_cmd->add_option("--report", report_path, "write a report file");
  verify_cmd->add_option("--format", report_format, "report format: json, csv, md");
  add_eval_flags(verify_cmd);

  CLI::App* list_cmd = app.add_subcommand("list", "print the identity registry");

  bool full = false;
  CLI::App* suite_cmd = app.add_subcommand("suite", "run every identity on its default grid");
  suite_cmd->add_flag("--full", full, "include the heavier opt-in instances");
  suite_cmd->add_option("--report", report_path, "write a report file");
  suite_cmd->add_option("--format", report_format, "report format: json, csv, md");
  add_eval_flags(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  SuiteConfig cfg;
  cfg.eval.target_eps = eps;
  cfg.eval.max_cutoff = max_cutoff;
  cfg.eval.summation = plain_summation ? Summation::Plain : Summation::Compensated;
  cfg.eval = apply_env_cap(cfg.eval);

  try {
    if (*eval_cmd) {
      Expression e = parse(expr_text);
      EvalResult r = eval_combo(to_combo(e), cfg.eval);
      if (as_json) {
        nlohmann::ordered_json j;
        j["expr"] = print(e);
        j["value"] = r.value;
        j["error_bound"] = r.error_bound;
        j["cutoff"] = r.cutoff;
        j["terms"] = r.terms;
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        std::printf("expr         = %s\n", print(e).c_str());
        std::printf("value        = %.17g\n", r.value);
        std::printf("error bound <= %.3g\n", r.error_bound);
        std::printf("cutoff       = %lld\n", r.cutoff);
        std::printf("terms        = %lld\n", r.terms);
      }
      return 0;
    }

    if (*dual_cmd) {
      MultiIndex idx = parse_index(idx_text);
      std::printf("%s\n", to_string(dual(idx)).c_str());
      return 0;
    }

    if (*expand_cmd) {
      FormKind kind;
      if (kind_text == "zb")
        kind = FormKind::B;
      else if (kind_text == "zl")
        kind = FormKind::L;
      else if (kind_text == "zu")
        kind = FormKind::U;
      else {
        std::fprintf(stderr, "kind must be zb, zl, or zu\n");
        return 2;
      }
      GeneralForm form{kind, parse_index(upper_text), parse_index(lower_text)};
      LinearCombo combo = expand(form, ExpandLimits{max_depth});
      if (as_json)
        std::printf("%s\n", expansion_json(combo).c_str());
      else
        std::printf("%s\n", combo.to_string().c_str());
      return 0;
    }

    if (*list_cmd) {
      for (const Identity& ident : registry()) {
        std::string names;
        for (const std::string& n : ident.param_names) {
          if (!names.empty()) names += ",";
          names += n;
        }
        std::printf("%-18s (%s)  [%s]\n", ident.id.c_str(), names.c_str(),
                    ident.source.c_str());
        std::printf("    %s\n", ident.description.c_str());
        if (!ident.domain_note.empty()) std::printf("    domain: %s\n", ident.domain_note.c_str());
      }
      std::printf("%zu identities registered\n", registry().size());
      return 0;
    }

    if (*verify_cmd) {
      const Identity* ident = find_identity(verify_id);
      if (!ident) {
        std::fprintf(stderr, "unknown identity '%s' (try 'list')\n", verify_id.c_str());
        return 2;
      }
      std::vector<Params> grid;
      if (!param_args.empty()) {
        Params p;
        for (const std::string& arg : param_args) {
          std::size_t eq = arg.find('=');
          if (eq == std::string::npos) {
            std::fprintf(stderr, "--param needs name=value, got '%s'\n", arg.c_str());
            return 2;
          }
          p[arg.substr(0, eq)] = std::stoll(arg.substr(eq + 1));
        }
        grid.push_back(std::move(p));
      } else if (!grid_spec.empty()) {
        grid = parse_grid_spec(grid_spec);
      } else {
        grid = ident->default_grid;
      }
      std::vector<Verdict> verdicts = sweep(verify_id, grid, cfg);
      print_verdicts(verdicts);
      if (!report_path.empty()) {
        int rc = write_report(verdicts, cfg, report_path, report_format);
        if (rc) return rc;
      }
      return any_fail(verdicts) ? 1 : 0;
    }

    if (*suite_cmd) {
      std::vector<Verdict> verdicts = run_default_suite(cfg);
      if (full) {
        for (const Identity& ident : registry()) {
          std::vector<Params> extra = full_suite_extras(ident.id);
          if (!extra.empty()) {
            std::vector<Verdict> part = sweep(ident.id, extra, cfg);
            verdicts.insert(verdicts.end(), part.begin(), part.end());
          }
        }
      }
      print_verdicts(verdicts);
      if (!report_path.empty()) {
        int rc = write_report(verdicts, cfg, report_path, report_format);
        if (rc) return rc;
      }
      return any_fail(verdicts) ? 1 : 0;
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error at %s\n", e.what());
    return 2;
  } catch (const DivergentAtom& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}

}  // namespace mzv
