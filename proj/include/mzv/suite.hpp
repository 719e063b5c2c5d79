#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mzv/eval.hpp"
#include "mzv/relations.hpp"

namespace mzv {

using Params = std::map<std::string, long long>;

/**
 * A registered identity: a stable id, a human description, a provenance
 * label, a parameter schema, a structural builder, and the default grid the
 * full suite sweeps. Index-valued parameters are encoded as (w, i): the i-th
 * index of weight w in stream order for the family named by the schema.
 */
struct Identity {
  std::string id;
  std::string description;
  std::string source;
  std::vector<std::string> param_names;
  std::string domain_note;
  std::function<IdentityInstance(const Params&)> build;
  std::vector<Params> default_grid;
};

enum class Status { Pass, Fail, OutOfDomain, BudgetNotMet };

const char* to_string(Status s);

struct Verdict {
  std::string id;
  Params params;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_bound = 0.0;
  double rhs_bound = 0.0;
  double abs_diff = 0.0;
  double budget = 0.0;
  Status status = Status::OutOfDomain;
  std::string note;
};

struct SuiteConfig {
  EvalConfig eval;        // target_eps acts per side
  double slack = 1e-9;    // added to the two propagated bounds
};

const std::vector<Identity>& registry();
const Identity* find_identity(const std::string& id);

/// build, evaluate, and judge one instance
Verdict run(const std::string& id, const Params& params, const SuiteConfig& cfg);

/// deterministic left-to-right execution of a grid
std::vector<Verdict> sweep(const std::string& id, const std::vector<Params>& grid,
                           const SuiteConfig& cfg);

/// every registered identity over its default grid
std::vector<Verdict> run_default_suite(const SuiteConfig& cfg);

bool any_fail(const std::vector<Verdict>& verdicts);

std::string report_json(const std::vector<Verdict>& verdicts, const SuiteConfig& cfg);
std::string report_csv(const std::vector<Verdict>& verdicts);
std::string report_markdown(const std::vector<Verdict>& verdicts);

// stream-order index lookups shared by builders and the CLI
MultiIndex nth_admissible(int w, long long i);
MultiIndex nth_composition(int w, long long i);  // any composition, w = 0 gives the empty index

}  // namespace mzv
