#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fatcode {

// One entry per checkable statement. The order here is the canonical merge
// order for survey output.
enum class StatementId {
  CrudeBounds,
  HomBound,
  BoundsCor,
  MainTheoremI,
  MainTheoremII,
  FatPointSocle,
  RecursionLemma,
  CIBound,
  SocleValueCI,
  CI22Equality,
  BezoutCI,
  N2Theorem,
  ConjectureCI,
  OpenQuestion,
};

const char* statement_id_name(StatementId id);

// Result of evaluating one statement on one instance. `holds` is the literal
// truth value of the named inequality or equality on the computed numbers;
// `attained` flags equality for inequalities that can be sharp. Checkers for
// unproven statements set `counterexample` instead of failing when the
// inequality breaks, and `attainment_indeterminate` when a genericity
// assumption needed to judge attainment does not hold on this instance.
struct BoundReport {
  StatementId id;
  std::string inputs_summary;
  std::vector<std::pair<std::string, std::int64_t>> values;
  bool holds = false;
  bool attained = false;
  bool attainment_indeterminate = false;
  bool counterexample = false;
  std::string witness;
  std::string notes;

  std::int64_t value(const std::string& key) const;
  void set(const std::string& key, std::int64_t v) { values.emplace_back(key, v); }
};

}  // namespace fatcode
