#pragma once

#include "dirac/sl2_spectral.hpp"

#include <string>
#include <vector>

namespace dirac {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string suite;
  std::string check;
  Status status = Status::pass;
  std::string details;
  std::string paper_anchor;
};

class Report {
 public:
  /// pass/fail from ok; a failing check must carry details.
  void add(std::string suite, std::string check, bool ok, std::string details, std::string anchor);
  void skip(std::string suite, std::string check, std::string details, std::string anchor);
  void merge(const Report& o);
  /// Sorted by (suite, check).
  std::vector<CheckResult> sorted() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool ok() const;

 private:
  std::vector<CheckResult> checks_;
};

/// {version, suites: [{name, checks}]}, plus "rows" when table rows are given.
std::string render_json(const Report& r, const std::vector<TableRow>* rows = nullptr);
/// One line per check: "<suite>/<check>: <status> — <details>".
std::string render_text(const Report& r, const std::vector<TableRow>* rows = nullptr);

/// Clifford relations, associativity and the alpha bracket property.
Report clifford_suite(const TransitiveTriple& t);
/// Spin module relations, the graded split and its multiplication map.
Report spin_suite(const TransitiveTriple& t);
/// Structure of the triple, alpha morphisms, rho identities.
Report triple_suite(const TransitiveTriple& t);
/// Both right-hand sides against the transferred operator for E of highest
/// weight `weight`, plus a perturbed negative control.
Report embedding_suite(const TransitiveTriple& t, int weight);
/// Cubic scalar, block eigenvalues, kernel computations for E of highest
/// weight `weight` (odd weights run the parity checks only).
Report spectral_suite(const TransitiveTriple& t, const Sl2Pair& p, int weight, int truncation,
                      KernelCache* cache = nullptr);

struct Table64 {
  Report report;
  std::vector<TableRow> rows;
};
/// Table rows for E of highest weight 2m, checked against the expected cases.
Table64 table64(const Sl2Pair& p, int weight, int truncation = 40, KernelCache* cache = nullptr);
/// Expected labels for E of highest weight 2m.
std::vector<LRepLabel> expected_table64(int m);

}  // namespace dirac
