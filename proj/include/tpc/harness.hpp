// Copyright 2026 The tpc-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpc/graph.hpp"
#include "tpc/solver.hpp"

namespace tpc {

enum class Statement {
  Prop1,
  Prop2,
  Prop3,
  Thm1,
  Cor1,
  Thm2,
  Thm3Consistency,
  Cor2Consistency,
  Lemma1,
  Lemma2,
  Lemma3,
  Thm4,
  Thm5,
  Thm6,
};

/// Ids: prop1 prop2 prop3 thm1 cor1 thm2 thm3-consistency cor2-consistency
/// lemma1 lemma2 lemma3 thm4 thm5 thm6.
Statement parse_statement(std::string_view id);
std::string statement_id(Statement s);
const std::vector<Statement>& all_statements();

/// What one run checks. For thm2 and lemma1 the range is over the larger
/// part s of K_{s,t}; everything else ranges over the graph order n.
struct TheoremCase {
  Statement statement;
  int n_min;
  int n_max;
  SolveBudget budget;
  int jobs = 1;
  int samples = 200;             ///< prop2 pairs
  int strong_samples = 3;        ///< cor2 graphs sampled per order n >= 6
  std::uint64_t seed = 20170101;  ///< sampling seed
  /// Applied to every certificate the solver returns; fault injection for
  /// tests of the reporting path.
  std::function<void(TpcCertificate&)> tamper;
};

struct Counterexample {
  std::string graph6;
  std::string details;
  std::optional<TpcCertificate> certificate;
};

/// Invariant: examined == passes + counterexamples.size() + timeouts.size().
struct VerificationReport {
  std::string statement;
  int n_min = 0;
  int n_max = 0;
  int examined = 0;
  int passes = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> timeouts;
  double wall_seconds = 0;

  bool verified() const { return counterexamples.empty() && timeouts.empty(); }
  bool consistent() const {
    return examined == passes + static_cast<int>(counterexamples.size()) +
                           static_cast<int>(timeouts.size());
  }
};

/// Throws Error(SizeLimit) when the range leaves enumeration support and
/// Error(InvalidArgument) for ranges a statement does not cover.
VerificationReport verify_statement(const TheoremCase& c);

struct NgRow {
  std::string graph6;  ///< the member of {G, complement} with smaller code
  int tpc = 0;
  int tpc_complement = 0;
  int sum = 0;
  std::string status;  ///< "Exact" or the first non-exact solver status
};

struct NgScan {
  VerificationReport report;
  std::vector<NgRow> rows;
};

/// For every connected G of order n with connected complement, one row per
/// {G, complement} pair, rows ordered by canonical code. Checks
/// 6 <= sum <= n+2, sum = n+2 iff G or its complement is T(2,n-2) (n >= 5),
/// and that some pair (in particular the Theorem-6 construction) has sum 6.
/// When source is given, those graphs are scanned instead of the built-in
/// enumeration (other orders and non-co-connected graphs are skipped).
NgScan ng_scan(int n, const std::optional<std::vector<Graph>>& source,
               const SolveBudget& budget, int jobs = 1,
               const std::function<void(TpcCertificate&)>& tamper = {});

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_report_format(std::string_view name);
std::string emit_report(const VerificationReport& report, ReportFormat format);
std::string ng_rows_csv(const std::vector<NgRow>& rows);

/// Writes content to path via a temporary file and rename. Throws Error(Io).
void write_file_atomic(const std::string& path, const std::string& content);

/// Worker count from TPC_LAB_JOBS, defaulting to 1.
int default_jobs();

}  // namespace tpc
