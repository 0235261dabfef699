#pragma once

#include <string>
#include <vector>

#include "amds/json_io.hpp"
#include "amds/mdsbuild.hpp"

namespace amds {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> notes;
  double seconds = 0;
};

CriterionResult criterion_field_basics();  // 1
CriterionResult criterion_axioms();        // 2
CriterionResult criterion_oracle();        // 3
CriterionResult criterion_headline();      // 4
CriterionResult criterion_r0();            // 5
CriterionResult criterion_r1();            // 6
CriterionResult criterion_symmetry();      // 7
CriterionResult criterion_avg();           // 8
CriterionResult criterion_partitions();    // 9
CriterionResult criterion_determinism();   // 10

// Runs the criteria with the given ids in order; unknown ids are a UsageError.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);
Json criterion_to_json(const CriterionResult& r);

// True when every nonzero non-constant term of s sits at a multiple of dir.
bool diagonal_only(const TruncSeries& s, const Exp& dir);

// Reports shared by the CLI subcommands. Each sets ok to false on a
// verification failure.
Json verify_report(const CoeffTable& table, bool& ok);
Json residue_report(const CoeffTable& table, bool& ok);
// Largest total degree the brute-force comparison covers for this table.
int brute_max_sum(const CoeffTable& table);
Json brute_report(const CoeffTable& table, const std::vector<int>& qs, bool& ok);
Json avg_report(const DynkinType& t, int B, bool& ok);
Json partitions_report(int n, int a_max, bool& ok);

}  // namespace amds
