#pragma once

#include <string>
#include <vector>

#include "qcells/stats.hpp"

namespace qcells {

/// One embedded reference row: counts and dimension histograms for a
/// (rank, ambient) pair, used by the --golden comparison.
struct GoldenRow {
  int k;
  int n;
  long long chi;
  long long chi_sp;
  std::vector<long long> poly;
  std::vector<long long> poly_sp;
};

const std::vector<GoldenRow>& golden_table();
const GoldenRow* golden_lookup(int k, int n);

/// Names of the fields where the record disagrees with the stored row;
/// empty means full agreement. The pair must have a stored row.
std::vector<std::string> golden_compare(const StatRecord& rec);

}  // namespace qcells
