#pragma once

#include <string>
#include <vector>

#include "qcells/parallel.hpp"

namespace qcells {

/// Census of the cells for one (rank, even ambient) pair: counts, dimension
/// histograms (ascending coefficient arrays), top-cell data, and the values
/// of the closed formulas they are compared against.
struct StatRecord {
  int k = 0;
  int n = 0;
  long long chi = 0;               // number of cells
  long long chi_sp = 0;            // number of symplectic cells
  std::vector<long long> poly;     // cells per dimension, ascending
  std::vector<long long> poly_sp;  // symplectic cells per dimension
  int top_dim = 0;                 // largest cell dimension
  int top_dim_sp = 0;              // largest symplectic cell dimension
  long long n_top_cells_sp = 0;    // symplectic cells of top dimension
  long long n_components_sp = 0;   // component count = the same tally
  int gr_sp_dim = 0;               // closed form k(n-k) - k(k-1)/2
  long long gr_sp_euler = 0;       // closed form 2^k C(n/2, k)
  std::string warning;             // nonempty when tally and closed form differ
};

StatRecord statistics(int k, int n, ExecMode mode);

}  // namespace qcells
