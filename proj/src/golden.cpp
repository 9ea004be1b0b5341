#include "qcells/golden.hpp"

#include "qcells/errors.hpp"

namespace qcells {

const std::vector<GoldenRow>& golden_table() {
  static const std::vector<GoldenRow> table = {
      {1, 2, 3, 3, {1, 2}, {1, 2}},
      {1, 4, 15, 15, {1, 4, 6, 4}, {1, 4, 6, 4}},
      {2, 4, 33, 13, {1, 4, 10, 12, 6}, {1, 3, 5, 4}},
      {1, 6, 63, 63, {1, 6, 15, 20, 15, 6}, {1, 6, 15, 20, 15, 6}},
      {2, 6, 473, 293, {1, 6, 21, 50, 90, 120, 110, 60, 15}, {1, 6, 21, 48, 77, 81, 47, 12}},
      {3, 6, 883, 79, {1, 6, 21, 56, 114, 180, 215, 180, 90, 20}, {1, 4, 9, 17, 22, 18, 8}},
      {1, 8, 255, 255, {1, 8, 28, 56, 70, 56, 28, 8}, {1, 8, 28, 56, 70, 56, 28, 8}},
      {2, 8, 5281, 4053, {1, 8, 36, 112, 266, 504, 784, 1008, 1050, 840, 476, 168, 28},
       {1, 8, 36, 112, 266, 501, 759, 904, 798, 478, 166, 24}},
      {3, 8, 26799, 7507,
       {1, 8, 36, 120, 322, 728, 1420, 2408, 3542, 4480, 4788, 4200, 2870, 1400, 420, 56},
       {1, 8, 36, 117, 297, 613, 1042, 1445, 1588, 1319, 757, 251, 33}},
      {4, 8, 44929, 633,
       {1, 8, 36, 120, 330, 776, 1588, 2856, 4522, 6272, 7532, 7672, 6426, 4200, 1960, 560, 70},
       {1, 5, 14, 31, 59, 93, 121, 131, 106, 56, 16}},
  };
  return table;
}

const GoldenRow* golden_lookup(int k, int n) {
  for (const auto& row : golden_table())
    if (row.k == k && row.n == n) return &row;
  return nullptr;
}

std::vector<std::string> golden_compare(const StatRecord& rec) {
  const GoldenRow* row = golden_lookup(rec.k, rec.n);
  if (!row) fail(ErrorKind::GoldenMismatch, "no stored row for this pair", rec.k, rec.n);
  std::vector<std::string> bad;
  if (rec.chi != row->chi) bad.push_back("chi");
  if (rec.chi_sp != row->chi_sp) bad.push_back("chi_sp");
  if (rec.poly != row->poly) bad.push_back("poly");
  if (rec.poly_sp != row->poly_sp) bad.push_back("poly_sp");
  return bad;
}

}  // namespace qcells
