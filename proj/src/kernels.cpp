#include "qcells/kernels.hpp"

#include "qcells/liealg.hpp"
#include "qcells/mutations.hpp"

namespace qcells {

std::vector<int> cell_dimensions(const std::vector<JugglingPattern>& ps, ExecMode mode) {
  std::vector<int> out(ps.size(), 0);
  for_each_index(ps.size(), mode, [&](std::size_t i) { out[i] = cell_dimension(ps[i]); });
  return out;
}

std::vector<uint8_t> symplectic_flags(const std::vector<JugglingPattern>& ps, ExecMode mode) {
  std::vector<uint8_t> out(ps.size(), 0);
  for_each_index(ps.size(), mode, [&](std::size_t i) { out[i] = is_symplectic(ps[i]) ? 1 : 0; });
  return out;
}

std::vector<int> symplectic_cell_dimensions(const std::vector<JugglingPattern>& ps, ExecMode mode) {
  std::vector<int> out(ps.size(), 0);
  for_each_index(ps.size(), mode, [&](std::size_t i) { out[i] = symplectic_cell_dimension(ps[i]); });
  return out;
}

std::vector<int> orbit_dimensions(const std::vector<JugglingPattern>& ps, bool symplectic, ExecMode mode) {
  std::vector<int> out(ps.size(), 0);
  if (ps.empty()) return out;
  const auto basis = lie_basis(ps[0].n(), symplectic);
  for_each_index(ps.size(), mode,
                 [&](std::size_t i) { out[i] = orbit_dimension(ps[i], symplectic, basis); });
  return out;
}

}  // namespace qcells
