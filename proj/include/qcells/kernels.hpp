#pragma once

#include <cstdint>
#include <vector>

#include "qcells/parallel.hpp"
#include "qcells/patterns.hpp"

namespace qcells {

/// Move counts per pattern (= cell dimensions), in input order.
std::vector<int> cell_dimensions(const std::vector<JugglingPattern>& ps, ExecMode mode);

/// 1 where the pattern is symplectic, 0 otherwise.
std::vector<uint8_t> symplectic_flags(const std::vector<JugglingPattern>& ps, ExecMode mode);

/// Paired-move counts; every input pattern must be symplectic.
std::vector<int> symplectic_cell_dimensions(const std::vector<JugglingPattern>& ps, ExecMode mode);

/// Exact orbit ranks through the shared tangent basis; with the symplectic
/// flag every input pattern must be symplectic.
std::vector<int> orbit_dimensions(const std::vector<JugglingPattern>& ps, bool symplectic, ExecMode mode);

}  // namespace qcells
