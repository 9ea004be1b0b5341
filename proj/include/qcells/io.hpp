#pragma once

#include <string>

#include "json.hpp"
#include "qcells/afflag.hpp"
#include "qcells/patterns.hpp"
#include "qcells/poset.hpp"
#include "qcells/stats.hpp"

namespace qcells {

nlohmann::json pattern_to_json(const JugglingPattern& J);

/// Graphviz rendering of the Hasse diagram: one rank row per dimension,
/// node labels are the pattern JSON.
std::string dot_render(const CellPoset& p);

std::string csv_stats_header();
std::string csv_stats_row(const StatRecord& r);
nlohmann::json stats_to_json(const StatRecord& r);
nlohmann::json conjecture_to_json(const ConjectureReport& r);

/// Per position: index and basis vectors as {coeff, p, d} triples.
nlohmann::json chain_to_json(const LatticeChain& chain);

/// Write-temp-then-rename; the destination never holds partial content.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace qcells
