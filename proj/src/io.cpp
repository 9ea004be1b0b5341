#include "qcells/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcells {

using nlohmann::json;

json pattern_to_json(const JugglingPattern& J) {
  json sets = json::array();
  for (int i = 0; i < J.n(); ++i) sets.push_back(J.at(i).elements());
  return json{{"n", J.n()}, {"k", J.k()}, {"sets", sets}};
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string dot_render(const CellPoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n";
  std::map<int, std::vector<int>, std::greater<int>> tiers;
  for (std::size_t i = 0; i < p.patterns.size(); ++i) tiers[p.dims[i]].push_back(static_cast<int>(i));
  for (const auto& [dim, nodes] : tiers) {
    os << "  { rank=same;";
    for (int v : nodes) os << " n" << v << ";";
    os << " }  // dimension " << dim << "\n";
  }
  for (std::size_t i = 0; i < p.patterns.size(); ++i)
    os << "  n" << i << " [label=\"" << dot_escape(pattern_to_json(p.patterns[i]).dump()) << "\"];\n";
  for (const auto& [upper, lower] : p.hasse) os << "  n" << upper << " -> n" << lower << ";\n";
  os << "}\n";
  return os.str();
}

namespace {
std::string quoted_array(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "\"[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]\"";
  return os.str();
}
}  // namespace

std::string csv_stats_header() { return "k,n,chi,chi_sp,P,P_sp,top_dim_sp,n_top,components,gr_euler"; }

std::string csv_stats_row(const StatRecord& r) {
  std::ostringstream os;
  os << r.k << ',' << r.n << ',' << r.chi << ',' << r.chi_sp << ',' << quoted_array(r.poly) << ','
     << quoted_array(r.poly_sp) << ',' << r.top_dim_sp << ',' << r.n_top_cells_sp << ','
     << r.n_components_sp << ',' << r.gr_sp_euler;
  return os.str();
}

json stats_to_json(const StatRecord& r) {
  return json{{"k", r.k},
              {"n", r.n},
              {"chi", r.chi},
              {"chi_sp", r.chi_sp},
              {"poly", r.poly},
              {"poly_sp", r.poly_sp},
              {"top_dim", r.top_dim},
              {"top_dim_sp", r.top_dim_sp},
              {"n_top_cells_sp", r.n_top_cells_sp},
              {"n_components_sp", r.n_components_sp},
              {"gr_sp_dim", r.gr_sp_dim},
              {"gr_sp_euler", r.gr_sp_euler},
              {"warning", r.warning}};
}

json conjecture_to_json(const ConjectureReport& r) {
  json pairs = json::array();
  for (const auto& [upper, lower] : r.counterexamples)
    pairs.push_back(json{{"upper", pattern_to_json(upper)}, {"lower", pattern_to_json(lower)}});
  return json{{"k", r.k},
              {"n", r.n},
              {"n_symplectic", r.n_symplectic},
              {"n_counterexamples", pairs.size()},
              {"counterexamples", pairs},
              {"complete", true}};
}

json chain_to_json(const LatticeChain& chain) {
  json positions = json::array();
  for (std::size_t c = 0; c < chain.lattices.size(); ++c) {
    const TruncatedLattice& lat = chain.lattices[c];
    json vectors = json::array();
    for (int col = 0; col < lat.basis.cols(); ++col) {
      json vec = json::array();
      for (int row = 0; row < lat.basis.rows(); ++row) {
        const Rational& x = lat.basis.at(row, col);
        if (x == 0) continue;
        vec.push_back(json{{"coeff", x.get_str()}, {"p", row % chain.N + 1}, {"d", row / chain.N - chain.m}});
      }
      vectors.push_back(vec);
    }
    positions.push_back(json{{"position", c}, {"index", lat.index}, {"dim", lat.dim()}, {"vectors", vectors}});
  }
  return json{{"N", chain.N}, {"m", chain.m}, {"positions", positions}};
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
    if (!out.good()) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename into " + path);
}

}  // namespace qcells
