#include "qcells/stats.hpp"

#include <sstream>

#include "qcells/errors.hpp"
#include "qcells/kernels.hpp"

namespace qcells {

namespace {
long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

StatRecord statistics(int k, int n, ExecMode mode) {
  if (n % 2 != 0) fail(ErrorKind::OddAmbient, "census needs even ambient", n);
  if (k < 0 || 2 * k > n) fail(ErrorKind::RankTooLarge, "rank above half the ambient", k, n);
  StatRecord rec;
  rec.k = k;
  rec.n = n;
  rec.gr_sp_dim = k * (n - k) - k * (k - 1) / 2;
  rec.gr_sp_euler = (1LL << k) * binomial(n / 2, k);

  const auto ps = all_jp(k, n);
  rec.chi = static_cast<long long>(ps.size());
  const auto dims = cell_dimensions(ps, mode);
  const auto flags = symplectic_flags(ps, mode);
  std::vector<JugglingPattern> sp;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (flags[i]) sp.push_back(ps[i]);
  rec.chi_sp = static_cast<long long>(sp.size());
  const auto sp_dims = symplectic_cell_dimensions(sp, mode);

  for (int d : dims) {
    if (d >= static_cast<int>(rec.poly.size())) rec.poly.resize(d + 1, 0);
    ++rec.poly[d];
  }
  for (int d : sp_dims) {
    if (d >= static_cast<int>(rec.poly_sp.size())) rec.poly_sp.resize(d + 1, 0);
    ++rec.poly_sp[d];
  }
  rec.top_dim = static_cast<int>(rec.poly.size()) - 1;
  rec.top_dim_sp = static_cast<int>(rec.poly_sp.size()) - 1;
  rec.n_top_cells_sp = rec.poly_sp.empty() ? 0 : rec.poly_sp.back();
  rec.n_components_sp = rec.n_top_cells_sp;
  if (rec.n_components_sp != rec.gr_sp_euler) {
    std::ostringstream w;
    w << "component tally " << rec.n_components_sp << " differs from closed-form value "
      << rec.gr_sp_euler;
    rec.warning = w.str();
  }
  return rec;
}

}  // namespace qcells
