#include "rubber/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace rubber {

namespace {

long double entropy_ld(long double tau, int q) {
  if (tau <= 0.0L || tau >= 1.0L) return 0.0L;  // endpoints by continuity
  const long double lq = std::log((long double)q);
  return (-tau * std::log(tau) - (1.0L - tau) * std::log(1.0L - tau)) / lq;
}

long double logq_ld(long double x, int q) {
  return std::log(x) / std::log((long double)q);
}

// Residual written as z^r (z - q) + (q - 1): near the root z - q is small, so
// the subtraction happens before the large power multiplies in.
long double poly_ld(long double z, int q, int r) {
  long double zr = 1.0L;
  for (int i = 0; i < r; ++i) zr *= z;
  return zr * (z - q) + (q - 1);
}

long double solve_z_ld(int q, int r) {
  if (q < 2 || r < 1) throw std::invalid_argument("solve_z_r: q >= 2, r >= 1");
  if (r == 1) return (long double)(q - 1);
  long double lo = (long double)(q - 1), hi = (long double)q;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (poly_ld(mid, q, r) < 0.0L)
      lo = mid;  // polynomial is negative between z = 1 and the dominant root
    else
      hi = mid;
  }
  long double z = 0.5L * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    long double zr1 = 1.0L;  // z^{r-1}
    for (int i = 0; i + 1 < r; ++i) zr1 *= z;
    const long double deriv = zr1 * ((r + 1) * z * z - q * r * z) / z;
    if (deriv == 0.0L) break;
    z -= poly_ld(z, q, r) / deriv;
  }
  return z;
}

long double upper_branch_ld(long double tau, int q) {
  return 1.0L - entropy_ld(tau, q) - tau * logq_ld((long double)(q - 1), q);
}

}  // namespace

double golden_rate() { return (double)logq_ld((1.0L + std::sqrt(5.0L)) / 2.0L, 2); }

double tau_critical() { return (double)(1.0L / (3.0L + std::sqrt(5.0L))); }

double entropy_q(double tau, int q) {
  if (q < 2) throw std::invalid_argument("entropy_q: q >= 2");
  if (tau < 0.0 || tau > 1.0) throw std::invalid_argument("entropy_q: tau in [0,1]");
  return (double)entropy_ld(tau, q);
}

double c2f_binary(double tau) {
  if (tau < 0.0) throw std::invalid_argument("c2f_binary: tau >= 0");
  const long double tc = 1.0L / (3.0L + std::sqrt(5.0L));
  if (tau >= 1.0 / 3.0) return 0.0;
  if ((long double)tau <= tc) return (double)(1.0L - entropy_ld(tau, 2));
  return (double)((1.0L - 3.0L * tau) * logq_ld((1.0L + std::sqrt(5.0L)) / 2.0L, 2));
}

double berlekamp_upper(double tau) { return c2f_binary(tau); }
double zigangirov_lower(double tau) { return c2f_binary(tau); }

double adl_upper(double tau, int q) {
  if (q < 2) throw std::invalid_argument("adl_upper: q >= 2");
  if (tau < 0.0 || tau > 0.5) throw std::invalid_argument("adl_upper: tau in [0,1/2]");
  if (tau * q <= 1.0) return (double)upper_branch_ld(tau, q);
  return (double)((1.0L - 2.0L * (long double)tau) * logq_ld((long double)(q - 1), q));
}

double solve_z_r(int q, int r) { return (double)solve_z_ld(q, r); }

double rubber_rate(double tau, int q, int r) {
  const long double v =
      (1.0L - (r + 1) * (long double)tau) * logq_ld(solve_z_ld(q, r), q);
  return v > 0.0L ? (double)v : 0.0;
}

double modified_rubber_rate(double tau, int q, int r) {
  const long double v = (1.0L - r * (long double)tau) * logq_ld(solve_z_ld(q, r), q);
  return v > 0.0L ? (double)v : 0.0;
}

double r_mr(double tau, int q, int r_max) {
  if (r_max < 2) throw std::invalid_argument("r_mr: r_max >= 2");
  if (tau > 0.5) return 0.0;
  double best = 0.0;
  for (int r = 2; r <= r_max; ++r)
    best = std::max(best, modified_rubber_rate(tau, q, r));  // ties keep smaller r
  return best;
}

std::pair<double, double> tangency_gap(int q, int r, const std::vector<double>& grid) {
  double best = 0.0, arg = 0.0;
  bool first = true;
  for (double tau : grid) {
    const double gap = (double)upper_branch_ld(tau, q) - rubber_rate(tau, q, r);
    if (first || gap < best) {
      best = gap;
      arg = tau;
      first = false;
    }
  }
  return {best, arg};
}

std::vector<double> default_grid(int q, double step) {
  std::vector<double> grid;
  for (double tau = 0.0; tau <= 0.5 + 1e-12; tau += step)
    grid.push_back(std::min(tau, 0.5));
  for (double kink : {tau_critical(), 1.0 / q, 1.0 / 3.0})
    if (kink <= 0.5) grid.push_back(kink);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             grid.end());
  return grid;
}

std::vector<BoundCurve> emit_curves(int q, int r_max, const std::vector<double>& grid) {
  std::vector<BoundCurve> out;
  auto add = [&](const std::string& label, auto fn) {
    BoundCurve c{label, grid, {}};
    c.values.reserve(grid.size());
    for (double tau : grid) c.values.push_back(fn(tau));
    out.push_back(std::move(c));
  };
  if (q == 2) add("c2f", [](double tau) { return c2f_binary(tau); });
  add("adl", [q](double tau) { return adl_upper(tau, q); });
  for (int r = 1; r <= r_max; ++r)
    add("rubber_r" + std::to_string(r),
        [q, r](double tau) { return rubber_rate(tau, q, r); });
  add("r_mr", [q, r_max](double tau) { return r_mr(tau, q, std::max(r_max, 2)); });
  return out;
}

void write_curves_csv(const std::vector<BoundCurve>& curves, const std::string& path) {
  if (curves.empty()) throw std::invalid_argument("write_curves_csv: no curves");
  std::ofstream out(path, std::ios::binary);  // binary: LF line endings everywhere
  if (!out) throw std::runtime_error("write_curves_csv: cannot open " + path);
  out << "tau";
  for (const auto& c : curves) out << ',' << c.label;
  out << '\n';
  out.setf(std::ios::fixed);
  out.precision(9);
  for (std::size_t i = 0; i < curves.front().grid.size(); ++i) {
    out << curves.front().grid[i];
    for (const auto& c : curves) out << ',' << c.values[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_curves_csv: write failed");
}

}  // namespace rubber
