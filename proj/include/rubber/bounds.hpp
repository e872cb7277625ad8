#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rubber {

// Binary asymptote log2((1+sqrt(5))/2) and the break point 1/(3+sqrt(5)).
double golden_rate();
double tau_critical();

// q-ary entropy without the alphabet term: -t log_q t - (1-t) log_q(1-t).
double entropy_q(double tau, int q);

// Binary capacity-error function (upper and lower bounds coincide):
// 1-h(t) on [0, tau_c], (1-3t)*golden_rate on [tau_c, 1/3], 0 beyond.
double c2f_binary(double tau);
double berlekamp_upper(double tau);
double zigangirov_lower(double tau);

// q-ary upper bound: 1 - h_q(t) - t log_q(q-1) on [0, 1/q],
// (1-2t) log_q(q-1) on [1/q, 1/2].
double adl_upper(double tau, int q);

// Dominant root of z^{r+1} - q z^r + q - 1 = 0 in (q-1, q); exactly q-1 when
// r = 1 (the polynomial factors and the larger root is q-1).
double solve_z_r(int q, int r);

double rubber_rate(double tau, int q, int r);           // (1-(r+1)t) log_q z_r
double modified_rubber_rate(double tau, int q, int r);  // (1-rt) log_q z_r
double r_mr(double tau, int q, int r_max);              // max over 2 <= r <= r_max

// Scan H_q(t) - rubber_rate(t,q,r) over the grid, H_q = adl_upper's first
// branch extended to all of the grid.  Returns (min gap, argmin tau).
std::pair<double, double> tangency_gap(int q, int r, const std::vector<double>& grid);

struct BoundCurve {
  std::string label;
  std::vector<double> grid;
  std::vector<double> values;
};

// 0..0.5 in the given step, with the kink points tau_c, 1/q, 1/3 inserted so
// emitted tables contain the exact branch ends.
std::vector<double> default_grid(int q, double step = 0.001);

std::vector<BoundCurve> emit_curves(int q, int r_max, const std::vector<double>& grid);

// One header row "tau,<labels...>", one row per grid point, 9 decimals, LF.
void write_curves_csv(const std::vector<BoundCurve>& curves, const std::string& path);

}  // namespace rubber
