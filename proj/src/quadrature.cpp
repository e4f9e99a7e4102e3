#include "dtvol/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

namespace dtvol {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                       0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                       0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double rk = fc * kWgk[10];
  double rg = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    rk += kWgk[j] * s;
    if (j % 2 == 1) rg += kWg[j / 2] * s;
  }
  return {a, b, rk * h, std::abs((rk - rg) * h)};
}

}  // namespace

QuadResult integrate_gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol,
                                   double b_panel_fraction, int max_panels) {
  QuadResult out;
  if (b <= a) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> heap;
  Panel first = gk21(f, a, b);
  out.evaluations = 21;
  heap.push(first);
  double total = first.value;
  double err = first.error;
  Panel end_panel = first;

  auto done = [&] { return err <= tol && end_panel.error <= b_panel_fraction * tol; };
  int panels = 1;
  while (!done() && panels < max_panels) {
    Panel worst;
    if (err <= tol) {
      // only the endpoint panel is short of its target; pull it out of the heap
      std::vector<Panel> rest;
      while (!heap.empty()) {
        if (heap.top().b == b && heap.top().a == end_panel.a) {
          worst = heap.top();
          heap.pop();
          break;
        }
        rest.push_back(heap.top());
        heap.pop();
      }
      for (const Panel& p : rest) heap.push(p);
    } else {
      worst = heap.top();
      heap.pop();
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    const Panel left = gk21(f, worst.a, mid);
    const Panel right = gk21(f, mid, worst.b);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (right.b == b) end_panel = right;
    ++panels;
  }
  // re-sum to shed accumulated cancellation in the running totals
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = err;
  out.converged = err <= tol;
  return out;
}

QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol,
                               int max_level) {
  QuadResult out;
  if (b <= a) {
    out.converged = true;
    return out;
  }
  const double c = 0.5 * (a + b);
  const double d = 0.5 * (b - a);
  constexpr double half_pi = 0.5 * std::numbers::pi;
  constexpr double t_max = 3.5;
  // node offsets below this from an endpoint are dropped (rounding would
  // place them on the endpoint itself)
  const double min_offset = 4.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(a), std::abs(b), 1.0});

  // contribution of +-t pair scaled by the step; t = 0 handled separately
  auto pair_sum = [&](double t) {
    const double u = half_pi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half_pi * std::cosh(t) / (ch * ch);
    const double offset = d * 2.0 / (std::exp(2.0 * u) + 1.0);  // d (1 - tanh u)
    if (offset < min_offset) return 0.0;
    out.evaluations += 2;
    return w * (f(b - offset) + f(a + offset));
  };

  double h = 1.0;
  double sum = half_pi * f(c);
  out.evaluations = 1;
  for (int k = 1; k * h <= t_max; ++k) sum += pair_sum(k * h);
  double estimate = d * h * sum;
  double prev = estimate;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (int k = 1; k * h <= t_max; k += 2) sum += pair_sum(k * h);
    estimate = d * h * sum;
    out.error = std::abs(estimate - prev);
    prev = estimate;
    if (level >= 3 && out.error <= tol) {
      out.converged = true;
      break;
    }
  }
  out.value = estimate;
  return out;
}

}  // namespace dtvol
