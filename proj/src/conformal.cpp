#include "bergman/conformal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kExpansionOrder = 512;

void require_map(const PowerSeries& F, const char* who) {
  if (F.order() < 1 || F.coeff(1) == 0.0)
    throw std::invalid_argument(std::string(who) + ": map must satisfy F'(0) != 0");
}

}  // namespace

double area(const PowerSeries& F) {
  require_map(F, "area");
  double s = 0.0;
  for (int n = 1; n <= F.order(); ++n) s += static_cast<double>(n) * std::norm(F.coeff(n));
  return kPi * s;
}

double perimeter(const PowerSeries& F, int samples) {
  require_map(F, "perimeter");
  if (samples < 16) throw std::invalid_argument("perimeter: need at least 16 samples");
  const PowerSeries Fp = derivative(F);
  double s = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * kPi * j / samples;
    s += std::abs(evaluate(Fp, Complex(std::cos(t), std::sin(t))));
  }
  return s * 2.0 * kPi / samples;
}

ConformalDomain::ConformalDomain(PowerSeries map, int samples) : map_(std::move(map)) {
  require_map(map_, "ConformalDomain");
  if (samples < 16) throw std::invalid_argument("ConformalDomain: need at least 16 samples");
  area_ = bergman::area(map_);
  perimeter_ = bergman::perimeter(map_, samples);
  if (!(perimeter_ * perimeter_ >= 4.0 * kPi * area_ * (1.0 - 1e-9)))
    throw std::invalid_argument(
        "ConformalDomain: isoperimetric inequality violated; map does not look univalent");
  boundary_.resize(static_cast<size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double t = 2.0 * kPi * j / samples;
    boundary_[static_cast<size_t>(j)] = evaluate(map_, Complex(std::cos(t), std::sin(t)));
  }
}

PowerSeries transport_symbol(const PowerSeries& psi_on_domain, const PowerSeries& F) {
  require_map(F, "transport_symbol");
  const int d = psi_on_domain.order();
  if (d == 0) return PowerSeries({0.0});
  // Horner over the series algebra; exact for polynomial symbols because the
  // working order covers the full composed degree.
  const int L = d * F.order();
  const PowerSeries Fpad = F.with_order(L);
  PowerSeries r = PowerSeries::monomial(0, psi_on_domain.coeff(d), L);
  for (int k = d - 1; k >= 0; --k)
    r = r * Fpad + PowerSeries::monomial(0, psi_on_domain.coeff(k), L);
  std::vector<Complex> c = r.coeffs();
  c[0] = 0.0;
  return PowerSeries(std::move(c));
}

PowerSeries transport_function(const PowerSeries& f_on_domain, const PowerSeries& F,
                               WeightParam alpha, int order) {
  require_map(F, "transport_function");
  if (order < 0) order = F.order() - 1;
  const PowerSeries Fp = derivative(F.with_order(order + 1));
  const PowerSeries w = fractional_power(Fp, (2.0 + alpha.value()) / 2.0);
  std::vector<Complex> ic = F.with_order(order).coeffs();
  ic[0] = 0.0;  // f is read as a series centered at F(0)
  const PowerSeries comp = compose(f_on_domain.with_order(order), PowerSeries(std::move(ic)));
  return w * comp;
}

namespace detail {

PowerSeries transported_one(const PowerSeries& F, WeightParam alpha, int order,
                            bool check_tail) {
  require_map(F, "norm_sq_of_one");
  const PowerSeries Fp = derivative(F.with_order(order + 1));
  PowerSeries g = fractional_power(Fp, (2.0 + alpha.value()) / 2.0);
  if (check_tail) {
    const std::vector<double> D = monomial_norm_values(alpha.value(), order);
    double sum = 0.0;
    for (int n = 0; n <= order; ++n) sum += std::norm(g.coeff(n)) * D[static_cast<size_t>(n)];
    double tail = 0.0;
    for (int n = std::max(0, order - 7); n <= order; ++n)
      tail = std::max(tail, std::norm(g.coeff(n)) * D[static_cast<size_t>(n)]);
    if (!(tail <= 1e-8 * sum))
      throw NonConvergenceError(
          "norm_sq_of_one: coefficient tail of (F')^{(2+alpha)/2} has not decayed at the "
          "working order");
  }
  return g;
}

}  // namespace detail

double norm_sq_of_one(const PowerSeries& F, WeightParam alpha) {
  const PowerSeries g = detail::transported_one(F, alpha, kExpansionOrder, true);
  return weighted_norm_sq(g, alpha);
}

}  // namespace bergman
