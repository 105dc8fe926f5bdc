#include "bergman/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bergman {

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("PowerSeries: need at least the constant coefficient");
}

PowerSeries PowerSeries::monomial(int k, Complex c, int order) {
  if (k < 0) throw std::invalid_argument("PowerSeries::monomial: negative exponent");
  if (order < 0) order = k;
  if (order < k) throw std::invalid_argument("PowerSeries::monomial: order below exponent");
  std::vector<Complex> v(static_cast<size_t>(order) + 1, 0.0);
  v[static_cast<size_t>(k)] = c;
  return PowerSeries(std::move(v));
}

Complex PowerSeries::coeff(int k) const {
  if (k < 0) throw std::invalid_argument("PowerSeries::coeff: negative index");
  if (k > order()) return 0.0;
  return coeffs_[static_cast<size_t>(k)];
}

PowerSeries PowerSeries::with_order(int order) const {
  if (order < 0) throw std::invalid_argument("PowerSeries::with_order: negative order");
  std::vector<Complex> v(static_cast<size_t>(order) + 1, 0.0);
  const int keep = std::min(order, this->order());
  for (int k = 0; k <= keep; ++k) v[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
  return PowerSeries(std::move(v));
}

PowerSeries add(const PowerSeries& p, const PowerSeries& q) {
  const int n = std::min(p.order(), q.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<size_t>(k)] = p.coeff(k) + q.coeff(k);
  return PowerSeries(std::move(v));
}

PowerSeries multiply(const PowerSeries& p, const PowerSeries& q) {
  const int n = std::min(p.order(), q.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    Complex s = 0.0;
    for (int j = 0; j <= k; ++j) s += p.coeff(j) * q.coeff(k - j);
    v[static_cast<size_t>(k)] = s;
  }
  return PowerSeries(std::move(v));
}

PowerSeries derivative(const PowerSeries& p) {
  if (p.order() == 0)
    throw std::invalid_argument("derivative: order-0 series has no representable derivative");
  std::vector<Complex> v(static_cast<size_t>(p.order()));
  for (int k = 1; k <= p.order(); ++k)
    v[static_cast<size_t>(k - 1)] = static_cast<double>(k) * p.coeff(k);
  return PowerSeries(std::move(v));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner.coeff(0) != 0.0)
    throw std::invalid_argument("compose: inner series must have zero constant term");
  const int n = std::min(outer.order(), inner.order());
  const PowerSeries in = inner.with_order(n);
  // Horner: result = (((outer_N) * in + outer_{N-1}) * in + ...) + outer_0.
  // Truncated products are exact here because in(0) == 0.
  PowerSeries result = PowerSeries::monomial(0, outer.coeff(n), n);
  for (int k = n - 1; k >= 0; --k) {
    result = multiply(result, in);
    result = add(result, PowerSeries::monomial(0, outer.coeff(k), n));
  }
  return result;
}

PowerSeries fractional_power(const PowerSeries& p, double beta) {
  if (p.coeff(0) == 0.0)
    throw std::invalid_argument("fractional_power: constant term must be nonzero");
  const int n = p.order();
  std::vector<Complex> q(static_cast<size_t>(n) + 1);
  q[0] = std::pow(p.coeff(0), beta);
  for (int k = 1; k <= n; ++k) {
    Complex s = 0.0;
    for (int j = 1; j <= k; ++j)
      s += ((beta + 1.0) * j - k) * p.coeff(j) * q[static_cast<size_t>(k - j)];
    q[static_cast<size_t>(k)] = s / (static_cast<double>(k) * p.coeff(0));
  }
  return PowerSeries(std::move(q));
}

Complex evaluate(const PowerSeries& p, Complex z) {
  Complex r = p.coeff(p.order());
  for (int k = p.order() - 1; k >= 0; --k) r = r * z + p.coeff(k);
  return r;
}

}  // namespace bergman
