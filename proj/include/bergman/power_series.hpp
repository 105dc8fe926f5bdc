#pragma once

#include <complex>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;

/// Truncated power series with complex coefficients.
///
/// A series carries a fixed truncation order N and stores exactly the
/// coefficients of z^0..z^N.  Binary operations truncate to the minimum
/// operand order and never grow it; callers that need headroom must pad
/// the operands first (see with_order).
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Complex> coeffs);

  /// The monomial c*z^k represented at truncation order `order`.
  static PowerSeries monomial(int k, Complex c = 1.0, int order = -1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero beyond the truncation order.
  Complex coeff(int k) const;

  /// Same series re-truncated (or zero-padded) to the given order.
  PowerSeries with_order(int order) const;

  bool operator==(const PowerSeries& other) const = default;

 private:
  std::vector<Complex> coeffs_;
};

PowerSeries add(const PowerSeries& p, const PowerSeries& q);
PowerSeries multiply(const PowerSeries& p, const PowerSeries& q);

/// Termwise derivative; the order drops by one.  Order-0 input is an error.
PowerSeries derivative(const PowerSeries& p);

/// Taylor coefficients of outer(inner(z)) up to the minimum operand order.
/// Requires inner(0) == 0.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Principal-branch p^beta for a series with nonzero constant term,
/// via the coefficient recurrence obtained from p * (p^beta)' = beta * p' * p^beta.
PowerSeries fractional_power(const PowerSeries& p, double beta);

/// Horner evaluation at a point.
Complex evaluate(const PowerSeries& p, Complex z);

inline PowerSeries operator+(const PowerSeries& p, const PowerSeries& q) { return add(p, q); }
inline PowerSeries operator*(const PowerSeries& p, const PowerSeries& q) { return multiply(p, q); }

}  // namespace bergman
