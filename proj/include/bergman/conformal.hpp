#pragma once

#include <vector>

#include "bergman/power_series.hpp"
#include "bergman/weights.hpp"

namespace bergman {

/// A simply connected domain presented by a polynomial Riemann map
/// F : unit disk -> domain.  Only this direction is ever stored; nothing in
/// the library inverts F.  Univalence is the caller's responsibility; the
/// constructor checks F'(0) != 0 and the isoperimetric sanity inequality
/// perimeter^2 >= 4*pi*area.
class ConformalDomain {
 public:
  explicit ConformalDomain(PowerSeries map, int samples = 4096);

  const PowerSeries& map() const { return map_; }
  const std::vector<Complex>& boundary() const { return boundary_; }
  int samples() const { return static_cast<int>(boundary_.size()); }
  double area() const { return area_; }
  double perimeter() const { return perimeter_; }

 private:
  PowerSeries map_;
  std::vector<Complex> boundary_;
  double area_;
  double perimeter_;
};

/// pi * sum n |c_n|^2, the area of the image counted by the coefficient
/// identity.  Requires F'(0) != 0.
double area(const PowerSeries& F);

/// Trapezoid rule for the boundary length integral of |F'| over the unit
/// circle.  Periodic trapezoid is spectrally accurate for maps whose
/// derivative is zero-free on the closed disk; maps with boundary corners
/// converge at second order in the sample count.
double perimeter(const PowerSeries& F, int samples = 4096);

/// Pull a symbol on the domain back to the disk: psi o F, recentered so the
/// constant term is exactly zero.
PowerSeries transport_symbol(const PowerSeries& psi_on_domain, const PowerSeries& F);

/// Pull a function on the domain back to the disk with the unitary weight:
///   g = (F')^{(2+alpha)/2} * (f o (F - F(0))),
/// where f is read as a series centered at F(0).  The exponent makes the
/// change of variables an isometry of the weighted spaces; alpha = 0 gives
/// the plain F' factor and alpha = -1 the square root.
/// `order` sets the truncation of the result (default: F.order() - 1).
PowerSeries transport_function(const PowerSeries& f_on_domain, const PowerSeries& F,
                               WeightParam alpha, int order = -1);

/// Squared weighted-space norm of the constant 1 transported to the disk,
/// i.e. of (F')^{(2+alpha)/2}.  The series is expanded to order 512; if the
/// trailing coefficients have not decayed below 1e-8 of the running sum the
/// transport is reported as non-convergent.  At alpha = -1 the value is the
/// boundary length divided by 2*pi; at alpha = 0 it is area/pi.
double norm_sq_of_one(const PowerSeries& F, WeightParam alpha);

namespace detail {
/// Shared expansion for norm_sq_of_one and the rigidity quotients:
/// (F')^{(2+alpha)/2} at the given order, with the trailing-decay check
/// applied when `check_tail` is set.
PowerSeries transported_one(const PowerSeries& F, WeightParam alpha, int order,
                            bool check_tail);
}  // namespace detail

}  // namespace bergman
