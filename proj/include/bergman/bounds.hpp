#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bergman/conformal.hpp"
#include "bergman/hankel.hpp"

namespace bergman {

/// One row of the bound chain for a domain at a fixed weight:
///   lower_rigidity <= commutator_norm <= upper_sharp (<= upper_putnam at alpha = 0).
struct BoundReport {
  std::string domain_id;
  double alpha = 0.0;
  int dim = 0;

  double lower_rigidity = 0.0;          // rigidity Rayleigh quotient, in-span lower bound
  double commutator_norm = 0.0;         // compressed squared Hankel norm
  double upper_sharp = 0.0;             // energy of the transported symbol / (2+alpha)
  std::optional<double> upper_putnam;   // area/pi; coordinate symbol only
  std::optional<double> khavinson_lower;  // 4*area^2/perimeter^2; alpha = -1 only

  bool lower_le_commutator = false;
  bool commutator_le_sharp = false;
  std::optional<bool> sharp_le_putnam;  // alpha = 0 only

  bool chain_ok() const {
    return lower_le_commutator && commutator_le_sharp && sharp_le_putnam.value_or(true);
  }
};

/// Compressed squared norm of the Hankel operator on the domain, computed on
/// the disk side after transporting the symbol.
double commutator_norm_sq(const PowerSeries& F, const PowerSeries& psi_on_domain,
                          WeightParam alpha, int dim);

/// Squared Hankel image norm of the transported constant under the
/// transported coordinate symbol: the weighted torsional rigidity in
/// normalized units (multiply by pi for the physical value at alpha = 0).
double rigidity(const PowerSeries& F, WeightParam alpha);

/// rigidity / norm_sq_of_one: a lower bound for the squared Hankel norm.
double rigidity_lower_bound(const PowerSeries& F, WeightParam alpha);

/// 4*area^2/perimeter^2, the boundary-geometry lower bound (Hardy case).
double khavinson_lower_bound(const PowerSeries& F, int samples = 4096);

/// area/pi, the spectral-area upper bound for the coordinate symbol.
double putnam_bound(const PowerSeries& F);

/// (pi * rigidity(F, 0), area^2/(2*pi)): physical torsional rigidity and its
/// classical isoperimetric ceiling.
std::pair<double, double> st_venant_check(const PowerSeries& F);

/// Assemble the full chain at one weight.  The rigidity quotient is evaluated
/// on the transported constant truncated to degree < dim, which places the
/// Rayleigh vector inside the compression span and makes the left inequality
/// hold at finite dim, not just asymptotically.  Flags use an absolute
/// tolerance of 1e-7.
BoundReport full_report(const PowerSeries& F, const PowerSeries& psi_on_domain,
                        WeightParam alpha, int dim, const std::string& domain_id = "",
                        int samples = 4096);

}  // namespace bergman
