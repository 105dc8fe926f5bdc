#include "bergman/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

void require_symbol(const PowerSeries& psi) {
  if (psi.coeff(0) != 0.0)
    throw std::invalid_argument("symbol must have zero constant term; recenter it first");
}

// Eigenvalues of the symmetric tridiagonal (diag a, offdiag b) strictly below x,
// counted by the signs of the LDL^T pivots.
int sturm_count_below(const std::vector<double>& a, const std::vector<double>& b, double x) {
  int count = 0;
  double d = 1.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double off2 = i ? b[i - 1] * b[i - 1] : 0.0;
    d = (a[i] - x) - off2 / d;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

double tridiag_max_eigenvalue(const std::vector<double>& a, const std::vector<double>& b) {
  const int m = static_cast<int>(a.size());
  double lo = a[0], hi = a[0];
  for (int i = 0; i < m; ++i) {
    const double r = (i ? std::abs(b[i - 1]) : 0.0) + (i + 1 < m ? std::abs(b[i]) : 0.0);
    lo = std::min(lo, a[i] - r);
    hi = std::max(hi, a[i] + r);
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max({1.0, std::abs(lo), std::abs(hi)});
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count_below(a, b, mid) >= m)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Partial-pivoted solve of (T - sigma I) y = rhs for symmetric tridiagonal T.
// Near-singular pivots are clamped; inverse iteration only needs direction.
std::vector<double> shifted_tridiag_solve(const std::vector<double>& a,
                                          const std::vector<double>& b, double sigma,
                                          std::vector<double> r) {
  const int m = static_cast<int>(a.size());
  std::vector<double> d(m), e(m, 0.0), f(m, 0.0);
  for (int i = 0; i < m; ++i) d[i] = a[i] - sigma;
  for (int i = 0; i + 1 < m; ++i) e[i] = b[i];
  for (int i = 0; i + 1 < m; ++i) {
    double c = b[i];  // entry (i+1, i)
    if (std::abs(d[i]) < std::abs(c)) {
      std::swap(d[i], c);
      std::swap(e[i], d[i + 1]);
      std::swap(f[i], e[i + 1]);
      std::swap(r[i], r[i + 1]);
    }
    if (d[i] == 0.0) d[i] = 1e-300;
    const double l = c / d[i];
    d[i + 1] -= l * e[i];
    e[i + 1] -= l * f[i];
    r[i + 1] -= l * r[i];
  }
  std::vector<double> y(m);
  for (int i = m - 1; i >= 0; --i) {
    double s = r[i];
    if (i + 1 < m) s -= e[i] * y[i + 1];
    if (i + 2 < m) s -= f[i] * y[i + 2];
    if (d[i] == 0.0) d[i] = 1e-300;
    y[i] = s / d[i];
  }
  return y;
}

std::vector<double> tridiag_top_eigenvector(const std::vector<double>& a,
                                            const std::vector<double>& b, double lambda) {
  const int m = static_cast<int>(a.size());
  const double sigma = lambda + std::max(std::abs(lambda), 1.0) * 1e-13;
  std::vector<double> y(m, 1.0 / std::sqrt(static_cast<double>(m)));
  for (int pass = 0; pass < 2; ++pass) {
    y = shifted_tridiag_solve(a, b, sigma, std::move(y));
    double n = 0.0;
    for (double c : y) n += c * c;
    n = std::sqrt(n);
    if (n == 0.0 || !std::isfinite(n)) {
      std::fill(y.begin(), y.end(), 1.0 / std::sqrt(static_cast<double>(m)));
      break;
    }
    for (double& c : y) c /= n;
  }
  return y;
}

using Vec = std::vector<Complex>;

Complex dot(const Vec& u, const Vec& w) {
  Complex s = 0.0;
  for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * w[i];
  return s;
}

double norm2(const Vec& u) { return std::sqrt(std::abs(dot(u, u).real())); }

void matvec(const std::vector<Complex>& mat, int dim, const Vec& v, Vec& out) {
  for (int m = 0; m < dim; ++m) {
    Complex s = 0.0;
    const Complex* row = &mat[static_cast<size_t>(m) * dim];
    for (int n = 0; n < dim; ++n) s += row[n] * v[static_cast<size_t>(n)];
    out[static_cast<size_t>(m)] = s;
  }
}

}  // namespace

double projection_coefficient(int k, int n, WeightParam alpha) {
  if (k < 0 || n < 0) throw std::invalid_argument("projection_coefficient: negative index");
  if (k > n) return 0.0;
  double r = 1.0;
  for (int j = n - k + 1; j <= n; ++j) r *= static_cast<double>(j) / (j + alpha.value() + 1.0);
  return r;
}

double hankel_norm_sq(const PowerSeries& f, const PowerSeries& psi, WeightParam alpha) {
  require_symbol(psi);
  const int N = f.order();
  const int K = psi.order();
  const std::vector<double> D = monomial_norm_values(alpha.value(), 2 * std::max(N, K) + K);

  Complex acc = 0.0;
  // (I): the anti-analytic part that survives the projection.
  for (int k = 1; k <= K; ++k) {
    const int top = std::min(N, K - k);
    for (int n = 0; n <= top; ++n)
      for (int m = 0; m <= top; ++m)
        acc += f.coeff(n) * std::conj(f.coeff(m)) * psi.coeff(k + m) *
               std::conj(psi.coeff(k + n)) * D[static_cast<size_t>(n + m + k)];
  }
  // (II): the analytic remainder; the bracket vanishes identically at alpha = -1.
  for (int k = 0; k <= N - 1; ++k) {
    const int hi = std::min(N, k + K);
    for (int n = k + 1; n <= hi; ++n)
      for (int m = k + 1; m <= hi; ++m) {
        const double bracket =
            D[static_cast<size_t>(n + m - k)] -
            D[static_cast<size_t>(n)] * D[static_cast<size_t>(m)] / D[static_cast<size_t>(k)];
        acc += f.coeff(n) * std::conj(f.coeff(m)) * psi.coeff(m - k) *
               std::conj(psi.coeff(n - k)) * bracket;
      }
  }
  return acc.real();
}

HankelForm build_form(const PowerSeries& psi, WeightParam alpha, int dim) {
  require_symbol(psi);
  if (dim < 1) throw std::invalid_argument("build_form: dim must be positive");
  const int K = psi.order();
  const std::vector<double> D = monomial_norm_values(alpha.value(), 2 * (dim - 1) + K + 1);

  std::vector<Complex> mat(static_cast<size_t>(dim) * dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      Complex s = 0.0;
      const int kmax = K - std::max(m, n);
      for (int k = 1; k <= kmax; ++k)
        s += psi.coeff(k + m) * std::conj(psi.coeff(k + n)) * D[static_cast<size_t>(n + m + k)];
      const int klo = std::max(0, std::max(m, n) - K);
      for (int k = klo; k <= std::min(m, n) - 1; ++k) {
        const double bracket =
            D[static_cast<size_t>(n + m - k)] -
            D[static_cast<size_t>(n)] * D[static_cast<size_t>(m)] / D[static_cast<size_t>(k)];
        s += psi.coeff(m - k) * std::conj(psi.coeff(n - k)) * bracket;
      }
      mat[static_cast<size_t>(m) * dim + n] = s;
    }
  }
  return HankelForm{psi, alpha, dim, std::move(mat)};
}

double operator_norm_sq(const HankelForm& form) {
  const int dim = form.dim;
  const std::vector<double> D = monomial_norm_values(form.alpha.value(), dim - 1);
  std::vector<double> rs(static_cast<size_t>(dim));
  for (int n = 0; n < dim; ++n) rs[static_cast<size_t>(n)] = 1.0 / std::sqrt(D[static_cast<size_t>(n)]);

  // Rayleigh quotient against the monomial norms becomes a plain Hermitian
  // eigenproblem for Mt[m][n] = M[m][n] / sqrt(D_m D_n).
  std::vector<Complex> mt(static_cast<size_t>(dim) * dim);
  double scale = 0.0;
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n) {
      const Complex v = form.at(m, n) * rs[static_cast<size_t>(m)] * rs[static_cast<size_t>(n)];
      mt[static_cast<size_t>(m) * dim + n] = v;
      scale = std::max(scale, std::abs(v));
    }
  if (scale == 0.0) return 0.0;

  // Lanczos with full reorthogonalization from the all-ones direction; the
  // basis is complete after at most dim steps, so the cap never binds before
  // the Krylov space is exhausted.
  constexpr long kIterationCap = 100000;
  const int max_steps = static_cast<int>(std::min<long>(dim, kIterationCap));
  std::vector<Vec> basis;
  std::vector<double> adiag, bsub;
  Vec v(static_cast<size_t>(dim), Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  basis.push_back(v);
  Vec w(static_cast<size_t>(dim));
  for (int j = 0; j < max_steps; ++j) {
    matvec(mt, dim, basis.back(), w);
    const double aj = dot(basis.back(), w).real();
    adiag.push_back(aj);
    for (size_t i = 0; i < basis[0].size(); ++i) {
      w[i] -= aj * basis.back()[i];
      if (j > 0) w[i] -= bsub.back() * basis[static_cast<size_t>(j - 1)][i];
    }
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& u : basis) {
        const Complex c = dot(u, w);
        for (size_t i = 0; i < w.size(); ++i) w[i] -= c * u[i];
      }
    const double beta = norm2(w);
    if (j + 1 == max_steps || beta <= 1e-14 * scale) break;
    bsub.push_back(beta);
    Vec next(w);
    for (Complex& c : next) c /= beta;
    basis.push_back(std::move(next));
  }

  const double lambda = tridiag_max_eigenvalue(adiag, bsub);
  const std::vector<double> s = tridiag_top_eigenvector(adiag, bsub, lambda);
  Vec ritz(static_cast<size_t>(dim), 0.0);
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < ritz.size(); ++i) ritz[i] += s[j] * basis[j][i];
  const double rn = norm2(ritz);
  for (Complex& c : ritz) c /= rn;
  matvec(mt, dim, ritz, w);
  double resid = 0.0;
  for (size_t i = 0; i < w.size(); ++i) resid += std::norm(w[i] - lambda * ritz[i]);
  resid = std::sqrt(resid);
  if (!(resid <= 1e-10 * std::max(std::abs(lambda), scale)))
    throw NonConvergenceError("operator_norm_sq: eigen-iteration residual did not converge");
  return lambda;
}

double theorem_bound_sq(const PowerSeries& psi, WeightParam alpha) {
  return dirichlet_energy(psi) / (2.0 + alpha.value());
}

Complex evaluate_hankel(const PowerSeries& f, const PowerSeries& psi, WeightParam alpha,
                        Complex z) {
  require_symbol(psi);
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("evaluate_hankel: point must lie in the open unit disk");
  const int N = f.order();
  const int K = psi.order();
  const std::vector<double> D = monomial_norm_values(alpha.value(), N);

  Complex u = std::conj(evaluate(psi, z)) * evaluate(f, z);
  Complex zpow = 1.0;
  for (int k = 0; k <= N - 1; ++k) {
    Complex c = 0.0;
    const int hi = std::min(N, k + K);
    for (int n = k + 1; n <= hi; ++n)
      c += D[static_cast<size_t>(n)] / D[static_cast<size_t>(k)] * f.coeff(n) *
           std::conj(psi.coeff(n - k));
    u -= c * zpow;
    zpow *= z;
  }
  return u;
}

}  // namespace bergman
