#include "paralg/eig.hpp"

#include <algorithm>
#include <cmath>

#include "paralg/errors.hpp"

namespace paralg {

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int n) {
  using C = std::complex<double>;
  if (n < 0 || std::size_t(n) * n != a.size())
    throw structural_error("hermitian_eigenvalues: bad dimensions");
  if (n == 0) return {};
  auto at = [&](int r, int c) -> C& { return a[std::size_t(r) * n + c]; };

  // Wash rounding asymmetry so the input is exactly Hermitian.
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      C v = 0.5 * (at(r, c) + std::conj(at(c, r)));
      at(r, c) = v;
      at(c, r) = std::conj(v);
    }
    at(r, r) = C(at(r, r).real(), 0.0);
  }

  double scale = 0.0;
  for (const auto& v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double stop = 1e-14 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double r = std::abs(at(p, q));
        if (r <= stop * 1e-2) continue;
        // Phase out A[p][q], then a real Jacobi rotation in the (p,q) plane.
        C e = at(p, q) / r;  // A[p][q] = r * e
        C ebar = std::conj(e);
        for (int j = 0; j < n; ++j) at(j, q) *= ebar;
        for (int j = 0; j < n; ++j) at(q, j) *= e;

        double app = at(p, p).real();
        double aqq = at(q, q).real();
        double apq = at(p, q).real();
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;

        for (int j = 0; j < n; ++j) {
          C ajp = at(j, p), ajq = at(j, q);
          at(j, p) = c * ajp - s * ajq;
          at(j, q) = s * ajp + c * ajq;
        }
        for (int j = 0; j < n; ++j) {
          C apj = at(p, j), aqj = at(q, j);
          at(p, j) = c * apj - s * aqj;
          at(q, j) = s * apj + c * aqj;
        }
        at(p, q) = at(q, p) = C(0.0, 0.0);
        at(p, p) = C(at(p, p).real(), 0.0);
        at(q, q) = C(at(q, q).real(), 0.0);
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = at(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace paralg
