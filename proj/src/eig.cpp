#include "galign/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace galign::eig {

namespace {

constexpr int kMaxSweeps = 50;

double max_off_diagonal(const std::array<std::array<double, 4>, 4>& a) {
  double off = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(a[p][q]));
  return off;
}

bool all_finite(const std::array<std::array<double, 4>, 4>& a) {
  for (const auto& row : a)
    for (const double x : row)
      if (!std::isfinite(x)) return false;
  return true;
}

double max_abs_diagonal(const std::array<std::array<double, 4>, 4>& a) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i][i]));
  return d;
}

}  // namespace

EigenDecomposition jacobi_eigen(const Sym4& k) {
  std::array<std::array<double, 4>, 4> a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a[r][c] = k(r, c);

  std::array<std::array<double, 4>, 4> v{};  // v[row][col], columns are eigenvectors
  for (int i = 0; i < 4; ++i) v[i][i] = 1.0;

  int sweeps = 0;
  bool converged = false;
  while (sweeps < kMaxSweeps) {
    const double threshold = 1e-14 * std::max(1.0, max_abs_diagonal(a));
    if (all_finite(a) && max_off_diagonal(a) <= threshold) {
      converged = true;
      break;
    }
    ++sweeps;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a[p][q];
        if (!(std::abs(apq) > 0.0)) continue;  // also skips NaN
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e12) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a[p][p];
        const double aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int r = 0; r < 4; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
        for (int r = 0; r < 4; ++r) {
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  if (!converged)
    throw NoConvergence("jacobi sweep limit reached; input is likely not finite");

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] > a[j][j]; });

  EigenDecomposition out;
  out.sweeps_used = sweeps;
  for (int j = 0; j < 4; ++j) {
    const int src = order[j];
    out.eigenvalues[j] = a[src][src];
    double n2 = 0.0;
    for (int r = 0; r < 4; ++r) n2 += v[r][src] * v[r][src];
    const double inv = 1.0 / std::sqrt(n2);
    for (int r = 0; r < 4; ++r) out.eigenvectors[j][r] = v[r][src] * inv;
  }
  return out;
}

MaxEigenpair max_eigenpair(const Sym4& k) {
  const EigenDecomposition d = jacobi_eigen(k);
  MaxEigenpair out;
  out.value = d.eigenvalues[0];
  out.vector = d.eigenvectors[0];
  out.gap = d.eigenvalues[0] - d.eigenvalues[1];
  for (int i = 0; i < 4; ++i) {
    if (out.vector[i] == 0.0) continue;
    if (out.vector[i] < 0.0)
      for (double& x : out.vector) x = -x;
    break;
  }
  return out;
}

}  // namespace galign::eig
