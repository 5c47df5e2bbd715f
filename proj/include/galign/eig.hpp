#pragma once

#include <array>

#include "galign/errors.hpp"

namespace galign::eig {

// Symmetric 4x4 matrix; construction symmetrizes the input as (K + K^T)/2.
class Sym4 {
 public:
  constexpr Sym4() = default;

  explicit constexpr Sym4(const std::array<double, 16>& row_major) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        m_[static_cast<size_t>(4 * r + c)] =
            0.5 * (row_major[static_cast<size_t>(4 * r + c)] +
                   row_major[static_cast<size_t>(4 * c + r)]);
  }

  static constexpr Sym4 diagonal(const std::array<double, 4>& d) {
    Sym4 out;
    for (int i = 0; i < 4; ++i) out.m_[static_cast<size_t>(5 * i)] = d[i];
    return out;
  }

  constexpr double operator()(int r, int c) const { return m_[static_cast<size_t>(4 * r + c)]; }
  constexpr const std::array<double, 16>& data() const { return m_; }

  constexpr double trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }

 private:
  std::array<double, 16> m_{};
};

struct EigenDecomposition {
  std::array<double, 4> eigenvalues{};                   // sorted descending
  std::array<std::array<double, 4>, 4> eigenvectors{};   // eigenvectors[j] pairs eigenvalues[j]
  int sweeps_used = 0;
};

struct MaxEigenpair {
  double value = 0.0;
  std::array<double, 4> vector{};
  double gap = 0.0;  // value - second largest eigenvalue
};

// Cyclic-by-rows Jacobi. Sweeps until the largest off-diagonal magnitude is
// <= 1e-14 * max(1, max |diagonal|), up to 50 sweeps; non-finite input never
// converges and reports NoConvergence.
EigenDecomposition jacobi_eigen(const Sym4& k);

// Dominant eigenpair with the sign fixed so the first nonzero component of
// the eigenvector is positive.
MaxEigenpair max_eigenpair(const Sym4& k);

}  // namespace galign::eig
