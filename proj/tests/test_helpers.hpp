#pragma once

// Shared test utilities. Oracles here stay independent of the library code
// paths they check: products and traces are expanded entrywise.

#include <complex>
#include <vector>

#include "offdiag/types.hpp"

namespace test_util {

using offdiag::Complex;
using offdiag::Matrix;

inline double cdist(Complex a, Complex b) { return std::abs(a - b); }

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Entrywise matrix product, no library product path.
inline Matrix product_oracle(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows();
  Matrix out = Matrix::Zero(n, b.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline Complex trace_oracle(const std::vector<Matrix>& factors) {
  Matrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = product_oracle(acc, factors[i]);
  Complex trace(0.0, 0.0);
  for (Eigen::Index i = 0; i < acc.rows(); ++i) trace += acc(i, i);
  return trace;
}

// Composite Simpson rule on [0, s_end].
template <typename F>
double simpson(F f, double s_end, int intervals) {
  const double h = s_end / intervals;
  double total = f(0.0) + f(s_end);
  for (int i = 1; i < intervals; ++i)
    total += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return total * h / 3.0;
}

}  // namespace test_util
