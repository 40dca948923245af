#include "ppart/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ppart {

int matrix_rank(Matrix a) {
  if (a.empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  for (auto& r : a)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

LinearSolver::LinearSolver(Matrix a) : n_(static_cast<int>(a.size())), lu_(std::move(a)) {
  for (auto& r : lu_)
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("matrix must be square");
  perm_.resize(n_);
  for (int i = 0; i < n_; ++i) perm_[i] = i;
  for (int k = 0; k < n_; ++k) {
    int pivot = -1;
    for (int r = k; r < n_; ++r)
      if (lu_[r][k] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("singular matrix");
    std::swap(lu_[k], lu_[pivot]);
    std::swap(perm_[k], perm_[pivot]);
    for (int r = k + 1; r < n_; ++r) {
      if (lu_[r][k] == 0) continue;
      Rational f = lu_[r][k] / lu_[k][k];
      lu_[r][k] = f;
      for (int c = k + 1; c < n_; ++c) lu_[r][c] -= f * lu_[k][c];
    }
  }
}

std::vector<Rational> LinearSolver::solve(std::vector<Rational> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) throw std::invalid_argument("rhs dimension mismatch");
  std::vector<Rational> y(n_);
  for (int i = 0; i < n_; ++i) y[i] = rhs[perm_[i]];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j) y[i] -= lu_[i][j] * y[j];
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) y[i] -= lu_[i][j] * y[j];
    y[i] /= lu_[i][i];
  }
  return y;
}

}  // namespace ppart
