#include "flatspan/linalg.hpp"

namespace flatspan {

int rref(Matrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(rank, pivot);
    if (m.at(rank, col) != 1) {
      Rational inv = 1 / m.at(rank, col);
      for (int c = col; c < cols; ++c) m.at(rank, c) *= inv;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col);
      for (int c = col; c < cols; ++c) m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  m.truncate_rows(rank);
  return rank;
}

std::vector<int> pivot_columns(const Matrix& m) {
  std::vector<int> pivots;
  pivots.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = r == 0 ? 0 : pivots.back() + 1; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

Matrix kernel(const Matrix& m) {
  const int cols = m.cols();
  const std::vector<int> pivots = pivot_columns(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Matrix out(cols);
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(j)] = 1;
    for (int r = 0; r < m.rows(); ++r) {
      v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = -m.at(r, j);
    }
    out.append_row(v);
  }
  rref(out);
  return out;
}

int compare(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      int cmp = compare(a.at(r, c), b.at(r, c));
      if (cmp != 0) return cmp;
    }
  }
  return 0;
}

std::size_t hash_matrix(const Matrix& m) {
  std::size_t h = detail::hash_combine(static_cast<std::size_t>(m.rows()),
                                       static_cast<std::size_t>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      h = detail::hash_combine(h, hash_rational(m.at(r, c)));
    }
  }
  return h;
}

}  // namespace flatspan
