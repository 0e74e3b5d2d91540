#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "stringy/qlinalg.hpp"

namespace testing_support {

using stringy::qlinalg::Matrix;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(STRINGY_TEST_FIXTURE_DIR) / name;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Integer entries only (test inputs are built that way).
inline std::vector<std::vector<long long>> to_ints(const Matrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num().get_si();
  return out;
}

/// Exact rationals into the oracle's fraction type (small entries only).
inline oracle::FMat to_fmat(const Matrix& m) {
  oracle::FMat out = oracle::fmat(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = oracle::Frac(static_cast<oracle::i128>(m(i, j).get_num().get_si()),
                               static_cast<oracle::i128>(m(i, j).get_den().get_si()));
  return out;
}

}  // namespace testing_support
