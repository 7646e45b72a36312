#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mbposet {

using Integer = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix transposed() const;
  std::vector<Integer> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Integer>& values);
  IntegerMatrix columns(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation; row counts must agree.
  static IntegerMatrix hstack(const IntegerMatrix& left, const IntegerMatrix& right);

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& v);

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Integer determinant(const IntegerMatrix& a);

/// Rank over the rationals by fraction-free elimination. Independent of the
/// Smith normal form code path.
std::size_t rational_rank(const IntegerMatrix& a);

/// Converts to a native integer when it fits.
std::optional<long long> to_int64(const Integer& value);

}  // namespace mbposet
