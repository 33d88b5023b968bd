#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ohg/error.hpp"

namespace ohg {

// Dense exact integer matrix with labeled rows and columns. All arithmetic is
// checked; overflow throws OverflowError instead of wrapping.
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  // Zero matrix. Labels within rows (and within cols) must be distinct.
  LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  static LabeledMatrix identity(std::vector<std::string> labels);
  static LabeledMatrix diagonal(std::vector<std::string> labels,
                                std::span<const std::int64_t> values);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const;

  // Checked entries(r, c) += delta.
  void add_to(std::size_t r, std::size_t c, std::int64_t delta);

  const std::vector<std::int64_t>& entries() const { return entries_; }

  LabeledMatrix transposed() const;

  friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::int64_t> entries_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Operands must agree on labels: same row and column labels for +/-, and
// lhs.col_labels() == rhs.row_labels() for products. ArgumentError otherwise.
LabeledMatrix operator+(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix operator-(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix operator-(const LabeledMatrix& a);
LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix operator*(std::int64_t k, const LabeledMatrix& a);

// a^k by repeated multiplication; a must be square with row labels equal to
// column labels.
LabeledMatrix power(const LabeledMatrix& a, unsigned k);

struct MatrixDifference {
  std::string description;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
};

// First discrepancy between a and b (labels, shape, then row-major entries),
// or nullopt when they are equal.
std::optional<MatrixDifference> first_difference(const LabeledMatrix& a, const LabeledMatrix& b);

}  // namespace ohg
