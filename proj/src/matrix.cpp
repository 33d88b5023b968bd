#include "ohg/matrix.hpp"

#include <unordered_set>

namespace ohg {

namespace {

void require_distinct(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw ArgumentError(std::string("duplicate ") + what + " label '" + l + "'");
    }
  }
}

void require_same_labels(const LabeledMatrix& a, const LabeledMatrix& b, const char* op) {
  if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels()) {
    throw ArgumentError(std::string("matrix ") + op + ": operand labels differ");
  }
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in matrix sum");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in matrix product");
  return r;
}

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  require_distinct(row_labels_, "row");
  require_distinct(col_labels_, "column");
  entries_.assign(row_labels_.size() * col_labels_.size(), 0);
}

LabeledMatrix LabeledMatrix::identity(std::vector<std::string> labels) {
  LabeledMatrix m(labels, labels);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1;
  return m;
}

LabeledMatrix LabeledMatrix::diagonal(std::vector<std::string> labels,
                                      std::span<const std::int64_t> values) {
  if (values.size() != labels.size()) {
    throw ArgumentError("diagonal: value count does not match label count");
  }
  LabeledMatrix m(labels, labels);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = values[i];
  return m;
}

std::int64_t LabeledMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw ArgumentError("matrix index out of range");
  return (*this)(r, c);
}

void LabeledMatrix::add_to(std::size_t r, std::size_t c, std::int64_t delta) {
  auto& x = (*this)(r, c);
  x = checked_add(x, delta);
}

LabeledMatrix LabeledMatrix::transposed() const {
  LabeledMatrix t(col_labels_, row_labels_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
  return t;
}

LabeledMatrix operator+(const LabeledMatrix& a, const LabeledMatrix& b) {
  require_same_labels(a, b, "sum");
  LabeledMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.add_to(r, c, b(r, c));
  return out;
}

LabeledMatrix operator-(const LabeledMatrix& a) {
  return -1 * a;
}

LabeledMatrix operator-(const LabeledMatrix& a, const LabeledMatrix& b) {
  require_same_labels(a, b, "difference");
  return a + (-b);
}

LabeledMatrix operator*(std::int64_t k, const LabeledMatrix& a) {
  LabeledMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_mul(k, a(r, c));
  return out;
}

LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.col_labels() != b.row_labels()) {
    throw ArgumentError("matrix product: inner labels differ");
  }
  LabeledMatrix out(a.row_labels(), b.col_labels());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out.add_to(r, c, checked_mul(x, b(k, c)));
    }
  }
  return out;
}

LabeledMatrix power(const LabeledMatrix& a, unsigned k) {
  if (a.row_labels() != a.col_labels()) {
    throw ArgumentError("matrix power needs matching row and column labels");
  }
  LabeledMatrix out = LabeledMatrix::identity(a.row_labels());
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

std::optional<MatrixDifference> first_difference(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.row_labels() != b.row_labels()) return MatrixDifference{"row labels differ", {}, {}};
  if (a.col_labels() != b.col_labels()) return MatrixDifference{"column labels differ", {}, {}};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) {
        return MatrixDifference{"entry (" + a.row_labels()[r] + ", " + a.col_labels()[c] +
                                    "): " + std::to_string(a(r, c)) + " vs " +
                                    std::to_string(b(r, c)),
                                r, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ohg
