#pragma once

// Exact max-plus arithmetic over R_max = Q u {-inf}.
//
// Scalars are exact rationals (GMP) or epsilon. Every comparison downstream
// (strict vs. non-strict case splits, span membership) relies on exactness,
// so there is no floating point anywhere in this module.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpr {

using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of R_max: a rational number or epsilon (-inf).
class MpValue {
 public:
  MpValue() = default;
  MpValue(long v) : finite_(true), value_(v) {}
  MpValue(int v) : finite_(true), value_(v) {}
  MpValue(const Rational& v) : finite_(true), value_(v) { value_.canonicalize(); }

  static MpValue eps() { return {}; }
  static MpValue unit() { return MpValue(0); }

  bool is_eps() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// Throws DomainError on epsilon.
  const Rational& value() const;

  friend bool operator==(const MpValue& a, const MpValue& b);
  friend std::strong_ordering operator<=>(const MpValue& a, const MpValue& b);

 private:
  bool finite_ = false;
  Rational value_;
};

/// "-inf", an integer, or "p/q".
std::string to_string(const MpValue& v);
/// Accepts "-inf", "eps", integers, "p/q" and finite decimals ("1.25").
MpValue parse_value(std::string_view text);

MpValue mp_add(const MpValue& a, const MpValue& b);
MpValue mp_mul(const MpValue& a, const MpValue& b);
/// a - b for finite b; epsilon when a is epsilon.
MpValue mp_div(const MpValue& a, const MpValue& b);

class MpVector {
 public:
  MpVector() = default;
  explicit MpVector(std::size_t dim) : entries_(dim) {}
  MpVector(std::initializer_list<MpValue> init) : entries_(init) {}
  explicit MpVector(std::vector<MpValue> entries) : entries_(std::move(entries)) {}

  static MpVector epsilon(std::size_t dim) { return MpVector(dim); }
  static MpVector unit(std::size_t dim, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  MpValue& operator[](std::size_t i) { return entries_[i]; }
  const MpValue& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  void push_back(MpValue v) { entries_.push_back(std::move(v)); }
  const std::vector<MpValue>& entries() const { return entries_; }

  bool is_epsilon() const;

  friend bool operator==(const MpVector&, const MpVector&) = default;
  friend std::strong_ordering operator<=>(const MpVector& a, const MpVector& b);

 private:
  std::vector<MpValue> entries_;
};

std::string to_string(const MpVector& v);

/// Row-major max-plus matrix.
class MpMatrix {
 public:
  MpMatrix() = default;
  MpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MpMatrix(std::initializer_list<std::initializer_list<MpValue>> init);

  static MpMatrix identity(std::size_t n);
  static MpMatrix from_rows(const std::vector<MpVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MpValue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MpValue& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  MpVector row(std::size_t i) const;
  MpVector col(std::size_t j) const;

  friend bool operator==(const MpMatrix&, const MpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MpValue> data_;
};

// Semimodule operations.
MpVector oplus(const MpVector& x, const MpVector& y);
MpVector scale(const MpValue& lambda, const MpVector& x);
/// Entry-wise x <= y.
bool preceq(const MpVector& x, const MpVector& y);

MpVector mat_apply(const MpMatrix& a, const MpVector& x);
/// Row vector times matrix: (c^T (x) A)_j = max_i c_i + A_ij.
MpVector row_apply(const MpVector& c, const MpMatrix& a);
MpMatrix mat_mul(const MpMatrix& a, const MpMatrix& b);
MpMatrix mat_power(const MpMatrix& a, unsigned exponent);
/// Horizontal concatenation [A | B].
MpMatrix hconcat(const MpMatrix& a, const MpMatrix& b);

/// (a|b) = max_i a_i + b_i.
MpValue scalar_product(const MpVector& a, const MpVector& b);

/// Indices (0-based) of finite entries.
std::vector<std::size_t> support(const MpVector& x);

/// Copy of x[first, first + count).
MpVector slice(const MpVector& x, std::size_t first, std::size_t count);
/// Sub-block of A with the given row and column ranges.
MpMatrix block(const MpMatrix& a, std::size_t row0, std::size_t nrows, std::size_t col0,
               std::size_t ncols);

/// Greatest lambda with lambda * w <= x.
///
/// Epsilon when some finite w_i meets x_i = epsilon. Throws DomainError when w
/// is the epsilon vector (every lambda fits, there is no greatest one).
MpValue residuation_coeff(const MpVector& x, const MpVector& w);

}  // namespace mpr
