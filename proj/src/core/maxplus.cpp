#include "maxplus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mpr {

const Rational& MpValue::value() const {
  if (!finite_) throw DomainError("value() called on epsilon");
  return value_;
}

bool operator==(const MpValue& a, const MpValue& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || cmp(a.value_, b.value_) == 0;
}

std::strong_ordering operator<=>(const MpValue& a, const MpValue& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const MpValue& v) {
  if (v.is_eps()) return "-inf";
  return v.value().get_str();
}

namespace {

bool parse_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

MpValue parse_value(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s == "-inf" || s == "eps" || s == "-Infinity") return MpValue::eps();
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s[0] == '+') s.erase(0, 1);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string_view num(s.data(), slash);
    std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    if (!parse_integer_text(num) || !parse_integer_text(den) || den[0] == '-')
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Rational r(std::string(num) + "/" + std::string(den), 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return MpValue(r);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!parse_integer_text(whole) || (!frac.empty() && !parse_integer_text(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class num(whole + frac, 10);
    Rational r(num, scale);
    r.canonicalize();
    if (neg) r = -r;
    return MpValue(r);
  }
  if (!parse_integer_text(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  return MpValue(Rational(mpz_class(s, 10)));
}

MpValue mp_add(const MpValue& a, const MpValue& b) { return a < b ? b : a; }

MpValue mp_mul(const MpValue& a, const MpValue& b) {
  if (a.is_eps() || b.is_eps()) return MpValue::eps();
  return MpValue(Rational(a.value() + b.value()));
}

MpValue mp_div(const MpValue& a, const MpValue& b) {
  if (b.is_eps()) throw DomainError("division by epsilon");
  if (a.is_eps()) return MpValue::eps();
  return MpValue(Rational(a.value() - b.value()));
}

MpVector MpVector::unit(std::size_t dim, std::size_t i) {
  MpVector v(dim);
  v[i] = MpValue(0);
  return v;
}

bool MpVector::is_epsilon() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const MpValue& v) { return v.is_eps(); });
}

std::strong_ordering operator<=>(const MpVector& a, const MpVector& b) {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

std::string to_string(const MpVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
  out << ')';
  return out.str();
}

MpMatrix::MpMatrix(std::initializer_list<std::initializer_list<MpValue>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MpMatrix MpMatrix::identity(std::size_t n) {
  MpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MpValue(0);
  return m;
}

MpMatrix MpMatrix::from_rows(const std::vector<MpVector>& rows, std::size_t cols) {
  MpMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MpVector MpMatrix::row(std::size_t i) const {
  return MpVector(std::vector<MpValue>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

MpVector MpMatrix::col(std::size_t j) const {
  MpVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

MpVector oplus(const MpVector& x, const MpVector& y) {
  if (x.size() != y.size()) throw DimensionError("oplus: dimension mismatch");
  MpVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mp_add(x[i], y[i]);
  return r;
}

MpVector scale(const MpValue& lambda, const MpVector& x) {
  MpVector r(x.size());
  if (lambda.is_eps()) return r;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = mp_mul(lambda, x[i]);
  return r;
}

bool preceq(const MpVector& x, const MpVector& y) {
  if (x.size() != y.size()) throw DimensionError("preceq: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

MpVector mat_apply(const MpMatrix& a, const MpVector& x) {
  if (a.cols() != x.size()) throw DimensionError("mat_apply: A.cols != x.dim");
  MpVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    MpValue acc;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = mp_add(acc, mp_mul(a(i, j), x[j]));
    r[i] = acc;
  }
  return r;
}

MpVector row_apply(const MpVector& c, const MpMatrix& a) {
  if (c.size() != a.rows()) throw DimensionError("row_apply: c.dim != A.rows");
  MpVector r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    MpValue acc;
    for (std::size_t i = 0; i < a.rows(); ++i) acc = mp_add(acc, mp_mul(c[i], a(i, j)));
    r[j] = acc;
  }
  return r;
}

MpMatrix mat_mul(const MpMatrix& a, const MpMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  MpMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      MpValue acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = mp_add(acc, mp_mul(a(i, k), b(k, j)));
      r(i, j) = acc;
    }
  return r;
}

MpMatrix mat_power(const MpMatrix& a, unsigned exponent) {
  if (a.rows() != a.cols()) throw DimensionError("mat_power: matrix is not square");
  MpMatrix result = MpMatrix::identity(a.rows());
  MpMatrix base = a;
  while (exponent) {
    if (exponent & 1u) result = mat_mul(result, base);
    exponent >>= 1;
    if (exponent) base = mat_mul(base, base);
  }
  return result;
}

MpMatrix hconcat(const MpMatrix& a, const MpMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
  MpMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

MpValue scalar_product(const MpVector& a, const MpVector& b) {
  if (a.size() != b.size()) throw DimensionError("scalar_product: dimension mismatch");
  MpValue acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_eps() || b[i].is_eps()) continue;
    Rational s = a[i].value() + b[i].value();
    if (acc.is_eps() || cmp(s, acc.value()) > 0) acc = MpValue(s);
  }
  return acc;
}

std::vector<std::size_t> support(const MpVector& x) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].is_finite()) s.push_back(i);
  return s;
}

MpVector slice(const MpVector& x, std::size_t first, std::size_t count) {
  if (first + count > x.size()) throw DimensionError("slice: range out of bounds");
  return MpVector(std::vector<MpValue>(x.begin() + static_cast<std::ptrdiff_t>(first),
                                       x.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

MpMatrix block(const MpMatrix& a, std::size_t row0, std::size_t nrows, std::size_t col0,
               std::size_t ncols) {
  if (row0 + nrows > a.rows() || col0 + ncols > a.cols())
    throw DimensionError("block: range out of bounds");
  MpMatrix r(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) r(i, j) = a(row0 + i, col0 + j);
  return r;
}

MpValue residuation_coeff(const MpVector& x, const MpVector& w) {
  if (x.size() != w.size()) throw DimensionError("residuation_coeff: dimension mismatch");
  bool any = false;
  Rational best;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_eps()) continue;
    if (x[i].is_eps()) return MpValue::eps();
    Rational d = x[i].value() - w[i].value();
    if (!any || cmp(d, best) < 0) best = d;
    any = true;
  }
  if (!any) throw DomainError("residuation_coeff: w is the epsilon vector");
  return MpValue(best);
}

}  // namespace mpr
