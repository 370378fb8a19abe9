#include "polydag/trop.hpp"

#include <cctype>

namespace polydag {

const Rational& TropValue::value() const {
  if (!value_) throw std::logic_error("value() on INF");
  return *value_;
}

TropValue operator*(const TropValue& a, const TropValue& b) {
  if (a.is_inf() || b.is_inf()) return TropValue::inf();
  return TropValue(Rational(*a.value_ + *b.value_));
}

TropValue operator+(const TropValue& a, const TropValue& b) { return (a <= b) ? a : b; }

bool operator==(const TropValue& a, const TropValue& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() == b.is_inf();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropValue& a, const TropValue& b) {
  if (a.is_inf()) return b.is_inf() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_inf()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TropValue parse_trop(const std::string& text) {
  std::string lower;
  for (char ch : text) {
    if (ch != ' ') lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "∞") return TropValue::inf();
  try {
    return TropValue(parse_rational(text));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

std::string to_string(const TropValue& v) { return v.is_inf() ? "inf" : to_string(v.value()); }

TropMatrix::TropMatrix(int rows, int cols, std::vector<TropValue> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionMismatch("matrix entry count does not match its shape");
  }
}

TropMatrix::TropMatrix(int rows, int cols, TropValue fill)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, fill) {}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::identity(int n) {
  TropMatrix m(n, n, TropValue::inf());
  for (int i = 0; i < n; ++i) m.entries_[m.index(i, i)] = TropValue::zero();
  return m;
}

TropMatrix TropMatrix::with_entry(int i, int j, TropValue v) const {
  TropMatrix copy = *this;
  copy.entries_.at(index(i, j)) = std::move(v);
  return copy;
}

std::vector<TropValue> TropMatrix::column(int j) const {
  std::vector<TropValue> col;
  col.reserve(rows_);
  for (int i = 0; i < rows_; ++i) col.push_back((*this)(i, j));
  return col;
}

bool TropMatrix::is_doubly_r_astic() const {
  for (int i = 0; i < rows_; ++i) {
    bool any = false;
    for (int j = 0; j < cols_ && !any; ++j) any = (*this)(i, j).is_finite();
    if (!any) return false;
  }
  for (int j = 0; j < cols_; ++j) {
    bool any = false;
    for (int i = 0; i < rows_ && !any; ++i) any = (*this)(i, j).is_finite();
    if (!any) return false;
  }
  return true;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<TropValue> out;
  out.reserve(static_cast<std::size_t>(a.rows()) * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < b.cols(); ++k) {
      TropValue best = TropValue::inf();
      for (int j = 0; j < a.cols(); ++j) {
        const auto& x = a(i, j);
        const auto& y = b(j, k);
        if (x.is_inf() || y.is_inf()) continue;
        Rational s = x.value() + y.value();
        if (best.is_inf() || s < best.value()) best = TropValue(std::move(s));
      }
      out.push_back(std::move(best));
    }
  }
  return TropMatrix(a.rows(), b.cols(), std::move(out));
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_add: shapes differ");
  std::vector<TropValue> out;
  out.reserve(static_cast<std::size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.push_back(a(i, j) + b(i, j));
  }
  return TropMatrix(a.rows(), a.cols(), std::move(out));
}

std::vector<TropValue> mat_vec(const TropMatrix& a, const std::vector<TropValue>& x) {
  if (static_cast<int>(x.size()) != a.cols()) throw DimensionMismatch("mat_vec: vector length differs");
  std::vector<TropValue> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    TropValue best = TropValue::inf();
    for (int j = 0; j < a.cols(); ++j) best = best + a(i, j) * x[j];
    out[i] = best;
  }
  return out;
}

TropMatrix kleene_star(const TropMatrix& c) {
  if (!c.is_square()) throw DimensionMismatch("kleene_star: matrix is not square");
  const int n = c.rows();
  if (n == 0) return c;
  TropMatrix power = mat_add(TropMatrix::identity(n), c);
  // (I + C)^(2^k) covers all paths with at most 2^k edges.
  for (int covered = 1; covered < n - 1; covered *= 2) power = mat_mul(power, power);
  TropMatrix check = mat_mul(power, mat_add(TropMatrix::identity(n), c));
  for (int i = 0; i < n; ++i) {
    if (check(i, i) < TropValue::zero()) {
      throw NegativeCycle("kleene_star: negative cycle through node " + std::to_string(i + 1));
    }
  }
  if (check != power) throw NegativeCycle("kleene_star: series does not stabilise");
  return power;
}

bool is_kleene(const TropMatrix& c) {
  if (!c.is_square()) return false;
  const int n = c.rows();
  for (int i = 0; i < n; ++i) {
    if (c(i, i) != TropValue::zero()) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (c(i, k) * c(k, j) < c(i, j)) return false;
      }
    }
  }
  return mat_mul(c, c) == c;
}

bool entrywise_leq(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("entrywise_leq: shapes differ");
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) > b(i, j)) return false;
    }
  }
  return true;
}

}  // namespace polydag
