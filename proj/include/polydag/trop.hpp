#pragma once

// Min-plus scalars and matrices.
//
// The semiring is (Q u {INF}, min, +): tropical addition is min, tropical
// multiplication is +, INF is the additive identity and absorbing for +.

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "polydag/errors.hpp"
#include "polydag/rational.hpp"

namespace polydag {

class TropValue {
 public:
  /// Defaults to INF, the neutral element of min.
  TropValue() = default;
  TropValue(Rational value) : value_(std::move(value)) { value_->canonicalize(); }  // NOLINT(google-explicit-constructor)
  TropValue(long value) : value_(Rational(value)) {}      // NOLINT(google-explicit-constructor)
  TropValue(int value) : value_(Rational(value)) {}       // NOLINT(google-explicit-constructor)

  static TropValue inf() { return TropValue(); }
  static TropValue zero() { return TropValue(0); }

  bool is_inf() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Precondition: is_finite().
  const Rational& value() const;

  /// Tropical multiplication (ordinary +).
  friend TropValue operator*(const TropValue& a, const TropValue& b);
  /// Tropical addition (min).
  friend TropValue operator+(const TropValue& a, const TropValue& b);

  friend bool operator==(const TropValue& a, const TropValue& b);
  /// INF compares greater than every finite value.
  friend std::strong_ordering operator<=>(const TropValue& a, const TropValue& b);

 private:
  std::optional<Rational> value_;
};

TropValue parse_trop(const std::string& text);
std::string to_string(const TropValue& v);

/// Dense rows x cols grid of TropValue. Immutable after construction.
class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(int rows, int cols, std::vector<TropValue> entries);
  TropMatrix(int rows, int cols, TropValue fill);
  TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows);

  /// Tropical identity: 0 on the diagonal, INF elsewhere.
  static TropMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  /// Zero-based entry access.
  const TropValue& operator()(int i, int j) const { return entries_[index(i, j)]; }
  TropMatrix with_entry(int i, int j, TropValue v) const;

  /// Column j as a point of the configuration.
  std::vector<TropValue> column(int j) const;

  /// Every row and every column holds a finite entry.
  bool is_doubly_r_astic() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<TropValue> entries_;
};

/// result(i,k) = min_j A(i,j) + B(j,k). Throws DimensionMismatch.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

/// Entrywise min.
TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);

/// Matrix-vector product in min-plus arithmetic.
std::vector<TropValue> mat_vec(const TropMatrix& a, const std::vector<TropValue>& x);

/// Kleene star (I + C)^(n-1) by repeated squaring. Throws NegativeCycle when
/// one further product would still lower a diagonal entry below zero.
TropMatrix kleene_star(const TropMatrix& c);

/// Zero diagonal, triangle inequality on all triples, and C*C = C.
bool is_kleene(const TropMatrix& c);

/// Entry (i,j) <= entry (i,j) of the other matrix, for all i,j.
bool entrywise_leq(const TropMatrix& a, const TropMatrix& b);

}  // namespace polydag
