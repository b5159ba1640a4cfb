#pragma once

#include <map>
#include <string>
#include <vector>

#include "flopwall/rational.hpp"

namespace flopwall::numkernel {

using Exponent = std::vector<int>;

/// Graded lexicographic order on exponent vectors.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in a fixed number of variables with Rational coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  /// Linear form sum_i coeffs[i] * v_i + c.
  static MultiPoly linear(const std::vector<Rational>& coeffs, const Rational& c = Rational(0));

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  /// Sum of all terms of total degree d.
  MultiPoly homogeneous_part(int d) const;
  /// Drop all terms of total degree > d.
  MultiPoly truncated(int d) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Product truncated at total degree `max_degree` (series arithmetic).
  static MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree);

  std::string str() const;

 private:
  int nvars_;
  Terms terms_;
};

}  // namespace flopwall::numkernel
