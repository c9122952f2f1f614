#pragma once

#include "wn/arith.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace wn {

/// Polynomial with exact integer coefficients in ascending degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(long c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(unsigned k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  IntPolynomial derivative() const;
  Rational operator()(const Rational& x) const;
  long double evaluate(long double x) const;

  bool palindromic() const;
  BigInt coefficient_sum() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(unsigned e) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace wn
