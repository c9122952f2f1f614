#include "wn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace wn {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(long c, unsigned degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(v));
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + Rational(c_[k]);
  acc.canonicalize();
  return acc;
}

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + static_cast<long double>(c_[k].get_d());
  return acc;
}

bool IntPolynomial::palindromic() const {
  return std::equal(c_.begin(), c_.end(), c_.rbegin());
}

BigInt IntPolynomial::coefficient_sum() const {
  BigInt s = 0;
  for (const BigInt& v : c_) s += v;
  return s;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] += o.c_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] -= o.c_[k];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial out{1};
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? "," : "") << c_[k].get_str();
  os << ']';
  return os.str();
}

}  // namespace wn
