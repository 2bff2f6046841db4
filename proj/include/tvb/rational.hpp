#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tvb {

// Malformed input: bad documents, dimension mismatches, invalid parameters.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational scalar. Stored in lowest terms with a positive denominator;
// every operation is exact, there is no floating point anywhere downstream.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(int num, int den) : Rational(mpz_class(num), mpz_class(den)) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : q_(n) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "p" or "p/q" with q > 0 (decimal digits, optional leading sign on
  // p only). Anything else, including "3/0", yields nullopt.
  static std::optional<Rational> parse(std::string_view s);

  // "p" or "p/q", lowest terms, q omitted when 1.
  std::string str() const { return q_.get_str(); }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  Rational abs() const { return raw(::abs(q_)); }
  Rational squared() const { return raw(q_ * q_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return raw(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return raw(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return raw(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return raw(a.q_ / b.q_);
  }
  Rational operator-() const { return raw(-q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  // Results of mpq_class arithmetic on canonical operands are canonical.
  static Rational raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

using Vec = std::vector<Rational>;

}  // namespace tvb
