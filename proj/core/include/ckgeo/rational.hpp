#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "ckgeo/errors.hpp"

namespace ck {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin value wrapper over mpq_class; avoids gmpxx expression
/// templates leaking into generic code.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_((signed long)n) {}
  Rat(long long n) : v_(mpz_class(static_cast<long>(n))) {}  // LP64
  Rat(int n, int d) : v_(n, d) { v_.canonicalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  // parses "p", "p/q" or a decimal literal like "-1.25"
  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  double to_double() const { return v_.get_d(); }

  // exact square root when |*this| is a perfect square of a rational
  std::optional<Rat> sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(mpq_class(rn, rd));
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(errc::degenerate_input, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(errc::invalid_scene, "bad rational literal '" + s + "'");
    q.canonicalize();
    return Rat(q);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(errc::invalid_scene, "bad rational literal '" + s + "'");
    return Rat(q);
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  mpz_class n;
  if (n.set_str(digits, 10) != 0) fail(errc::invalid_scene, "bad decimal literal '" + s + "'");
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_len);
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

}  // namespace ck
