#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "ckgeo/errors.hpp"
#include "ckgeo/rational.hpp"

namespace ck {

/// Element a + b*sqrt(k) of a real quadratic extension of the rationals,
/// with k >= 0 fixed per value. Perfect-square radicands are folded into the
/// rational part on construction, so k is never a rational square and
/// value == 0 iff a == b == 0. Mixing two values is allowed when either side
/// is rational or the radicands agree.
class QExt {
 public:
  QExt() : a_(0), b_(0), k_(0) {}
  QExt(int n) : a_(n), b_(0), k_(0) {}
  QExt(const Rat& a) : a_(a), b_(0), k_(0) {}
  QExt(Rat a, Rat b, Rat k) : a_(std::move(a)), b_(std::move(b)), k_(std::move(k)) { fold(); }

  static QExt sqrt_of(const Rat& k) {
    if (k.sign() < 0) fail(errc::parameter_out_of_range, "sqrt of negative rational");
    return QExt(Rat(0), Rat(1), k);
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& k() const { return k_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // a and b*sqrt(k) compete; k is not a square so equality cannot occur
    Rat a2 = a_ * a_, bk2 = b_ * b_ * k_;
    return a2 > bk2 ? a_.sign() : b_.sign();
  }

  QExt conj() const { return QExt(a_, -b_, k_); }
  QExt abs() const { return sign() >= 0 ? *this : -*this; }

  double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(k_.to_double()); }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + " + (" + b_.str() + ")*sqrt(" + k_.str() + ")";
  }

  QExt operator-() const { return QExt(-a_, -b_, k_); }

  QExt& operator+=(const QExt& o) {
    unify(o);
    a_ += o.a_;
    b_ += o.b_;
    fold();
    return *this;
  }
  QExt& operator-=(const QExt& o) { return *this += -o; }
  QExt& operator*=(const QExt& o) {
    unify(o);
    Rat na = a_ * o.a_ + b_ * o.b_ * k_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    fold();
    return *this;
  }
  QExt& operator/=(const QExt& o) {
    if (o.is_zero()) fail(errc::degenerate_input, "quadratic-extension division by zero");
    unify(o);
    Rat n = o.a_ * o.a_ - o.b_ * o.b_ * k_;  // nonzero: k not a square
    QExt r = *this;
    r *= o.conj();
    a_ = r.a_ / n;
    b_ = r.b_ / n;
    fold();
    return *this;
  }

  friend QExt operator+(QExt a, const QExt& b) { return a += b; }
  friend QExt operator-(QExt a, const QExt& b) { return a -= b; }
  friend QExt operator*(QExt a, const QExt& b) { return a *= b; }
  friend QExt operator/(QExt a, const QExt& b) { return a /= b; }
  friend bool operator==(const QExt& x, const QExt& y) { return (x - y).is_zero(); }
  friend bool operator!=(const QExt& x, const QExt& y) { return !(x == y); }
  friend bool operator<(const QExt& x, const QExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QExt& x, const QExt& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QExt& x, const QExt& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QExt& x, const QExt& y) { return (x - y).sign() >= 0; }

 private:
  void fold() {
    if (b_.is_zero()) {
      k_ = Rat(0);
      return;
    }
    if (k_.is_zero()) {
      b_ = Rat(0);
      return;
    }
    if (auto r = k_.sqrt_exact()) {
      a_ += b_ * *r;
      b_ = Rat(0);
      k_ = Rat(0);
    }
  }
  // adopt a common radicand; throws on a genuine mismatch
  void unify(const QExt& o) {
    if (b_.is_zero()) {
      k_ = o.k_;
      return;
    }
    if (o.b_.is_zero() || k_ == o.k_) return;
    fail(errc::radicand_mismatch, "sqrt(" + k_.str() + ") vs sqrt(" + o.k_.str() + ")");
  }

  Rat a_, b_, k_;
};

}  // namespace ck
