#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "ckgeo/quadext.hpp"
#include "ckgeo/rational.hpp"

namespace ck {

/// Module-wide relative tolerance of the float backend. All float predicates
/// compare after scaling homogeneous data to sup-norm 1, so this is a
/// scale-free threshold. Set once (CLI) before any parallel phase.
inline double& float_eps() {
  static double eps = 1e-9;
  return eps;
}

template <class S>
struct scal;

template <>
struct scal<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return std::abs(x) <= float_eps(); }
  static bool is_zero_at(double x, double scale) {
    return std::abs(x) <= float_eps() * std::max(std::abs(scale), 1.0e-300);
  }
  static int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
  static double abs(double x) { return std::abs(x); }
  static double from_rat(const Rat& r) { return r.to_double(); }
  static double to_double(double x) { return x; }
  static std::string str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
};

template <>
struct scal<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static bool is_zero_at(const Rat& x, const Rat&) { return x.is_zero(); }
  static int sign(const Rat& x) { return x.sign(); }
  static Rat abs(const Rat& x) { return x.abs(); }
  static Rat from_rat(const Rat& r) { return r; }
  static double to_double(const Rat& x) { return x.to_double(); }
  static std::string str(const Rat& x) { return x.str(); }
};

template <>
struct scal<QExt> {
  static constexpr bool exact = true;
  static bool is_zero(const QExt& x) { return x.is_zero(); }
  static bool is_zero_at(const QExt& x, const QExt&) { return x.is_zero(); }
  static int sign(const QExt& x) { return x.sign(); }
  static QExt abs(const QExt& x) { return x.abs(); }
  static QExt from_rat(const Rat& r) { return QExt(r); }
  static double to_double(const QExt& x) { return x.to_double(); }
  static std::string str(const QExt& x) { return x.str(); }
};

// scalar backends selectable at the CLI
struct rational_backend {
  using scalar = Rat;
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
};
struct float_backend {
  using scalar = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
};

}  // namespace ck
