#pragma once
#include <functional>
#include <limits>
#include <vector>

#include "nw/poly.hpp"

namespace nw {

// Norm exponent of the zero series.
inline constexpr i64 kNegInf = std::numeric_limits<i64>::min();

// Formal Laurent series in t^{-1}: sum_{i>=0} c_[i] * t^(h-i).
//
// The window c_ holds the certified coefficients; a series is either
//   - exact: all coefficients below the window are zero, or
//   - generator-backed: gen_(i) yields c_[i] on demand, or
//   - truncated: coefficients below the window are unknown and asking for
//     them raises precision_error.
// c_[0] is not required to be nonzero; norm_exp scans for the lead.
class LaurentSeries {
 public:
  using Generator = std::function<u32(u64)>;

  static LaurentSeries zero(u32 p) { return from_coeffs(p, 0, {}, true); }
  static LaurentSeries from_coeffs(u32 p, i64 h, std::vector<u32> c, bool exact = false);
  static LaurentSeries from_poly(const Poly& f);
  static LaurentSeries from_generator(u32 p, i64 h, Generator gen, u64 initial = 64);
  // Theta_S = sum s_i t^{-(i+1)} for a digit sequence s given by index.
  static LaurentSeries from_sequence(u32 p, Generator digits, u64 initial = 64) {
    return from_generator(p, -1, std::move(digits), initial);
  }

  u32 modulus() const { return p_; }
  i64 offset() const { return h_; }
  bool exact() const { return exact_; }
  bool extendable() const { return exact_ || bool(gen_); }
  // Number of certified coefficients currently materialized.
  u64 precision() const { return c_.size(); }

  // Extends the window to at least n coefficients (throws precision_error if
  // the series is truncated).
  void ensure(u64 n) const;
  u32 coeff(u64 i) const {
    ensure(i + 1);
    return c_[i];
  }
  // Coefficient of t^e; exponents above the window top are zero.
  u32 coeff_exp(i64 e) const { return e > h_ ? 0 : coeff(u64(h_ - e)); }
  // Certified coefficient count at exponents e, e-1, ... (huge if extendable).
  i64 available_below(i64 e) const;

  // Multiply by t^k.
  LaurentSeries shifted(i64 k) const;
  // Exponents >= 0 as a polynomial.
  Poly poly_part() const;
  // <Theta>: exponents <= -1 only.
  LaurentSeries frac() const;

  std::string str(u64 max_terms = 12) const;

 private:
  u32 p_ = 2;
  i64 h_ = 0;
  mutable std::vector<u32> c_;
  bool exact_ = false;
  Generator gen_;
};

// Norm exponent: deg in the |.| = q^deg sense; kNegInf for certified zero.
i64 norm_exp(const LaurentSeries& a);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b, u64 n_terms);
LaurentSeries mul_poly(const LaurentSeries& a, const Poly& f);
// 1/a to n_terms certified coefficients (a must have a certified lead).
LaurentSeries invert(const LaurentSeries& a, u64 n_terms);
// Theta(P) for Theta with offset <= -1 and deg P >= 1; n_terms certified.
LaurentSeries substitute(const LaurentSeries& theta, const Poly& P, u64 n_terms);

}  // namespace nw
