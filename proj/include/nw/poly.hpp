#pragma once
#include <string>
#include <utility>
#include <vector>

#include "nw/fp.hpp"

namespace nw {

// Dense polynomial over F_p, coefficients stored lowest degree first and
// trimmed so the highest entry is nonzero.  The zero polynomial has an empty
// coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(u32 p) : p_(p) { require_prime(p); }
  Poly(u32 p, std::vector<i64> coeffs);
  Poly(u32 p, std::vector<u32> coeffs);

  static Poly monomial(u32 p, int degree, u32 c = 1);
  // Accepts either a comma list "c0,c1,...,cd" (lowest degree first) or a
  // symbolic form like "t^3+2t+1"; see parse_poly in poly.cpp.
  static Poly parse(u32 p, const std::string& text);

  u32 modulus() const { return p_; }
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u32 coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : 0; }
  u32 lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<u32>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scale(u32 c) const;
  Poly shift(int k) const;  // multiply by t^k, k >= 0
  // Substitute `inner` for t.
  Poly compose(const Poly& inner) const;
  Poly derivative() const;
  Poly monic() const;

  // Human-readable canonical form, e.g. "t^3+2t+1" or "0".
  std::string str() const;
  // Comma form "c0,c1,...,cd".
  std::string csv() const;

 private:
  void trim();
  void check(const Poly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
  }
  std::vector<u32> c_;
  u32 p_;
};

// Quotient and remainder with deg(r) < deg(b); throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);
bool is_irreducible(const Poly& f);

}  // namespace nw
