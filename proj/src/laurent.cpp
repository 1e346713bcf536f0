#include "nw/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace nw {

LaurentSeries LaurentSeries::from_coeffs(u32 p, i64 h, std::vector<u32> c, bool exact) {
  require_prime(p);
  LaurentSeries s;
  s.p_ = p;
  s.h_ = h;
  s.c_ = std::move(c);
  for (u32& v : s.c_) v %= p;
  s.exact_ = exact;
  return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& f) {
  if (f.is_zero()) return zero(f.modulus());
  std::vector<u32> c(f.coeffs().rbegin(), f.coeffs().rend());
  return from_coeffs(f.modulus(), f.deg(), std::move(c), true);
}

LaurentSeries LaurentSeries::from_generator(u32 p, i64 h, Generator gen, u64 initial) {
  require_prime(p);
  LaurentSeries s;
  s.p_ = p;
  s.h_ = h;
  s.gen_ = std::move(gen);
  s.exact_ = false;
  s.ensure(initial);
  return s;
}

void LaurentSeries::ensure(u64 n) const {
  if (c_.size() >= n) return;
  if (gen_) {
    u64 from = c_.size();
    c_.resize(n);
    for (u64 i = from; i < n; ++i) c_[i] = gen_(i) % p_;
    return;
  }
  if (exact_) {
    c_.resize(n, 0);
    return;
  }
  throw precision_error("series certified to " + std::to_string(c_.size()) +
                        " coefficients, need " + std::to_string(n));
}

i64 LaurentSeries::available_below(i64 e) const {
  if (extendable()) return std::numeric_limits<i64>::max();
  if (e > h_) return 0;
  return std::max<i64>(0, i64(c_.size()) - (h_ - e));
}

LaurentSeries LaurentSeries::shifted(i64 k) const {
  LaurentSeries s = *this;
  s.h_ += k;
  return s;
}

Poly LaurentSeries::poly_part() const {
  if (h_ < 0) return Poly(p_);
  ensure(u64(h_) + 1);
  std::vector<u32> c(u64(h_) + 1, 0);
  for (i64 e = 0; e <= h_; ++e) c[u64(e)] = c_[u64(h_ - e)];
  return Poly(p_, c);
}

LaurentSeries LaurentSeries::frac() const {
  if (h_ < 0) return *this;
  u64 drop = u64(h_) + 1;
  LaurentSeries s = *this;
  s.h_ = -1;
  s.ensure(drop);
  s.c_.erase(s.c_.begin(), s.c_.begin() + i64(drop));
  if (s.gen_) {
    Generator base = s.gen_;
    s.gen_ = [base, drop](u64 i) { return base(i + drop); };
  }
  return s;
}

std::string LaurentSeries::str(u64 max_terms) const {
  std::ostringstream os;
  bool any = false;
  for (u64 i = 0; i < c_.size() && i < max_terms + 16; ++i) {
    if (c_[i] == 0) continue;
    i64 e = h_ - i64(i);
    if (any) os << "+";
    if (c_[i] != 1 || e == 0) os << c_[i];
    if (e != 0) {
      if (c_[i] != 1) os << "*";
      os << "t^" << e;
    }
    any = true;
    if (--max_terms == 0) {
      os << "+...";
      break;
    }
  }
  if (!any) os << "0";
  return os.str();
}

i64 norm_exp(const LaurentSeries& a) {
  for (u64 i = 0; i < a.precision(); ++i)
    if (a.coeff(i) != 0) return a.offset() - i64(i);
  if (a.exact()) return kNegInf;
  if (a.extendable()) {
    u64 cap = std::max<u64>(4096, 4 * a.precision());
    for (u64 i = a.precision(); i < cap; ++i)
      if (a.coeff(i) != 0) return a.offset() - i64(i);
  }
  throw precision_error("norm: no nonzero coefficient within certified window");
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed moduli");
  u32 p = a.modulus();
  i64 h = std::max(a.offset(), b.offset());
  auto bot_of = [](const LaurentSeries& s) { return s.offset() - i64(s.precision()) + 1; };
  bool a_lim = !a.extendable(), b_lim = !b.extendable();
  i64 bot;
  if (a_lim && b_lim)
    bot = std::max(bot_of(a), bot_of(b));
  else if (a_lim)
    bot = bot_of(a);
  else if (b_lim)
    bot = bot_of(b);
  else
    bot = std::min(bot_of(a), bot_of(b));
  if (bot > h) bot = h;
  std::vector<u32> c;
  c.reserve(u64(h - bot) + 1);
  for (i64 e = h; e >= bot; --e) c.push_back(fp_add(a.coeff_exp(e), b.coeff_exp(e), p));
  return LaurentSeries::from_coeffs(p, h, std::move(c), a.exact() && b.exact());
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed moduli");
  u32 p = a.modulus();
  std::vector<u32> neg(b.precision());
  for (u64 i = 0; i < neg.size(); ++i) neg[i] = fp_neg(b.coeff(i), p);
  LaurentSeries nb = LaurentSeries::from_coeffs(p, b.offset(), std::move(neg), b.exact());
  if (b.extendable() && !b.exact()) {
    // preserve extendability of a generator-backed operand
    nb = LaurentSeries::from_generator(
        p, b.offset(), [b, p](u64 i) { return fp_neg(b.coeff(i), p); }, b.precision());
  }
  return add(a, nb);
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b, u64 n_terms) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed moduli");
  u32 p = a.modulus();
  u64 na = std::min<u64>(n_terms, a.extendable() ? n_terms : a.precision());
  u64 nb = std::min<u64>(n_terms, b.extendable() ? n_terms : b.precision());
  // output k needs a_0..a_k and b_0..b_k; exact operands pad with zeros
  u64 cert_a = a.exact() ? n_terms : na;
  u64 cert_b = b.exact() ? n_terms : nb;
  u64 nc = std::min(cert_a, cert_b);
  a.ensure(na);
  b.ensure(nb);
  std::vector<u32> c(nc, 0);
  for (u64 i = 0; i < na && i < nc; ++i) {
    u32 ai = a.coeff(i);
    if (!ai) continue;
    for (u64 j = 0; j < nb && i + j < nc; ++j)
      c[i + j] = u32((u64(ai) * b.coeff(j) + c[i + j]) % p);
  }
  bool exact = a.exact() && b.exact() &&
               (a.precision() == 0 || b.precision() == 0 ||
                nc >= a.precision() + b.precision() - 1);
  return LaurentSeries::from_coeffs(p, a.offset() + b.offset(), std::move(c), exact);
}

LaurentSeries mul_poly(const LaurentSeries& a, const Poly& f) {
  if (a.modulus() != f.modulus()) throw std::invalid_argument("mixed moduli");
  if (f.is_zero()) return LaurentSeries::zero(a.modulus());
  return mul(a, LaurentSeries::from_poly(f),
             a.extendable() ? a.precision() + u64(f.deg()) : a.precision());
}

LaurentSeries invert(const LaurentSeries& a, u64 n_terms) {
  u32 p = a.modulus();
  i64 lead = norm_exp(a);
  if (lead == kNegInf) throw std::invalid_argument("inverse of zero series");
  u64 shift = u64(a.offset() - lead);
  u32 inv0 = fp_inv(a.coeff(shift), p);
  std::vector<u32> out(n_terms, 0);
  if (n_terms == 0) return LaurentSeries::from_coeffs(p, -lead, {}, false);
  out[0] = inv0;
  for (u64 k = 1; k < n_terms; ++k) {
    u64 s = 0;
    for (u64 j = 1; j <= k; ++j) s = (s + u64(a.coeff(shift + j)) * out[k - j]) % p;
    out[k] = fp_mul(fp_neg(u32(s), p), inv0, p);
  }
  return LaurentSeries::from_coeffs(p, -lead, std::move(out), false);
}

LaurentSeries substitute(const LaurentSeries& theta, const Poly& P, u64 n_terms) {
  if (theta.modulus() != P.modulus()) throw std::invalid_argument("mixed moduli");
  u32 p = theta.modulus();
  if (theta.offset() > -1) throw std::invalid_argument("substitute requires offset <= -1");
  int d = P.deg();
  if (d < 1) throw std::invalid_argument("substitute requires deg P >= 1");
  u64 T = n_terms + 1;  // u-exponents 0..n_terms, u = t^{-1}
  // 1/P as a u-series: reverse P, invert as a power series in u, shift by u^d.
  std::vector<u32> rev(P.coeffs().rbegin(), P.coeffs().rend());
  LaurentSeries revs = LaurentSeries::from_coeffs(p, 0, rev, true);
  LaurentSeries inv_rev = invert(revs, T);
  std::vector<u32> pinv(T, 0);  // pinv[m] = coeff of u^m in 1/P
  for (u64 m = u64(d); m < T; ++m) pinv[m] = inv_rev.coeff(m - u64(d));
  // terms of theta re-anchored at exponent -1: m_j = coeff of t^{-(j+1)};
  // term j first contributes at u-valuation d*(j+1), so only j < n_terms/d matter
  u64 jmax = n_terms / u64(d);
  std::vector<u32> m(jmax, 0);
  for (u64 j = 0; j < jmax; ++j) m[j] = theta.coeff_exp(-i64(j) - 1);
  // Horner: res <- (res + m_j) * (1/P), from the deepest term up.
  std::vector<u32> res(T, 0), tmp(T, 0);
  for (i64 j = i64(jmax) - 1; j >= 0; --j) {
    res[0] = fp_add(res[0], m[u64(j)], p);
    std::fill(tmp.begin(), tmp.end(), 0);
    for (u64 i = 0; i < T; ++i) {
      if (!res[i]) continue;
      for (u64 k = u64(d); i + k < T; ++k)
        tmp[i + k] = u32((u64(res[i]) * pinv[k] + tmp[i + k]) % p);
    }
    res.swap(tmp);
  }
  std::vector<u32> out(res.begin() + 1, res.end());  // u^1 .. u^{n_terms}
  return LaurentSeries::from_coeffs(p, -1, std::move(out), false);
}

}  // namespace nw
