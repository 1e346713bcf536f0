#include "nw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nw {

Poly::Poly(u32 p, std::vector<i64> coeffs) : p_(p) {
  require_prime(p);
  c_.reserve(coeffs.size());
  for (i64 v : coeffs) c_.push_back(fp_reduce(v, p));
  trim();
}

Poly::Poly(u32 p, std::vector<u32> coeffs) : c_(std::move(coeffs)), p_(p) {
  require_prime(p);
  for (u32& v : c_) v %= p;
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(u32 p, int degree, u32 c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  Poly f(p);
  c %= p;
  if (c != 0) {
    f.c_.assign(degree + 1, 0);
    f.c_[degree] = c;
  }
  return f;
}

Poly Poly::operator+(const Poly& o) const {
  check(o);
  Poly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = fp_add(coeff(int(i)), o.coeff(int(i)), p_);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check(o);
  Poly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = fp_sub(coeff(int(i)), o.coeff(int(i)), p_);
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  Poly r(p_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = u32((u64(c_[i]) * o.c_[j] + r.c_[i + j]) % p_);
  }
  r.trim();
  return r;
}

Poly Poly::scale(u32 c) const {
  Poly r(p_);
  c %= p_;
  if (c == 0) return r;
  r.c_ = c_;
  for (u32& v : r.c_) v = fp_mul(v, c, p_);
  return r;
}

Poly Poly::shift(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  Poly r(p_);
  if (is_zero()) return r;
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  check(inner);
  Poly r(p_);
  for (int i = deg(); i >= 0; --i) {
    r = r * inner;
    r = r + Poly(p_, std::vector<u32>{c_[i]});
  }
  return r;
}

Poly Poly::derivative() const {
  Poly r(p_);
  for (int i = 1; i <= deg(); ++i) r.c_.push_back(fp_mul(c_[i], u32(i % p_), p_));
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(fp_inv(lead(), p_));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed moduli");
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  u32 p = a.modulus();
  Poly q(p);
  std::vector<u32> r(a.coeffs());
  int db = b.deg();
  u32 linv = fp_inv(b.lead(), p);
  std::vector<u32> qc;
  int dr = int(r.size()) - 1;
  while (dr >= 0 && r[dr] == 0) --dr;
  if (dr >= db) qc.assign(dr - db + 1, 0);
  while (dr >= db) {
    u32 c = fp_mul(r[dr], linv, p);
    qc[dr - db] = c;
    for (int i = 0; i <= db; ++i)
      r[dr - db + i] = fp_sub(r[dr - db + i], fp_mul(c, b.coeff(i), p), p);
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(dr + 1);
  return {Poly(p, qc), Poly(p, r)};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

bool is_irreducible(const Poly& f) {
  int d = f.deg();
  if (d <= 0) return false;
  if (d == 1) return true;
  u32 p = f.modulus();
  // Trial division by all monic polynomials of degree <= d/2.
  for (int e = 1; e <= d / 2; ++e) {
    u64 count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<u32> c(e + 1, 0);
      u64 x = idx;
      for (int i = 0; i < e; ++i) {
        c[i] = u32(x % p);
        x /= p;
      }
      c[e] = 1;
      if (divmod(f, Poly(p, c)).second.is_zero()) return false;
    }
  }
  return true;
}

namespace {

inline bool ws(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

Poly parse_csv(u32 p, const std::string& text) {
  std::vector<i64> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    i64 v = std::stoll(tok, &pos);
    while (pos < tok.size() && ws(tok[pos])) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
    coeffs.push_back(v);
  }
  return Poly(p, coeffs);
}

Poly parse_symbolic(u32 p, const std::string& text) {
  std::vector<i64> coeffs;
  auto add_term = [&](i64 c, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (int(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
    coeffs[e] += c;
  };
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && ws(text[i])) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty polynomial");
  bool first = true;
  while (i < text.size()) {
    i64 sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in '" + text + "'");
    }
    first = false;
    i64 c = 1;
    bool saw_digits = false;
    if (i < text.size() && digit(text[i])) {
      size_t pos = 0;
      c = std::stoll(text.substr(i), &pos);
      i += pos;
      saw_digits = true;
    }
    skip_ws();
    if (i < text.size() && (text[i] == 't' || text[i] == 'x')) {
      ++i;
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !digit(text[i]))
          throw std::invalid_argument("expected exponent in '" + text + "'");
        size_t pos = 0;
        e = std::stoi(text.substr(i), &pos);
        i += pos;
      }
      add_term(sign * c, e);
    } else if (saw_digits) {
      add_term(sign * c, 0);
    } else {
      throw std::invalid_argument("cannot parse polynomial '" + text + "'");
    }
    skip_ws();
  }
  return Poly(p, coeffs);
}

}  // namespace

Poly Poly::parse(u32 p, const std::string& text) {
  if (text.find(',') != std::string::npos) return parse_csv(p, text);
  bool symbolic = false;
  for (char ch : text)
    if (ch == 't' || ch == 'x') symbolic = true;
  return symbolic ? parse_symbolic(p, text) : parse_csv(p, text);
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    u32 c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string Poly::csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c_[i]);
  }
  return out;
}

}  // namespace nw
