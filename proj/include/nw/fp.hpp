#pragma once
#include <cstdint>
#include <stdexcept>

namespace nw {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u32 p);
void require_prime(u32 p);

inline u32 fp_add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_neg(u32 a, u32 p) { return a ? p - a : 0; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }
inline u32 fp_reduce(i64 v, u32 p) {
  i64 r = v % i64(p);
  return u32(r < 0 ? r + i64(p) : r);
}

u32 fp_pow(u32 a, u64 e, u32 p);
u32 fp_inv(u32 a, u32 p);

// Residue with its modulus attached; binary ops require equal moduli.
class FieldElement {
 public:
  FieldElement(i64 value, u32 p) : p_(p) {
    require_prime(p);
    v_ = fp_reduce(value, p);
  }
  u32 value() const { return v_; }
  u32 modulus() const { return p_; }

  FieldElement operator+(const FieldElement& o) const { return raw(fp_add(v_, same(o), p_)); }
  FieldElement operator-(const FieldElement& o) const { return raw(fp_sub(v_, same(o), p_)); }
  FieldElement operator*(const FieldElement& o) const { return raw(fp_mul(v_, same(o), p_)); }
  FieldElement neg() const { return raw(fp_neg(v_, p_)); }
  FieldElement inv() const { return raw(fp_inv(v_, p_)); }
  bool operator==(const FieldElement& o) const { return p_ == o.p_ && v_ == o.v_; }

 private:
  FieldElement raw(u32 v, u32 p) const { FieldElement e = *this; e.v_ = v; e.p_ = p; return e; }
  FieldElement raw(u32 v) const { return raw(v, p_); }
  u32 same(const FieldElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
    return o.v_;
  }
  u32 v_;
  u32 p_;
};

// Raised on certified-precision exhaustion; the CLI maps it to exit code 3.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nw
