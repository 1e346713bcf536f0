#include "nw/fp.hpp"

namespace nw {

bool is_prime(u32 p) {
  if (p < 2) return false;
  for (u32 d = 2; u64(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(u32 p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
}

u32 fp_pow(u32 a, u64 e, u32 p) {
  u64 base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return u32(acc);
}

u32 fp_inv(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return fp_pow(a, p - 2, p);
}

}  // namespace nw
