#include "nw/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace nw {

CFExpansion expand_coeffs(u32 p, const std::vector<u32>& a, i64 max_rows,
                          bool exact) {
  require_prime(p);
  CFExpansion cf;
  cf.n_coeffs = a.size();
  const i64 N = static_cast<i64>(a.size());
  if (N == 0) {
    cf.terminated = true;
    cf.certified_rows = exact ? (i64{1} << 60) : -1;
    cf.a0 = Poly(p);
    return cf;
  }
  // r0 = x^N, r1 = sum a_i x^{N-1-i}
  std::vector<u32> r0(static_cast<size_t>(N) + 1, 0);
  r0.back() = 1;
  std::vector<u32> r1(static_cast<size_t>(N), 0);
  for (i64 i = 0; i < N; ++i) r1[static_cast<size_t>(N - 1 - i)] = a[static_cast<size_t>(i)] % p;
  Poly R0(r0, p), R1(r1, p);

  i64 den_cur = 0;  // deg N_{i-1}
  while (R1.deg() >= 0) {
    auto [q, r] = divmod(R0, R1);
    const i64 den_next = den_cur + q.deg();  // deg N_i
    cf.quotients.push_back(q);
    cf.degrees.push_back(static_cast<int>(q.deg()));
    if (den_cur + den_next <= N) ++cf.strict_count;
    R0 = R1;
    R1 = r;
    den_cur = den_next;
    if (max_rows >= 0 && den_cur - 1 > max_rows) break;
  }
  cf.terminated = (R1.deg() < 0);
  cf.certified_rows = (exact && cf.terminated) ? (i64{1} << 60) : (N - 1) / 2;
  cf.a0 = Poly(p);
  return cf;
}

CFExpansion expand(const LaurentSeries& theta, u64 n_coeffs, i64 max_rows) {
  LaurentSeries f = theta.frac();
  u64 n = n_coeffs;
  if (f.exact()) {
    // Termination may only be claimed when every stored coefficient was read.
    const i64 bottom = f.offset() - i64(f.precision()) + 1;
    n = std::max<i64>(i64(n), -bottom);
  } else if (!f.extendable()) {
    n = std::min<u64>(n, f.precision());
  }
  if (n > 0) f.ensure(n);
  std::vector<u32> a(n);
  for (u64 i = 0; i < n; ++i) a[i] = f.coeff_exp(-static_cast<i64>(i) - 1);
  CFExpansion cf = expand_coeffs(theta.modulus(), a, max_rows, theta.exact());
  cf.a0 = theta.poly_part();
  return cf;
}

std::vector<int> CFExpansion::certified_degrees(i64 horizon) const {
  std::vector<int> out;
  i64 cum = -1;
  for (int d : degrees) {
    if (cum + d <= certified_rows && cum + d < horizon) {
      out.push_back(d);
      cum += d;
    } else {
      break;
    }
  }
  return out;
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
  std::vector<Convergent> out;
  const u32 p = cf.a0.modulus();
  Poly m_prev = Poly::constant(1, p), n_prev(p);  // M_{-1}, N_{-1}
  Poly m_cur = cf.a0, n_cur = Poly::constant(1, p);
  out.push_back({m_cur, n_cur});
  for (const Poly& q : cf.quotients) {
    Poly m_next = q * m_cur + m_prev;
    Poly n_next = q * n_cur + n_prev;
    m_prev = m_cur;
    n_prev = n_cur;
    m_cur = m_next;
    n_cur = n_next;
    out.push_back({m_cur, n_cur});
  }
  return out;
}

namespace {

// deg of a bit-packed F_2 polynomial, -1 for zero.
i64 bits_deg(const std::vector<u64>& w) {
  for (i64 i = static_cast<i64>(w.size()) - 1; i >= 0; --i) {
    if (w[static_cast<size_t>(i)]) {
      u64 v = w[static_cast<size_t>(i)];
      int b = 63;
      while (!(v >> b & 1)) --b;
      return i * 64 + b;
    }
  }
  return -1;
}

void bits_xor_shifted(std::vector<u64>& dst, const std::vector<u64>& src,
                      i64 shift) {
  const i64 word = shift / 64, bit = shift % 64;
  for (i64 i = static_cast<i64>(src.size()) - 1; i >= 0; --i) {
    const u64 v = src[static_cast<size_t>(i)];
    if (!v) continue;
    const size_t lo = static_cast<size_t>(i + word);
    if (bit == 0) {
      dst[lo] ^= v;
    } else {
      dst[lo] ^= v << bit;
      dst[lo + 1] ^= v >> (64 - bit);
    }
  }
}

}  // namespace

std::vector<int> f2_certified_degrees(const std::vector<u32>& bits, i64 horizon) {
  const i64 N = static_cast<i64>(bits.size());
  const i64 words = N / 64 + 2;
  std::vector<u64> r0(static_cast<size_t>(words), 0);
  std::vector<u64> r1(static_cast<size_t>(words), 0);
  r0[static_cast<size_t>(N / 64)] |= u64{1} << (N % 64);
  for (i64 i = 0; i < N; ++i) {
    if (bits[static_cast<size_t>(i)] & 1) {
      const i64 e = N - 1 - i;
      r1[static_cast<size_t>(e / 64)] |= u64{1} << (e % 64);
    }
  }
  const i64 certified = (N - 1) / 2;
  std::vector<int> out;
  i64 cum = -1;
  i64 d0 = bits_deg(r0), d1 = bits_deg(r1);
  while (d1 >= 0) {
    const int q_deg = static_cast<int>(d0 - d1);
    // r0 %= r1
    while (d0 >= d1) {
      bits_xor_shifted(r0, r1, d0 - d1);
      d0 = bits_deg(r0);
    }
    std::swap(r0, r1);
    std::swap(d0, d1);
    if (cum + q_deg <= certified && cum + q_deg < horizon) {
      out.push_back(q_deg);
      cum += q_deg;
    } else {
      break;
    }
  }
  return out;
}

bool transport_check(const LaurentSeries& theta, const Poly& P, int count,
                     u64 terms) {
  LaurentSeries composed = substitute(theta, P, terms);
  CFExpansion cf_t = expand(theta, terms);
  CFExpansion cf_p = expand(composed, terms);
  const int d = static_cast<int>(P.deg());
  const int n = std::min<int>(
      {count, static_cast<int>(cf_t.quotients.size()),
       static_cast<int>(cf_p.quotients.size())});
  if (n < count) return false;
  for (int i = 0; i < n; ++i) {
    if (cf_p.degrees[static_cast<size_t>(i)] !=
        d * cf_t.degrees[static_cast<size_t>(i)])
      return false;
    if (!(cf_t.quotients[static_cast<size_t>(i)].compose(P) ==
          cf_p.quotients[static_cast<size_t>(i)]))
      return false;
  }
  return true;
}

}  // namespace nw
