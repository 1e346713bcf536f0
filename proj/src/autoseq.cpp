#include "nw/autoseq.hpp"

namespace nw {

namespace {

u64 binom(u32 n, u32 k) {
  if (k > n) return 0;
  u64 r = 1;
  for (u32 i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

std::vector<u32> cantor_image(u32 p, u32 letter) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("cantor morphism needs odd p");
  if (letter >= p) throw std::invalid_argument("letter out of range");
  u32 p2 = (p - 1) / 2;
  std::vector<u32> w(p, 0);
  for (u32 i = 0; i < p; i += 2) w[i] = u32(u64(letter) * (binom(p2, i / 2) % p) % p);
  return w;
}

Morphism1D cantor_morphism(u32 p) {
  Morphism1D m{p, {}};
  m.image.reserve(p);
  for (u32 a = 0; a < p; ++a) m.image.push_back(cantor_image(p, a));
  return m;
}

std::vector<u32> iterate_fixed_point(const Morphism1D& m, u32 start, u64 length) {
  if (start >= m.image.size()) throw std::invalid_argument("start letter out of range");
  if (m.image[start].empty() || m.image[start][0] != start)
    throw std::invalid_argument("start letter is not prolongable");
  if (m.image[start].size() < 2)
    throw std::invalid_argument("image of start letter does not grow");
  std::vector<u32> w{start};
  while (w.size() < length) {
    std::vector<u32> next;
    next.reserve(w.size() * m.image[start].size());
    for (u32 a : w) {
      const auto& img = m.image.at(a);
      next.insert(next.end(), img.begin(), img.end());
    }
    if (next.size() <= w.size()) throw std::invalid_argument("morphism does not expand");
    w = std::move(next);
  }
  w.resize(length);
  return w;
}

u32 cantor_digit(u32 p, u64 i) {
  u32 p2 = (p - 1) / 2;
  u64 v = 1;
  while (i && v) {
    u64 d = i % p;
    v = (d % 2 == 0) ? v * (binom(p2, u32(d / 2)) % p) % p : 0;
    i /= p;
  }
  return u32(v);
}

u32 tm_digit(u64 i) { return u32(__builtin_popcountll(i) & 1); }

LaurentSeries cantor_series(u32 p, u64 initial) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("cantor series needs odd p");
  return LaurentSeries::from_sequence(p, [p](u64 i) { return cantor_digit(p, i); }, initial);
}

LaurentSeries tm_series(u64 initial) {
  return LaurentSeries::from_sequence(2, [](u64 i) { return tm_digit(i); }, initial);
}

QuadraticCheckReport quadratic_check(u32 p, u64 terms) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("quadratic_check needs odd p");
  u64 T = terms;
  std::vector<u32> c(T);
  for (u64 i = 0; i < T; ++i) c[i] = cantor_digit(p, i);

  // (1 + u^2) * (sum c_i u^i)^2 == 1, u = t^{-1}
  std::vector<u32> sq(T, 0);
  for (u64 i = 0; i < T; ++i) {
    if (!c[i]) continue;
    for (u64 j = 0; i + j < T; ++j)
      sq[i + j] = u32((u64(c[i]) * c[j] + sq[i + j]) % p);
  }
  bool id1 = true;
  for (u64 k = 0; k < T; ++k) {
    u32 v = fp_add(sq[k], k >= 2 ? sq[k - 2] : 0, p);
    if (v != (k == 0 ? 1u : 0u)) {
      id1 = false;
      break;
    }
  }

  // c == Frobenius(c) * sum_{i<=p2} binom(p2,i) u^{2i}
  u32 p2 = (p - 1) / 2;
  std::vector<u32> frob(T, 0);
  for (u64 i = 0; p * i < T; ++i) frob[p * i] = fp_pow(c[i], p, p);
  std::vector<u32> rhs(T, 0);
  for (u32 i = 0; i <= p2; ++i) {
    u32 b = u32(binom(p2, i) % p);
    if (!b) continue;
    for (u64 j = 0; j + 2 * i < T; ++j)
      rhs[j + 2 * i] = u32((u64(b) * frob[j] + rhs[j + 2 * i]) % p);
  }
  bool id2 = rhs == c;

  return {id1, id2, T};
}

}  // namespace nw
