#include "nw/numwall.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nw/parallel.hpp"

namespace nw {

u32 det_mod(std::vector<u32> m, std::size_t n, u32 p) {
  u32 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (m[r * n + col] % p) {
        piv = r;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m[col * n + j], m[piv * n + j]);
      det = fp_neg(det, p);
    }
    const u32 d = m[col * n + col] % p;
    det = fp_mul(det, d, p);
    const u32 inv = fp_inv(d, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const u32 f = fp_mul(m[r * n + col] % p, inv, p);
      if (!f) continue;
      for (std::size_t j = col; j < n; ++j)
        m[r * n + j] = fp_sub(m[r * n + j] % p, fp_mul(f, m[col * n + j] % p, p), p);
    }
  }
  return det;
}

u32 cofactor_det(const std::vector<u32>& m, std::size_t n, u32 p) {
  if (n == 0) return 1;
  if (n == 1) return m[0] % p;
  u32 acc = 0;
  std::vector<u32> minor((n - 1) * (n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    const u32 a = m[j] % p;
    if (!a) continue;
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[(r - 1) * (n - 1) + cc++] = m[r * n + c];
      }
    }
    const u32 sub = cofactor_det(minor, n - 1, p);
    const u32 term = fp_mul(a, sub, p);
    acc = (j % 2 == 0) ? fp_add(acc, term, p) : fp_sub(acc, term, p);
  }
  return acc;
}

u32 toeplitz_det(const std::vector<u32>& s, u32 p, i64 n, int m) {
  const std::size_t d = std::size_t(m) + 1;
  std::vector<u32> M(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      M[i * d + j] = seq_at(s, n + i64(i) - i64(j)) % p;
  return det_mod(std::move(M), d, p);
}

u32 hankel_det(const std::vector<u32>& s, u32 p, i64 n, int m) {
  const std::size_t d = std::size_t(m) + 1;
  std::vector<u32> M(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      M[i * d + j] = seq_at(s, n + i64(i) + i64(j)) % p;
  return det_mod(std::move(M), d, p);
}

Wall wall_oracle(const std::vector<u32>& s, u32 p, i64 R, i64 C) {
  require_prime(p);
  if (i64(s.size()) < R + C)
    throw precision_error("wall_oracle: sequence shorter than R + C");
  Wall w;
  w.p = p;
  w.rows = R;
  w.cols = C;
  w.value.assign(std::size_t(R * C), 0);
  parallel_for(std::size_t(R), [&](std::size_t m) {
    for (i64 n = 0; n < C; ++n)
      w.value[m * std::size_t(C) + std::size_t(n)] = toeplitz_det(s, p, n, int(m));
  });
  return w;
}

bool WallProfile::any_unknown() const {
  return std::find(cell.begin(), cell.end(), std::int8_t(2)) != cell.end();
}

WallProfile profile_of(const Wall& w) {
  WallProfile prof;
  prof.rows = w.rows;
  prof.cols = w.cols;
  prof.cell.resize(w.value.size());
  for (std::size_t i = 0; i < w.value.size(); ++i)
    prof.cell[i] = w.value[i] == 0 ? 1 : 0;
  return prof;
}

namespace {

// Zero/nonzero/unknown pattern of diagonal k for wall rows 0..rows-1.
std::vector<std::int8_t> diag_pattern_rows(const LaurentSeries& theta, i64 k,
                                           i64 rows) {
  const i64 want = 2 * (rows + 2) + 2 * std::max<i64>(0, -k) + 8;
  const i64 avail = theta.available_below(-k - 1);
  i64 n_coeff = std::max<i64>(0, std::min(avail, want));
  if (theta.exact()) {
    // Termination is only certifiable if every stored coefficient was read.
    const i64 bottom = theta.offset() - i64(theta.precision()) + 1;
    n_coeff = std::max(n_coeff, -bottom - k);
  }
  std::vector<u32> a(std::size_t(n_coeff));
  for (i64 i = 0; i < n_coeff; ++i)
    a[std::size_t(i)] = theta.coeff_exp(-(k + i) - 1);
  CFExpansion cf = expand_coeffs(theta.modulus(), a, rows + 1, theta.exact());
  std::vector<std::int8_t> pat(std::size_t(rows), 1);
  i64 cum = 0;
  for (int d : cf.degrees) {
    cum += d;
    if (cum - 1 < rows) pat[std::size_t(cum - 1)] = 0;
  }
  for (i64 m = cf.certified_rows + 1; m < rows; ++m) pat[std::size_t(m)] = 2;
  return pat;
}

}  // namespace

WallProfile profile_fast(const LaurentSeries& theta, i64 R, i64 C) {
  WallProfile prof;
  prof.rows = R;
  prof.cols = C;
  prof.cell.assign(std::size_t(R * C), 2);
  const i64 kmin = -(R - 1);
  parallel_for(std::size_t(C - kmin), [&](std::size_t idx) {
    const i64 k = kmin + i64(idx);
    const i64 mmax = std::min(R - 1, C - 1 - k);
    const i64 mmin = std::max<i64>(0, -k);
    if (mmax < mmin) return;
    std::vector<std::int8_t> pat = diag_pattern_rows(theta, k, mmax + 1);
    for (i64 m = mmin; m <= mmax; ++m)
      prof.cell[std::size_t(m * C + m + k)] = pat[std::size_t(m)];
  });
  return prof;
}

DiagonalPattern diagonal_pattern(const WallProfile& prof, i64 k) {
  DiagonalPattern d;
  d.k = k;
  i64 prev = -1;
  for (i64 m = std::max<i64>(0, -k); m < prof.rows && m + k < prof.cols; ++m) {
    const std::int8_t c = prof.at(m, m + k);
    if (c == 2) break;
    if (c == 0) {
      d.h.push_back(m);
      d.degrees.push_back(int(m - prev));
      prev = m;
    }
  }
  return d;
}

bool approx_window_check(const LaurentSeries& theta, const Poly& N, i64 k, int l) {
  if (N.is_zero()) throw std::invalid_argument("approx_window_check: N = 0");
  const LaurentSeries prod = mul_poly(theta.shifted(k), N);
  const i64 e = norm_exp(prod.frac());
  if (e == kNegInf) return true;
  return N.deg() + e <= -i64(l);
}

std::string profile_pbm(const WallProfile& prof) {
  std::ostringstream out;
  out << "P1\n" << prof.cols << " " << prof.rows + 1 << "\n";
  for (i64 n = 0; n < prof.cols; ++n) out << (n ? " 0" : "0");
  out << "\n";
  for (i64 m = 0; m < prof.rows; ++m) {
    for (i64 n = 0; n < prof.cols; ++n) {
      if (n) out << " ";
      out << (prof.at(m, n) == 1 ? "1" : "0");
    }
    out << "\n";
  }
  return out.str();
}

std::string wall_csv(const Wall& w) {
  std::ostringstream out;
  out << "m,n,value\n";
  for (i64 n = 0; n < w.cols; ++n) out << "-1," << n << ",1\n";
  for (i64 m = 0; m < w.rows; ++m)
    for (i64 n = 0; n < w.cols; ++n)
      out << m << "," << n << "," << w.at(m, n) << "\n";
  return out.str();
}

int max_zero_square(const WallProfile& prof) {
  const i64 h = prof.rows, wd = prof.cols;
  std::vector<int> dp(std::size_t(h * wd), 0);
  int best = 0;
  for (i64 i = 0; i < h; ++i) {
    for (i64 j = 0; j < wd; ++j) {
      if (prof.at(i, j) != 1) continue;
      int v = 1;
      if (i && j) {
        const int a = dp[std::size_t((i - 1) * wd + j)];
        const int b = dp[std::size_t(i * wd + j - 1)];
        const int c = dp[std::size_t((i - 1) * wd + j - 1)];
        v = 1 + std::min({a, b, c});
      }
      dp[std::size_t(i * wd + j)] = v;
      best = std::max(best, v);
    }
  }
  return best;
}

bool square_windows_ok(const WallProfile& prof) {
  const i64 h = prof.rows, wd = prof.cols;
  std::vector<char> seen(std::size_t(h * wd), 0);
  std::vector<i64> stack;
  for (i64 i = 0; i < h; ++i) {
    for (i64 j = 0; j < wd; ++j) {
      const std::size_t start = std::size_t(i * wd + j);
      if (prof.cell[start] != 1 || seen[start]) continue;
      stack.assign(1, i64(start));
      seen[start] = 1;
      i64 rmin = i, rmax = i, cmin = j, cmax = j, count = 0;
      while (!stack.empty()) {
        const i64 idx = stack.back();
        stack.pop_back();
        const i64 r = idx / wd, c = idx % wd;
        ++count;
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
        const i64 nbr[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
        for (auto& nb : nbr) {
          if (nb[0] < 0 || nb[0] >= h || nb[1] < 0 || nb[1] >= wd) continue;
          const std::size_t q = std::size_t(nb[0] * wd + nb[1]);
          if (prof.cell[q] == 1 && !seen[q]) {
            seen[q] = 1;
            stack.push_back(i64(q));
          }
        }
      }
      if (rmin == 0 || cmin == 0 || rmax == h - 1 || cmax == wd - 1) continue;
      const i64 side_r = rmax - rmin + 1, side_c = cmax - cmin + 1;
      if (side_r != side_c || count != side_r * side_c) return false;
    }
  }
  return true;
}

}  // namespace nw
