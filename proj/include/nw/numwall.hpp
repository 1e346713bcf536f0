#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "nw/contfrac.hpp"
#include "nw/laurent.hpp"

namespace nw {

// Determinant of a square matrix over F_p by Gaussian elimination.
// m is row-major, n x n; consumed by value.
u32 det_mod(std::vector<u32> m, std::size_t n, u32 p);
// Naive cofactor expansion; micro-oracle for n <= 6.
u32 cofactor_det(const std::vector<u32>& m, std::size_t n, u32 p);

// s_i for a finite sequence, zero-extended on both sides.
inline u32 seq_at(const std::vector<u32>& s, i64 i) {
  return (i >= 0 && i < i64(s.size())) ? s[std::size_t(i)] : 0;
}

// det T_S(n;m): (m+1)x(m+1), entry (i,j) = s_{n+i-j}.
u32 toeplitz_det(const std::vector<u32>& s, u32 p, i64 n, int m);
// det H_S(n;m): entry (i,j) = s_{n+i+j}; equals (-1)^ceil(m/2) T_S(n+m;m).
u32 hankel_det(const std::vector<u32>& s, u32 p, i64 n, int m);

// Number wall rows 0..R-1 (row -1 is all ones and not stored).
struct Wall {
  u32 p = 2;
  i64 rows = 0, cols = 0;
  std::vector<u32> value;  // row-major
  u32 at(i64 m, i64 n) const { return value[std::size_t(m * cols + n)]; }
};
// Every cell from toeplitz_det; requires s.size() >= R + C.
Wall wall_oracle(const std::vector<u32>& s, u32 p, i64 R, i64 C);

// Zero/nonzero mask: 0 = nonzero, 1 = zero, 2 = unknown (past certified rows).
struct WallProfile {
  i64 rows = 0, cols = 0;
  std::vector<std::int8_t> cell;  // row-major
  std::int8_t at(i64 m, i64 n) const { return cell[std::size_t(m * cols + n)]; }
  bool any_unknown() const;
};
WallProfile profile_of(const Wall& w);
// Wall profile of the digit sequence of <theta> via CF on every diagonal.
WallProfile profile_fast(const LaurentSeries& theta, i64 R, i64 C);

// Nonzero rows h_0 < h_1 < ... of diagonal k and quotient degrees
// (h_0 - (-1), h_1 - h_0, ...); stops at the first unknown cell.
struct DiagonalPattern {
  i64 k = 0;
  std::vector<i64> h;
  std::vector<int> degrees;
};
DiagonalPattern diagonal_pattern(const WallProfile& prof, i64 k);

// |N| * |<N t^k Theta>| <= q^{-l}, as exponent arithmetic.
bool approx_window_check(const LaurentSeries& theta, const Poly& N, i64 k, int l);

// PBM P1 text, width C, height R+1; first raster row is wall row -1 (all
// nonzero); pixel 1 = zero entry.  Unknown cells render as nonzero.
std::string profile_pbm(const WallProfile& prof);
// CSV "m,n,value" including the all-ones row -1.
std::string wall_csv(const Wall& w);

// Side of the largest all-zero square (cells with value 1).
int max_zero_square(const WallProfile& prof);
// True iff every maximal zero region not touching the block boundary is a
// filled square.
bool square_windows_ok(const WallProfile& prof);

}  // namespace nw
