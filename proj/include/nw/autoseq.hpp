#pragma once
#include <vector>

#include "nw/laurent.hpp"

namespace nw {

// 1D substitution: image[a] is the image word of letter a.
struct Morphism1D {
  u32 p;
  std::vector<std::vector<u32>> image;
};

// phi_p on {0..p-1}: letter a maps to the word with a*binom((p-1)/2, i/2) at
// even positions i and 0 at odd positions.
Morphism1D cantor_morphism(u32 p);
std::vector<u32> cantor_image(u32 p, u32 letter);

// Iterates m from `start` until the word has at least `length` letters; start
// must be prolongable (image[start][0] == start) and have a growing image.
std::vector<u32> iterate_fixed_point(const Morphism1D& m, u32 start, u64 length);

// c_i = prod over base-p digits d of i: binom((p-1)/2, d/2) for even d, 0 odd.
u32 cantor_digit(u32 p, u64 i);
// Thue-Morse: parity of popcount(i).
u32 tm_digit(u64 i);

// Theta_p = sum c_i t^{-(i+1)} over F_p.
LaurentSeries cantor_series(u32 p, u64 initial = 256);
// tau = sum t_i t^{-(i+1)} over F_2.
LaurentSeries tm_series(u64 initial = 256);

struct QuadraticCheckReport {
  bool square_identity;  // (1 + t^-2) * (t*Theta_p)^2 == 1
  bool frobenius_identity;  // t*Theta_p == (t*Theta_p)^p * sum binom((p-1)/2,i) t^-2i
  u64 terms;
  bool ok() const { return square_identity && frobenius_identity; }
};
QuadraticCheckReport quadratic_check(u32 p, u64 terms);

}  // namespace nw
