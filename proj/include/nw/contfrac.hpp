#pragma once
#include <vector>

#include "nw/laurent.hpp"

namespace nw {

// Continued fraction of a Laurent series, computed from N certified
// coefficients of the fractional part by the Euclid run on (x^N, R) with
// R = sum a_i x^{N-1-i}.  Quotient i of that run equals A_i of the series CF.
struct CFExpansion {
  Poly a0;                     // polynomial part A_0
  std::vector<Poly> quotients;  // A_1, A_2, ... (everything the run emitted)
  std::vector<int> degrees;     // deg A_i
  // Quotients certified coefficient-exact: deg N_{i-1} + deg N_i <= N.
  int strict_count = 0;
  // Wall rows 0..certified_rows carry a determined zero/nonzero pattern
  // ((N-1)/2 for truncations; huge when the input was exact and terminated).
  i64 certified_rows = 0;
  bool terminated = false;
  u64 n_coeffs = 0;

  // Degrees of complete quotients whose closing nonzero row fits inside both
  // certified_rows and `horizon` (cumulative row index starts at -1).
  std::vector<int> certified_degrees(i64 horizon) const;
};

CFExpansion expand_coeffs(u32 p, const std::vector<u32>& a, i64 max_rows = -1,
                          bool exact = false);
// n_coeffs coefficients of <theta> are materialized (clamped to the certified
// window of a truncated series).
CFExpansion expand(const LaurentSeries& theta, u64 n_coeffs, i64 max_rows = -1);

struct Convergent {
  Poly num;  // M_i
  Poly den;  // N_i
};
// Convergents M_0/N_0 = A_0/1 up through the last emitted quotient.
std::vector<Convergent> convergents(const CFExpansion& cf);

// F_2 fast path: certified quotient degrees within `horizon` wall rows,
// bit-packed Euclid (O(N^2/64)).  bits[i] = a_i.
std::vector<int> f2_certified_degrees(const std::vector<u32>& bits, i64 horizon);

// Asserts B_i = A_i(P) for the first `count` quotients, where B is the CF of
// Theta(P); also checks deg B_i = deg(P) * deg A_i.
bool transport_check(const LaurentSeries& theta, const Poly& P, int count,
                     u64 terms = 400);

}  // namespace nw
