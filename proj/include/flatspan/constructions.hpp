#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "flatspan/config.hpp"
#include "flatspan/enumerate.hpp"

namespace flatspan {

/// Points on pairwise-skew lines: `lines` lines in R^ambient with
/// `points_per_line` points each at integer parameters 1..points_per_line.
/// Line j runs through e_{2j-1} with direction e_{2j} (the last line wraps
/// its direction to e_1 when the ambient dimension is exactly 2*lines-1).
/// Requires lines >= 2, points_per_line >= 2, ambient >= 2*lines - 1.
Config gen_skew_lines(int points_per_line, int lines, int ambient);

/// Vertices of the k-cube C^k = (0, +-1, ..., +-1) inside the hyperplane
/// x_1 = 0 of R^{k+1}, with the origin designated at the center 0.
Config gen_hypercube_base(int k);

/// S_n^k = C^k together with m collinear points (i, 0, ..., 0), i = 1..m,
/// on the axis through the center; n = 2^k + m. Origin designated at 0.
/// Requires k >= 2, m >= 2.
Config gen_hypercube_construction(int k, int m);

/// Vertices of the 3j-dimensional cross-polytope D^{3j} (+- standard basis
/// vectors of the hyperplane x_1 = 0 of R^{3j+1}), origin designated at 0.
Config gen_crosspolytope_base(int j);

/// T_n^j = D^{3j} together with m axis points; n = 6j + m.
/// Requires j >= 1, m >= 2.
Config gen_crosspolytope_construction(int j, int m);

/// Raise-dimension construction P = S u L: the base S lies (after
/// translating its designated origin to 0, and embedding into one more
/// dimension when it does not already satisfy x_1 = 0) in the hyperplane
/// x_1 = 0, and L is the set of m axis points (i, 0, ..., 0), i = 1..m.
///
/// `predicted` carries, for each 0 < k < d, the count
///   f_k(P) = m f_{k-1}^obar(S) + f_{k-1}^o(S) + f_k(S) + f_k(L)
/// computed from the measured f-vector of the base. The formula is exact
/// whenever every spanned flat of P containing the axis meets the base
/// hyperplane in a flat spanned by S; `class2_extra` counts, per k, the
/// spanned (k-2)-flats of S that violate this (flats avoiding the origin
/// whose join with the origin picks up no further base point). The fully
/// exact count is predicted[k] + class2_extra[k], and `prediction_exact`
/// says whether all corrections vanish.
struct RaiseResult {
  Config config;
  int m = 0;
  std::map<int, std::int64_t> predicted;
  std::map<int, std::int64_t> class2_extra;
  bool prediction_exact = true;
  FVector base_fvector;
};

RaiseResult raise_config(const Config& base, int m, int threads = 0);

}  // namespace flatspan
