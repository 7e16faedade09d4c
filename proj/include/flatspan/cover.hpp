#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatspan/enumerate.hpp"

namespace flatspan {

/// A family of flats of dimension >= 1 covering part of a config, with
/// the points it covers and the total of its dimensions.
struct CoverWitness {
  std::vector<Flat> flats;  // sorted canonically
  int total_dim = 0;
  std::vector<int> covered;  // sorted point indices in the union

  int cardinality() const { return static_cast<int>(flats.size()); }
};

/// g_k values with their witness covers up to the essential dimension K.
struct GVector {
  std::vector<std::int64_t> g;  // g[0..K]
  int K = 0;
  std::vector<CoverWitness> witnesses;  // one per budget 0..K
};

/// Maximum number of points coverable by flats of dimension >= 1 with
/// total dimension <= budget, with a deterministic minimum-cardinality
/// witness. Exact branch-and-bound over the spanned flats of the config
/// (restricting to spanned flats is lossless: replacing each flat of a
/// cover by the closure of the points it covers, and closures that
/// degenerate to single points by a spanned line through the point, never
/// increases the total dimension).
std::pair<std::int64_t, CoverWitness> max_coverage(const Config& config, int budget,
                                                   int threads = 0);

/// Essential dimension K and a witness cover of all points.
/// Conventions: K of the empty config is 0; K of a single point is 1
/// (an arbitrary line through it, which is the cheapest admissible flat).
std::pair<int, CoverWitness> essential_dimension(const Config& config, int threads = 0);

/// g_0..g_K with witnesses.
GVector g_vector(const Config& config, int threads = 0);

/// g-vector evaluated on an existing enumeration; the ranks must reach the
/// dimension of the config's closure.
GVector g_vector_from_ranks(const Config& config,
                            const std::vector<std::vector<FlatRecord>>& ranks);

/// Minimality audit: true iff for every subset A of the witness flats
/// with |A| >= 2 the dimensions of the intersections with `probe` sum to
/// less than dim(probe).
bool check_G_minimality(const Config& config, const CoverWitness& witness, const Flat& probe);

/// Exact evaluation of the projection-degeneracy inequalities for a
/// budget k < K: with A the points covered by G_k and p a config point
/// outside A, checks g_i(pi_p(A)) <= g_i(A) + k^2 for 0 <= i <= k-1 and
/// |pi_p(A)| >= |A| - k^2.
struct ProjectionDegeneracyReport {
  int k = 0;
  int point = 0;
  std::int64_t a_size = 0;
  std::int64_t image_size = 0;
  bool size_ok = false;  // |pi_p(A)| >= |A| - k^2
  struct Row {
    int i;
    std::int64_t g_image;   // g_i(pi_p(A))
    std::int64_t g_a;       // g_i(A)
    bool ok;                // g_image <= g_a + k^2
  };
  std::vector<Row> rows;
  bool all_ok() const;
};

ProjectionDegeneracyReport projection_degeneracy_check(const Config& config, int k,
                                                       int point_index, int threads = 0);

}  // namespace flatspan
