#pragma once

// Shared constructions for the test suites.

#include <bowtie/crossed_action.hpp>
#include <bowtie/group_catalog.hpp>
#include <bowtie/matched_pair.hpp>

namespace bowtie::testing {

inline Subgroup subgroup_of_order(const FiniteGroup& g, int order) {
  for (int x = 0; x < g.n; ++x)
    if (g.element_order(x) == order) return subgroup_generated(g, {x});
  throw std::runtime_error("no cyclic subgroup of requested order");
}

/// The matched pair of S3 = Z2 . Z3 (|> trivial, <| inversion).
inline MatchedPair s3_matched_pair() {
  const FiniteGroup s3 = symmetric_group(3);
  return derive_matched_pair(s3, subgroup_of_order(s3, 2), subgroup_of_order(s3, 3));
}

/// Z2 acting on the Tambara-Yamagami ring of Z_n by inversion on the
/// invertibles, fixing m, over the trivial matched pair (Z2, Z2).
inline CrossedActionData ty_inversion_action(int n) {
  CrossedActionData d;
  d.ring = tambara_yamagami(cyclic_group(n));
  d.mp = trivial_matched_pair(cyclic_group(2), cyclic_group(2));
  d.grading = universal_grading(d.ring);
  const int m = n;
  d.act.assign(static_cast<std::size_t>(d.ring.rank) * 2, 0);
  for (int a = 0; a <= m; ++a) {
    d.act[a * 2 + 0] = a;
    d.act[a * 2 + 1] = a == m ? m : (n - a) % n;
  }
  return d;
}

/// Does the label permutation preserve every structure constant?
inline bool is_label_automorphism(const FusionRing& r, const std::vector<int>& perm) {
  if (perm[r.unit] != r.unit) return false;
  for (int a = 0; a < r.rank; ++a)
    for (int b = 0; b < r.rank; ++b)
      for (int c = 0; c < r.rank; ++c)
        if (r.n(a, b, c) != r.n(perm[a], perm[b], perm[c])) return false;
  return true;
}

}  // namespace bowtie::testing
