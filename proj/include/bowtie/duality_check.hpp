#pragma once

// End-to-end comparison of the two constructions attached to a matched pair:
// the equivariantization of the pointed crossed action on one side, and the
// bimodule model of the dual of the bicrossed product on the other. The two
// rings are computed independently and compared through a based-ring
// isomorphism search; the extension-shape and exact-factorization checks ride
// along.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bicrossed_product.hpp"
#include "crossed_action.hpp"
#include "dual_category.hpp"
#include "equivariantization.hpp"
#include "fusion_ring.hpp"
#include "matched_pair.hpp"

namespace bowtie {

struct DualityCheck {
  Equivariantization extension;  // ring of the crossed extension, with simples
  DualModel dual;                // ring of the dual model, with simples
  FiniteGroup product_group;     // the Zappa-Szep product the dual model lives over
  IsoSearch iso;                 // extension ring -> dual ring
  Report extension_report;       // subring / forgetful-map shape checks
  Report factorization_report;   // exact factorization of the bicrossed ring

  bool undecided() const { return iso.status == IsoSearch::Status::timeout; }
  bool ok() const {
    return iso.status == IsoSearch::Status::found && extension_report.ok() &&
           factorization_report.ok();
  }
};

/// Runs the whole pipeline for one matched pair. The dual side is computed
/// over the product group with the left factor embedded as {(g, e)}.
inline DualityCheck check_extension_duality(const MatchedPair& mp, std::uint64_t seed = 0,
                                            unsigned long long iso_budget = 10'000'000,
                                            int threads = 1, double fp_tol = 1e-6) {
  DualityCheck out;
  const CrossedActionData d = pointed_crossed_action(mp);
  out.extension = equivariantize_pointed(d, seed);

  out.product_group = zappa_szep(mp);
  std::vector<int> embedded;
  for (int g = 0; g < mp.g.n; ++g)
    embedded.push_back(zappa_index(mp, g, mp.gamma.identity));
  std::sort(embedded.begin(), embedded.end());
  out.dual = dual_ring_group_theoretical(out.product_group, Subgroup{embedded}, seed);

  out.iso = find_based_iso(out.extension.ring, out.dual.ring, iso_budget);
  out.extension_report = extension_checks(out.extension, d, seed);

  const BicrossedRing b = bicrossed_ring(d, threads);
  out.factorization_report =
      verify_exact_factorization(b.ring, b.pointed_side(), b.c_side(), fp_tol);
  return out;
}

}  // namespace bowtie
