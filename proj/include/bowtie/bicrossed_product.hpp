#pragma once

// The bicrossed product ring vec_G |><| C of a crossed action: labels are
// pairs (g, a) with product
//   (g, a) (g', a') = (g (deg a |> g'), a <. g' (x) a'),
// together with the ring-level exact-factorization checks.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "crossed_action.hpp"
#include "fusion_ring.hpp"
#include "report.hpp"

namespace bowtie {

struct BicrossedRing {
  FusionRing ring;  // labels (g, a) at index g * c_rank + a
  int g_order = 0;
  int c_rank = 0;

  int label(int g, int a) const { return g * c_rank + a; }
  /// The pointed side {(g, unit)}, a based subring isomorphic to vec_G.
  std::vector<int> pointed_side() const {
    std::vector<int> out;
    for (int g = 0; g < g_order; ++g) out.push_back(label(g, ring.unit % c_rank));
    return out;
  }
  /// The C side {(e, a)}, a based subring isomorphic to C.
  std::vector<int> c_side() const {
    std::vector<int> out;
    for (int a = 0; a < c_rank; ++a) out.push_back(label(ring.unit / c_rank, a));
    return out;
  }
};

/// Builds the bicrossed product ring. Duals are solved for from the pairing
/// N[x][y][unit] = 1 rather than taken from a formula; non-uniqueness there
/// signals invalid input. The result always passes full ring validation.
inline BicrossedRing bicrossed_ring(const CrossedActionData& d, int threads = 1) {
  {
    Report rep = verify_crossed_action(d);
    if (!rep.ok())
      throw Error(Errc::axiom, "invalid crossed action: " + rep.items.front().rule + " at " +
                                   rep.items.front().witness);
  }
  const int ng = d.mp.g.n, rc = d.ring.rank;
  BicrossedRing out;
  out.g_order = ng;
  out.c_rank = rc;
  out.ring = FusionRing::zero(ng * rc);
  out.ring.unit = out.label(d.mp.g.identity, d.ring.unit);
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < rc; ++a)
      out.ring.names[out.label(g, a)] = d.mp.g.names[g] + "⋈" + d.ring.names[a];

  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < rc; ++a)
      for (int gp = 0; gp < ng; ++gp)
        for (int ap = 0; ap < rc; ++ap) {
          const int h = d.mp.g.mul(g, d.mp.left(d.grading.deg[a], gp));
          const int ashift = d.acted(a, gp);
          for (int c = 0; c < rc; ++c) {
            const int mult = d.ring.n(ashift, ap, c);
            if (mult > 0) out.ring.n(out.label(g, a), out.label(gp, ap), out.label(h, c)) = mult;
          }
        }

  for (int x = 0; x < out.ring.rank; ++x) {
    int dual = -1;
    for (int y = 0; y < out.ring.rank; ++y) {
      const int v = out.ring.n(x, y, out.ring.unit);
      if (v == 1 && dual < 0)
        dual = y;
      else if (v != 0)
        throw Error(Errc::rigidity, "dual of label " + std::to_string(x) +
                                        " is not unique (invalid input data)");
    }
    if (dual < 0)
      throw Error(Errc::rigidity, "label " + std::to_string(x) + " has no dual");
    out.ring.dual[x] = dual;
  }

  Report rep = validate_fusion_ring(out.ring, threads);
  if (!rep.ok())
    throw Error(Errc::internal, "bicrossed ring failed validation: " + rep.items.front().rule +
                                    " at " + rep.items.front().witness);
  return out;
}

/// Ring-level exact factorization: the two tensor-closed label subsets must
/// meet only in the unit, FP-dimensions must multiply, and every label of the
/// ambient ring must occur in some product a (x) c.
inline Report verify_exact_factorization(const FusionRing& b, const std::vector<int>& a_labels,
                                         const std::vector<int>& c_labels,
                                         double fp_tol = 1e-6) {
  for (const auto* side : {&a_labels, &c_labels}) {
    bool has_unit = false;
    for (int x : *side) {
      if (x < 0 || x >= b.rank) throw Error(Errc::subring, "label index out of range");
      if (x == b.unit) has_unit = true;
    }
    if (!has_unit) throw Error(Errc::subring, "label subset misses the unit");
    for (int x : *side)
      for (int y : *side)
        for (int c = 0; c < b.rank; ++c)
          if (b.n(x, y, c) > 0 &&
              std::find(side->begin(), side->end(), c) == side->end())
            throw Error(Errc::subring, "label subset is not tensor-closed at " +
                                           detail::tuple_witness({x, y, c}));
  }
  Report rep;
  for (int x : a_labels)
    if (x != b.unit && std::find(c_labels.begin(), c_labels.end(), x) != c_labels.end())
      rep.add("intersection", "label " + std::to_string(x) + " lies in both subsets");

  const FpDims d = fpdim(b);
  double fa = 0, fc = 0;
  for (int x : a_labels) fa += d.per_label[x] * d.per_label[x];
  for (int x : c_labels) fc += d.per_label[x] * d.per_label[x];
  if (std::abs(d.total - fa * fc) > fp_tol)
    rep.add("fpdim-multiplicativity", "|" + std::to_string(d.total) + " - " +
                                          std::to_string(fa) + " * " + std::to_string(fc) + "|");

  for (int t = 0; t < b.rank; ++t) {
    bool hit = false;
    for (int x : a_labels) {
      for (int y : c_labels)
        if (b.n(x, y, t) > 0) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (!hit) rep.add("exhaustive-product", "label " + std::to_string(t) + " unreachable");
  }
  return rep;
}

}  // namespace bowtie
