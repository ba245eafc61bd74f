#pragma once

// Crossed actions of a matched pair (G, Gamma) on a fusion ring: a faithful
// Gamma-grading together with a right G-action on the labels, compatible with
// the grading through <| and with the tensor product through the twisted
// multiplicativity rule
//   N[a][b][c] = N[a <. (deg b |> g)][b <. g][c <. g].
// Coherence isomorphisms are strictified away; only their existence
// constraints on the structure constants remain.

#include <string>
#include <vector>

#include "fusion_ring.hpp"
#include "matched_pair.hpp"
#include "report.hpp"

namespace bowtie {

struct CrossedActionData {
  FusionRing ring;        // the acted-on ring C
  MatchedPair mp;         // (G, Gamma, |>, <|)
  Grading grading;        // Gamma-grading of C; grading.group must equal mp.gamma
  std::vector<int> act;   // [label * |G| + g] -> label, the right action <.

  int acted(int a, int g) const { return act[a * mp.g.n + g]; }
};

namespace detail {

inline bool same_group_table(const FiniteGroup& a, const FiniteGroup& b) {
  return a.n == b.n && a.table == b.table;
}

}  // namespace detail

/// Exhaustive check of every crossed-action invariant; violations carry
/// witness tuples over (label, label, label, g) style indices.
inline Report verify_crossed_action(const CrossedActionData& d) {
  Report rep;
  const int rank = d.ring.rank, ng = d.mp.g.n;
  if (static_cast<int>(d.act.size()) != rank * ng) {
    rep.add("shape", "action table is not rank x |G|");
    return rep;
  }
  for (int v : d.act)
    if (v < 0 || v >= rank) {
      rep.add("range", "action value out of range");
      return rep;
    }
  if (!detail::same_group_table(d.grading.group, d.mp.gamma)) {
    rep.add("grading-group", "grading group differs from Gamma of the matched pair");
    return rep;
  }
  {
    Report sub = verify_matched_pair(d.mp);
    for (auto& v : sub.items) rep.add("matched-pair/" + v.rule, v.witness);
  }
  {
    Report sub = validate_grading(d.ring, d.grading);
    for (auto& v : sub.items) rep.add("grading/" + v.rule, v.witness);
  }
  if (!rep.ok()) return rep;

  auto wit = [](std::initializer_list<int> xs) { return detail::tuple_witness(xs); };
  const int eg = d.mp.g.identity;
  for (int a = 0; a < rank; ++a) {
    if (d.acted(a, eg) != a) rep.add("action-identity", wit({a}));
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h)
        if (d.acted(d.acted(a, g), h) != d.acted(a, d.mp.g.mul(g, h)))
          rep.add("action-composition", wit({a, g, h}));
  }
  for (int g = 0; g < ng; ++g)
    if (d.acted(d.ring.unit, g) != d.ring.unit) rep.add("unit-fixed", wit({g}));
  for (int a = 0; a < rank; ++a)
    for (int g = 0; g < ng; ++g)
      if (d.grading.deg[d.acted(a, g)] != d.mp.right(d.grading.deg[a], g))
        rep.add("grading-equivariance", wit({a, g}));
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b)
      for (int c = 0; c < rank; ++c)
        for (int g = 0; g < ng; ++g) {
          const int ashift = d.acted(a, d.mp.left(d.grading.deg[b], g));
          if (d.ring.n(a, b, c) != d.ring.n(ashift, d.acted(b, g), d.acted(c, g)))
            rep.add("twisted-multiplicativity", wit({a, b, c, g}));
        }
  // a consequence of the above, checked to guard against table corruption
  for (int a = 0; a < rank; ++a)
    for (int g = 0; g < ng; ++g) {
      const int lhs = d.ring.dual[d.acted(a, d.mp.left(d.grading.deg[d.ring.dual[a]], g))];
      if (lhs != d.acted(d.ring.dual[a], g)) rep.add("dual-compatibility", wit({a, g}));
    }
  return rep;
}

/// The canonical pointed instance: C is the group ring of Gamma graded by
/// itself, and G acts on the labels through <|.
inline CrossedActionData pointed_crossed_action(const MatchedPair& mp) {
  CrossedActionData d;
  d.ring = group_ring(mp.gamma);
  d.mp = mp;
  d.grading.group = mp.gamma;
  d.grading.deg.resize(mp.gamma.n);
  for (int k = 0; k < mp.gamma.n; ++k) d.grading.deg[k] = k;
  d.act.resize(static_cast<std::size_t>(mp.gamma.n) * mp.g.n);
  for (int k = 0; k < mp.gamma.n; ++k)
    for (int g = 0; g < mp.g.n; ++g) d.act[k * mp.g.n + g] = mp.right(k, g);
  return d;
}

/// The ring-level matched pair of fusion categories induced by a crossed
/// action: the pointed side is graded by G and carries the left Gamma-action
/// k |> g; every coherence datum is an identity map.
struct CategoryMatchedPair {
  MatchedPair groups;
  FusionRing c;
  Grading c_grading;
  std::vector<int> c_act;             // right G-action on labels of c
  std::vector<int> pointed_left_act;  // [k * |G| + g] = k |> g on Irr(vec_G) = G
  bool gamma_is_identity = true;
  bool eta_is_identity = true;
  bool gamma0_is_identity = true;
  bool eta0_is_identity = true;
};

inline CategoryMatchedPair matched_pair_fc(const CrossedActionData& d) {
  Report rep = verify_crossed_action(d);
  if (!rep.ok())
    throw Error(Errc::axiom, "invalid crossed action: " + rep.items.front().rule + " at " +
                                 rep.items.front().witness);
  CategoryMatchedPair out;
  out.groups = d.mp;
  out.c = d.ring;
  out.c_grading = d.grading;
  out.c_act = d.act;
  out.pointed_left_act = d.mp.lact;
  return out;
}

}  // namespace bowtie
