#pragma once

// Matched pairs of finite groups: derivation from an exact factorization,
// axiom verification, and the Zappa-Szep (bicrossed) product group.
//
// Data: groups G and Gamma with a left action |> of Gamma on the set G and a
// right action <| of G on the set Gamma, subject to
//   (k t) <| g = (k <| (t |> g)) (t <| g)
//   k |> (g h) = (k |> g) ((k <| g) |> h)
// plus the unit conditions k |> e = e and e <| g = e.

#include <string>
#include <vector>

#include "group.hpp"
#include "report.hpp"

namespace bowtie {

struct MatchedPair {
  FiniteGroup g;      // the factor written on the left of Sigma = G Gamma
  FiniteGroup gamma;  // the factor written on the right
  std::vector<int> lact;  // [k * |G| + x] = k |> x, a G-index
  std::vector<int> ract;  // [k * |G| + x] = k <| x, a Gamma-index

  int left(int k, int x) const { return lact[k * g.n + x]; }
  int right(int k, int x) const { return ract[k * g.n + x]; }
};

/// Every matched-pair axiom, checked exhaustively; violations carry witness
/// tuples (k, t, x) or (k, x, y).
inline Report verify_matched_pair(const MatchedPair& mp) {
  Report rep;
  const int ng = mp.g.n, nk = mp.gamma.n;
  if (static_cast<int>(mp.lact.size()) != ng * nk || static_cast<int>(mp.ract.size()) != ng * nk) {
    rep.add("table-shape", "action tables do not match |Gamma| x |G|");
    return rep;
  }
  for (int v : mp.lact)
    if (v < 0 || v >= ng) {
      rep.add("table-range", "left action value out of range");
      return rep;
    }
  for (int v : mp.ract)
    if (v < 0 || v >= nk) {
      rep.add("table-range", "right action value out of range");
      return rep;
    }
  const int eg = mp.g.identity, ek = mp.gamma.identity;
  auto wit2 = [&](int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  auto wit3 = [&](int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  for (int x = 0; x < ng; ++x)
    if (mp.left(ek, x) != x) rep.add("left-action-identity", wit2(ek, x));
  for (int k = 0; k < nk; ++k)
    for (int t = 0; t < nk; ++t)
      for (int x = 0; x < ng; ++x)
        if (mp.left(mp.gamma.mul(k, t), x) != mp.left(k, mp.left(t, x)))
          rep.add("left-action-composition", wit3(k, t, x));
  for (int k = 0; k < nk; ++k)
    if (mp.right(k, eg) != k) rep.add("right-action-identity", wit2(k, eg));
  for (int k = 0; k < nk; ++k)
    for (int x = 0; x < ng; ++x)
      for (int y = 0; y < ng; ++y)
        if (mp.right(k, mp.g.mul(x, y)) != mp.right(mp.right(k, x), y))
          rep.add("right-action-composition", wit3(k, x, y));
  for (int k = 0; k < nk; ++k)
    if (mp.left(k, eg) != eg) rep.add("unit-left", wit2(k, eg));
  for (int x = 0; x < ng; ++x)
    if (mp.right(ek, x) != ek) rep.add("unit-right", wit2(ek, x));
  // (k t) <| x = (k <| (t |> x)) (t <| x)
  for (int k = 0; k < nk; ++k)
    for (int t = 0; t < nk; ++t)
      for (int x = 0; x < ng; ++x)
        if (mp.right(mp.gamma.mul(k, t), x) !=
            mp.gamma.mul(mp.right(k, mp.left(t, x)), mp.right(t, x)))
          rep.add("compatibility-1", wit3(k, t, x));
  // k |> (x y) = (k |> x) ((k <| x) |> y)
  for (int k = 0; k < nk; ++k)
    for (int x = 0; x < ng; ++x)
      for (int y = 0; y < ng; ++y)
        if (mp.left(k, mp.g.mul(x, y)) !=
            mp.g.mul(mp.left(k, x), mp.left(mp.right(k, x), y)))
          rep.add("compatibility-2", wit3(k, x, y));
  return rep;
}

/// Reads the actions off an exact factorization Sigma = G Gamma: each product
/// k * x factors uniquely as x' * k', giving k |> x = x' and k <| x = k'.
/// Local indices follow the subgroups' sorted element lists. Only this
/// decomposition order is supported; the opposite one yields the opposite
/// group and is intentionally left out.
inline MatchedPair derive_matched_pair(const FiniteGroup& sigma, const Subgroup& g_sub,
                                       const Subgroup& gamma_sub) {
  if (!is_subgroup(sigma, g_sub) || !is_subgroup(sigma, gamma_sub))
    throw Error(Errc::containment, "factors must be subgroups");
  int common = 0;
  for (int x : g_sub.elements)
    if (gamma_sub.contains(x)) ++common;
  if (common != 1 || g_sub.order() * gamma_sub.order() != sigma.n)
    throw Error(Errc::factorization,
                "not an exact factorization: |G meet Gamma| = " + std::to_string(common) +
                    ", |G||Gamma| = " + std::to_string(g_sub.order() * gamma_sub.order()));
  MatchedPair mp;
  RestrictedGroup rg = subgroup_to_group(sigma, g_sub);
  RestrictedGroup rk = subgroup_to_group(sigma, gamma_sub);
  mp.g = std::move(rg.group);
  mp.gamma = std::move(rk.group);
  const int ng = mp.g.n, nk = mp.gamma.n;
  std::vector<std::pair<int, int>> factor(sigma.n, {-1, -1});
  for (int x = 0; x < ng; ++x)
    for (int k = 0; k < nk; ++k) {
      const int prod = sigma.mul(rg.to_parent[x], rk.to_parent[k]);
      if (factor[prod].first >= 0)
        throw Error(Errc::internal, "factorization map is not injective");
      factor[prod] = {x, k};
    }
  mp.lact.resize(static_cast<std::size_t>(ng) * nk);
  mp.ract.resize(static_cast<std::size_t>(ng) * nk);
  for (int k = 0; k < nk; ++k)
    for (int x = 0; x < ng; ++x) {
      const auto [xp, kp] = factor[sigma.mul(rk.to_parent[k], rg.to_parent[x])];
      mp.lact[k * ng + x] = xp;
      mp.ract[k * ng + x] = kp;
    }
  return mp;
}

/// Pair index used by zappa_szep: (x, k) at x * |Gamma| + k.
inline int zappa_index(const MatchedPair& mp, int x, int k) { return x * mp.gamma.n + k; }

/// The group on G x Gamma with product (h, k)(x, t) = (h (k |> x), (k <| x) t).
inline FiniteGroup zappa_szep(const MatchedPair& mp) {
  Report rep = verify_matched_pair(mp);
  if (!rep.ok())
    throw Error(Errc::axiom, "invalid matched pair: " + rep.items.front().rule + " at " +
                                 rep.items.front().witness);
  const int ng = mp.g.n, nk = mp.gamma.n, n = ng * nk;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int h = 0; h < ng; ++h)
    for (int k = 0; k < nk; ++k) {
      names[zappa_index(mp, h, k)] = mp.g.names[h] + "." + mp.gamma.names[k];
      for (int x = 0; x < ng; ++x)
        for (int u = 0; u < nk; ++u)
          t[zappa_index(mp, h, k)][zappa_index(mp, x, u)] =
              zappa_index(mp, mp.g.mul(h, mp.left(k, x)), mp.gamma.mul(mp.right(k, x), u));
    }
  return group_from_table(t, std::move(names));
}

/// The trivial matched pair on (G, Gamma): both actions do nothing, so the
/// product group is the direct product.
inline MatchedPair trivial_matched_pair(FiniteGroup g, FiniteGroup gamma) {
  MatchedPair mp;
  mp.g = std::move(g);
  mp.gamma = std::move(gamma);
  mp.lact.resize(static_cast<std::size_t>(mp.g.n) * mp.gamma.n);
  mp.ract.resize(static_cast<std::size_t>(mp.g.n) * mp.gamma.n);
  for (int k = 0; k < mp.gamma.n; ++k)
    for (int x = 0; x < mp.g.n; ++x) {
      mp.lact[k * mp.g.n + x] = x;
      mp.ract[k * mp.g.n + x] = k;
    }
  return mp;
}

}  // namespace bowtie
