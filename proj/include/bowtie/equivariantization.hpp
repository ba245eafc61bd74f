#pragma once

// The crossed extension of a pointed base: equivariant objects (X, {u_g}),
// decomposition of induced objects into simples, the full fusion ring of the
// extension, and the orbit/stabilizer census available for general bases.
//
// Conventions for the strict pointed case: an equivariant structure is a
// family of matrices u_g on the underlying space with u_{gh} = u_h u_g, where
// u_g moves a slot of degree k into degree k <. g. The tensor product of
// (X, u) and (Y, v) carries the structure acting on the (i, j) slot pair as
// u_{(deg j) |> g} (x) v_g, and morphisms are the degree-preserving maps F
// with v_g F = F u_g.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "crossed_action.hpp"
#include "fusion_ring.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace bowtie {

inline constexpr int kMaxExtensionSize = 72;  // cap on |G| * |Gamma|

struct EquivariantObject {
  std::vector<int> slot_deg;  // Gamma element per basis slot
  std::vector<Matrix> u;      // one matrix per element of G

  int dim() const { return static_cast<int>(slot_deg.size()); }
};

/// Invertibility, degree compatibility and the cocycle law u_{gh} = u_h u_g,
/// checked for all pairs.
inline Report verify_equivariant_structure(const EquivariantObject& x, const CrossedActionData& d,
                                           double tol = kDefaultTol) {
  Report rep;
  const int ng = d.mp.g.n, n = x.dim();
  if (static_cast<int>(x.u.size()) != ng) {
    rep.add("shape", "one structure matrix per group element expected");
    return rep;
  }
  for (int g = 0; g < ng; ++g)
    if (x.u[g].rows() != n || x.u[g].cols() != n) {
      rep.add("shape", "structure matrix " + std::to_string(g) + " has wrong size");
      return rep;
    }
  for (int g = 0; g < ng; ++g)
    if (rank(x.u[g], tol) != n) rep.add("invertibility", detail::tuple_witness({g}));
  for (int g = 0; g < ng; ++g)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (std::abs(x.u[g](j, i)) > 1e-9 &&
            x.slot_deg[j] != d.mp.right(x.slot_deg[i], g))
          rep.add("degree", detail::tuple_witness({g, j, i}));
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h) {
      const double res = (x.u[d.mp.g.mul(g, h)] - x.u[h] * x.u[g]).cwiseAbs().maxCoeff();
      if (res > 1e-6)
        rep.add("cocycle", detail::tuple_witness({g, h}) + " residual " + std::to_string(res));
    }
  return rep;
}

struct EquivariantSimple {
  std::vector<int> orbit;  // sorted Gamma indices supporting the object
  int stabilizer_order = 0;
  int dim = 0;
  EquivariantObject object;
  double fp = 0.0;
};

struct Equivariantization {
  FusionRing ring;
  std::vector<EquivariantSimple> simples;
};

namespace detail {

inline int equivariant_hom_dim(const EquivariantObject& x, const EquivariantObject& y,
                               const std::vector<int>& gens) {
  std::vector<Matrix> on_source, on_target;
  for (int g : gens) {
    on_source.push_back(x.u[g]);
    on_target.push_back(y.u[g]);
  }
  return intertwiner_dimension(on_source, on_target, x.slot_deg, y.slot_deg);
}

// The tensor object of two equivariant objects under the crossed action.
inline EquivariantObject equivariant_tensor(const EquivariantObject& x,
                                            const EquivariantObject& y,
                                            const CrossedActionData& d) {
  const int nx = x.dim(), ny = y.dim(), ng = d.mp.g.n;
  EquivariantObject w;
  w.slot_deg.resize(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      w.slot_deg[i * ny + j] = d.mp.gamma.mul(x.slot_deg[i], y.slot_deg[j]);
  w.u.assign(ng, Matrix::Zero(nx * ny, nx * ny));
  for (int g = 0; g < ng; ++g)
    for (int j = 0; j < ny; ++j) {
      const Matrix& ux = x.u[d.mp.left(y.slot_deg[j], g)];
      for (int j2 = 0; j2 < ny; ++j2) {
        const Complex vy = y.u[g](j2, j);
        if (std::abs(vy) < 1e-14) continue;
        for (int i = 0; i < nx; ++i)
          for (int i2 = 0; i2 < nx; ++i2) {
            const Complex c = ux(i2, i) * vy;
            if (std::abs(c) > 1e-14) w.u[g](i2 * ny + j2, i * ny + j) = c;
          }
      }
    }
  return w;
}

inline std::vector<std::vector<int>> action_orbits(const CrossedActionData& d, int count,
                                                   bool on_labels) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(count, false);
  for (int a = 0; a < count; ++a) {
    if (seen[a]) continue;
    std::vector<int> orbit{a}, queue{a};
    seen[a] = true;
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (int g = 0; g < d.mp.g.n; ++g) {
        const int y = on_labels ? d.acted(x, g) : d.mp.right(x, g);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace detail

/// Equivariantizes a pointed crossed action (C must be the group ring of
/// Gamma graded by itself). Induced objects over each orbit are decomposed
/// through the commutant; completeness of the simples is certified by
/// sum dim^2 = |G| |Gamma| before any fusion is computed.
inline Equivariantization equivariantize_pointed(const CrossedActionData& d,
                                                 std::uint64_t seed = 0) {
  {
    Report rep = verify_crossed_action(d);
    if (!rep.ok())
      throw Error(Errc::axiom, "invalid crossed action: " + rep.items.front().rule + " at " +
                                   rep.items.front().witness);
  }
  const int ng = d.mp.g.n, nk = d.mp.gamma.n;
  if (d.ring.rank != nk) throw Error(Errc::domain, "base is not the group ring of Gamma");
  for (int a = 0; a < nk; ++a) {
    if (d.grading.deg[a] != a) throw Error(Errc::domain, "grading degree map must be the identity");
    for (int b = 0; b < nk; ++b)
      for (int c = 0; c < nk; ++c)
        if (d.ring.n(a, b, c) != (c == d.mp.gamma.mul(a, b) ? 1 : 0))
          throw Error(Errc::domain, "base ring is not the group ring of Gamma");
  }
  if (ng * nk > kMaxExtensionSize)
    throw Error(Errc::size, "|G| * |Gamma| exceeds " + std::to_string(kMaxExtensionSize));

  const std::vector<int> gens = generating_set(d.mp.g);
  std::vector<EquivariantSimple> simples;

  for (const std::vector<int>& orbit : detail::action_orbits(d, nk, true)) {
    const int base = orbit.front();
    // induced object: one slot per group element, right translation
    EquivariantObject ind;
    ind.slot_deg.resize(ng);
    for (int g = 0; g < ng; ++g) ind.slot_deg[g] = d.acted(base, g);
    ind.u.assign(ng, Matrix::Zero(ng, ng));
    for (int h = 0; h < ng; ++h)
      for (int g = 0; g < ng; ++g) ind.u[h](d.mp.g.mul(g, h), g) = 1.0;

    std::vector<Matrix> action;
    for (int g : gens) action.push_back(ind.u[g]);
    Matrix degree_marker = Matrix::Zero(ng, ng);
    for (int g = 0; g < ng; ++g) degree_marker(g, g) = static_cast<double>(ind.slot_deg[g]);
    action.push_back(degree_marker);

    int stab = 0;
    for (int g = 0; g < ng; ++g)
      if (d.acted(base, g) == base) ++stab;

    for (const auto& blk : split_commutant(action, seed).blocks) {
      EquivariantSimple s;
      Matrix basis;
      detail::degree_adapt(blk.basis, ind.slot_deg, s.object.slot_deg, basis);
      s.object.u.reserve(ng);
      for (int g = 0; g < ng; ++g) s.object.u.push_back(basis.adjoint() * ind.u[g] * basis);
      s.orbit = orbit;
      s.stabilizer_order = stab;
      s.dim = s.object.dim();
      s.fp = static_cast<double>(s.dim);
      bool duplicate = false;
      for (const EquivariantSimple& t : simples) {
        if (t.dim != s.dim || t.orbit != s.orbit) continue;
        if (detail::equivariant_hom_dim(s.object, t.object, gens) > 0) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) simples.push_back(std::move(s));
    }
  }

  long long total = 0;
  for (const auto& s : simples) total += static_cast<long long>(s.dim) * s.dim;
  if (total != static_cast<long long>(ng) * nk)
    throw Error(Errc::splitting, "completeness failed: sum dim^2 = " + std::to_string(total) +
                                     " != " + std::to_string(ng * nk));

  // canonical label order, independent of the splitting seed
  auto r6 = [](double v) { return std::llround(v * 1e6); };
  std::sort(simples.begin(), simples.end(),
            [&](const EquivariantSimple& a, const EquivariantSimple& b) {
              if (a.orbit.front() != b.orbit.front()) return a.orbit.front() < b.orbit.front();
              if (a.dim != b.dim) return a.dim < b.dim;
              for (int g = 0; g < ng; ++g) {
                const Complex ta = a.object.u[g].trace(), tb = b.object.u[g].trace();
                if (r6(ta.real()) != r6(tb.real())) return r6(ta.real()) > r6(tb.real());
                if (r6(ta.imag()) != r6(tb.imag())) return r6(ta.imag()) < r6(tb.imag());
              }
              return false;
            });

  const int rank = static_cast<int>(simples.size());
  Equivariantization out;
  out.ring = FusionRing::zero(rank);
  int unit = -1;
  for (int i = 0; i < rank; ++i) {
    const auto& s = simples[i];
    if (s.dim == 1 && s.orbit == std::vector<int>{d.mp.gamma.identity}) {
      bool trivial = true;
      for (int g = 0; g < ng; ++g) trivial &= std::abs(s.object.u[g](0, 0) - 1.0) < 1e-6;
      if (trivial) unit = i;
    }
  }
  if (unit < 0) throw Error(Errc::internal, "trivial equivariant object not found");
  out.ring.unit = unit;
  for (int i = 0; i < rank; ++i) out.ring.names[i] = "s" + std::to_string(i);

  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      const EquivariantObject w =
          detail::equivariant_tensor(simples[a].object, simples[b].object, d);
      for (int c = 0; c < rank; ++c)
        out.ring.n(a, b, c) = detail::equivariant_hom_dim(w, simples[c].object, gens);
    }

  for (int x = 0; x < rank; ++x) {
    int dual = -1;
    for (int y = 0; y < rank; ++y) {
      const int v = out.ring.n(x, y, unit);
      if (v == 1 && dual < 0)
        dual = y;
      else if (v != 0)
        throw Error(Errc::rigidity, "dual of simple " + std::to_string(x) + " is not unique");
    }
    if (dual < 0) throw Error(Errc::rigidity, "simple " + std::to_string(x) + " has no dual");
    out.ring.dual[x] = dual;
  }

  Report rep = validate_fusion_ring(out.ring);
  if (!rep.ok())
    throw Error(Errc::internal, "equivariantization failed ring validation: " +
                                    rep.items.front().rule + " at " + rep.items.front().witness);
  out.simples = std::move(simples);
  return out;
}

struct CensusEntry {
  std::vector<int> orbit;  // label indices of the base ring
  int stabilizer_order = 0;
  int irrep_count = 0;
  std::vector<double> fp_dims;
};

struct Census {
  std::vector<CensusEntry> entries;
  double fp_square_sum = 0.0;
  double expected = 0.0;  // |G| * FPdim(C)
  bool consistent = false;
};

/// Orbit/stabilizer bookkeeping of the extension for an arbitrary base:
/// simples, stabilizer irreducibles and FP-dimensions, but no fusion (that
/// would require isomorphism-level action data the input cannot carry).
inline Census equivariant_census_general(const CrossedActionData& d, std::uint64_t seed = 0) {
  {
    Report rep = verify_crossed_action(d);
    if (!rep.ok())
      throw Error(Errc::axiom, "invalid crossed action: " + rep.items.front().rule);
  }
  const FpDims base = fpdim(d.ring);
  Census out;
  out.expected = d.mp.g.n * base.total;
  for (const std::vector<int>& orbit : detail::action_orbits(d, d.ring.rank, true)) {
    CensusEntry e;
    e.orbit = orbit;
    std::vector<int> stab_elems;
    for (int g = 0; g < d.mp.g.n; ++g)
      if (d.acted(orbit.front(), g) == orbit.front()) stab_elems.push_back(g);
    e.stabilizer_order = static_cast<int>(stab_elems.size());
    const RestrictedGroup stab = subgroup_to_group(d.mp.g, Subgroup{stab_elems});
    const FusionRing reps = rep_ring(stab.group, seed);
    e.irrep_count = reps.rank;
    double orbit_fp = 0.0;
    for (int a : orbit) orbit_fp += base.per_label[a];
    const FpDims degs = fpdim(reps);
    for (int i = 0; i < reps.rank; ++i) {
      const double fp = degs.per_label[i] * orbit_fp;
      e.fp_dims.push_back(fp);
      out.fp_square_sum += fp * fp;
    }
    std::sort(e.fp_dims.begin(), e.fp_dims.end());
    out.entries.push_back(std::move(e));
  }
  out.consistent = std::abs(out.fp_square_sum - out.expected) <= 1e-6;
  return out;
}

/// Shape checks on an equivariantized ring: the trivial-orbit simples form a
/// based subring isomorphic to the representation ring of G, the forgetful
/// assignment is a ring homomorphism onto the group ring of Gamma, and every
/// Gamma-label is hit.
inline Report extension_checks(const Equivariantization& k, const CrossedActionData& d,
                               std::uint64_t seed = 0) {
  Report rep;
  const int rank = k.ring.rank, nk = d.mp.gamma.n;
  std::vector<int> trivial_orbit;
  for (int i = 0; i < rank; ++i)
    if (k.simples[i].orbit == std::vector<int>{d.mp.gamma.identity}) trivial_orbit.push_back(i);
  try {
    const FusionRing sub = restrict_to_labels(k.ring, trivial_orbit);
    const FusionRing reps = rep_ring(d.mp.g, seed);
    const IsoSearch iso = find_based_iso(sub, reps);
    if (iso.status != IsoSearch::Status::found)
      rep.add("trivial-orbit-subring", "no based isomorphism with the representation ring");
  } catch (const Error& e) {
    rep.add("trivial-orbit-subring", e.what());
  }

  // forgetful image: graded dimension vector over Gamma
  std::vector<std::vector<long long>> forget(rank, std::vector<long long>(nk, 0));
  for (int i = 0; i < rank; ++i)
    for (int dd : k.simples[i].object.slot_deg) ++forget[i][dd];
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      std::vector<long long> lhs(nk, 0), rhs(nk, 0);
      for (int x = 0; x < nk; ++x)
        for (int y = 0; y < nk; ++y) lhs[d.mp.gamma.mul(x, y)] += forget[a][x] * forget[b][y];
      for (int c = 0; c < rank; ++c)
        if (const int m = k.ring.n(a, b, c); m > 0)
          for (int x = 0; x < nk; ++x) rhs[x] += static_cast<long long>(m) * forget[c][x];
      if (lhs != rhs) rep.add("forgetful-multiplicative", detail::tuple_witness({a, b}));
    }
  for (int x = 0; x < nk; ++x) {
    bool hit = false;
    for (int i = 0; i < rank && !hit; ++i) hit = forget[i][x] > 0;
    if (!hit) rep.add("forgetful-surjective", "degree " + std::to_string(x) + " not hit");
  }
  return rep;
}

}  // namespace bowtie
