#pragma once

// Independent model of the dual category of a pointed ambient with respect to
// a subgroup-type module category: H-bimodules inside Sigma-graded vector
// spaces, with trivial cocycles. Simples are extracted from free bimodules on
// double cosets, the tensor product is the relative tensor product over the
// group algebra of H, and the Grothendieck ring is assembled from intertwiner
// counts. Nothing here uses the crossed-extension construction, so comparing
// the two rings is a meaningful check.
//
// Conventions: left actions satisfy L_g L_g' = L_{gg'} and move degree s to
// g s; right actions satisfy R_h' R_h = R_{hh'} (apply R_h first) and move
// degree s to s h; the two commute.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "fusion_ring.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace bowtie {

inline constexpr int kMaxDualOrder = 24;  // cap on |Sigma|

struct BimoduleObject {
  std::vector<int> slot_deg;  // Sigma element per slot
  std::vector<Matrix> left;   // one matrix per element of H, in local H order
  std::vector<Matrix> right;

  int dim() const { return static_cast<int>(slot_deg.size()); }
};

namespace detail {

struct BimoduleContext {
  const FiniteGroup& sigma;
  FiniteGroup h;                // H as a standalone group
  std::vector<int> to_parent;   // local H index -> Sigma index
  std::vector<int> gens;        // local generating set
};

inline BimoduleContext make_bimodule_context(const FiniteGroup& sigma, const Subgroup& h) {
  RestrictedGroup rg = subgroup_to_group(sigma, h);
  BimoduleContext ctx{sigma, std::move(rg.group), std::move(rg.to_parent), {}};
  ctx.gens = generating_set(ctx.h);
  return ctx;
}

inline int bimodule_hom_dim(const BimoduleObject& x, const BimoduleObject& y,
                            const BimoduleContext& ctx) {
  std::vector<Matrix> on_source, on_target;
  for (int g : ctx.gens) {
    on_source.push_back(x.left[g]);
    on_target.push_back(y.left[g]);
  }
  for (int g : ctx.gens) {
    on_source.push_back(x.right[g]);
    on_target.push_back(y.right[g]);
  }
  return intertwiner_dimension(on_source, on_target, x.slot_deg, y.slot_deg);
}

}  // namespace detail

/// The unit: the group algebra of H as a bimodule over itself.
inline BimoduleObject unit_bimodule(const FiniteGroup& sigma, const Subgroup& h) {
  const RestrictedGroup rg = subgroup_to_group(sigma, h);
  const int m = rg.group.n;
  BimoduleObject out;
  out.slot_deg = rg.to_parent;
  out.left.assign(m, Matrix::Zero(m, m));
  out.right.assign(m, Matrix::Zero(m, m));
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < m; ++x) {
      out.left[g](rg.group.mul(g, x), x) = 1.0;
      out.right[g](rg.group.mul(x, g), x) = 1.0;
    }
  return out;
}

/// The free bimodule on a double-coset representative: basis H x H with
/// degree a s b, H translating the two legs.
inline BimoduleObject free_bimodule(const FiniteGroup& sigma, const Subgroup& h, int coset_rep) {
  const RestrictedGroup rg = subgroup_to_group(sigma, h);
  const int m = rg.group.n;
  BimoduleObject out;
  out.slot_deg.resize(static_cast<std::size_t>(m) * m);
  out.left.assign(m, Matrix::Zero(m * m, m * m));
  out.right.assign(m, Matrix::Zero(m * m, m * m));
  auto slot = [m](int a, int b) { return a * m + b; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out.slot_deg[slot(a, b)] =
          sigma.mul(sigma.mul(rg.to_parent[a], coset_rep), rg.to_parent[b]);
  for (int g = 0; g < m; ++g)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        out.left[g](slot(rg.group.mul(g, a), b), slot(a, b)) = 1.0;
        out.right[g](slot(a, rg.group.mul(b, g)), slot(a, b)) = 1.0;
      }
  return out;
}

/// Action laws, commutation and degree compatibility, checked for all pairs.
inline Report verify_bimodule(const BimoduleObject& x, const FiniteGroup& sigma,
                              const Subgroup& h) {
  Report rep;
  const RestrictedGroup rg = subgroup_to_group(sigma, h);
  const int m = rg.group.n, n = x.dim();
  if (static_cast<int>(x.left.size()) != m || static_cast<int>(x.right.size()) != m) {
    rep.add("shape", "one action matrix per subgroup element expected");
    return rep;
  }
  for (int g = 0; g < m; ++g) {
    if (rank(x.left[g]) != n) rep.add("left-invertibility", detail::tuple_witness({g}));
    if (rank(x.right[g]) != n) rep.add("right-invertibility", detail::tuple_witness({g}));
  }
  for (int g = 0; g < m; ++g)
    for (int gp = 0; gp < m; ++gp) {
      if ((x.left[rg.group.mul(g, gp)] - x.left[g] * x.left[gp]).cwiseAbs().maxCoeff() > 1e-6)
        rep.add("left-homomorphism", detail::tuple_witness({g, gp}));
      if ((x.right[rg.group.mul(g, gp)] - x.right[gp] * x.right[g]).cwiseAbs().maxCoeff() > 1e-6)
        rep.add("right-action", detail::tuple_witness({g, gp}));
      if ((x.left[g] * x.right[gp] - x.right[gp] * x.left[g]).cwiseAbs().maxCoeff() > 1e-6)
        rep.add("commutation", detail::tuple_witness({g, gp}));
    }
  for (int g = 0; g < m; ++g)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (std::abs(x.left[g](j, i)) > 1e-9 &&
            x.slot_deg[j] != sigma.mul(rg.to_parent[g], x.slot_deg[i]))
          rep.add("left-degree", detail::tuple_witness({g, j, i}));
        if (std::abs(x.right[g](j, i)) > 1e-9 &&
            x.slot_deg[j] != sigma.mul(x.slot_deg[i], rg.to_parent[g]))
          rep.add("right-degree", detail::tuple_witness({g, j, i}));
      }
  return rep;
}

/// Relative tensor product over the group algebra of H: the product space
/// modulo the span of x.h (x) y - x (x) h.y, realized on the orthogonal
/// complement of the relation span (degree by degree). The quotient dimension
/// is dim(X) dim(Y) / |H| since H acts freely on degrees.
inline BimoduleObject bimodule_tensor(const BimoduleObject& x, const BimoduleObject& y,
                                      const FiniteGroup& sigma, const Subgroup& h) {
  const detail::BimoduleContext ctx = detail::make_bimodule_context(sigma, h);
  const int nx = x.dim(), ny = y.dim(), m = ctx.h.n;
  const int np = nx * ny;
  std::vector<int> pdeg(np);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) pdeg[i * ny + j] = sigma.mul(x.slot_deg[i], y.slot_deg[j]);

  // relation vectors, one per (generator, basis pair); each is homogeneous
  std::vector<Vector> rels;
  for (int g : ctx.gens)
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        Vector v = Vector::Zero(np);
        for (int i2 = 0; i2 < nx; ++i2) v(i2 * ny + j) += x.right[g](i2, i);
        for (int j2 = 0; j2 < ny; ++j2) v(i * ny + j2) -= y.left[g](j2, j);
        rels.push_back(std::move(v));
      }

  std::vector<int> degrees(pdeg);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  BimoduleObject out;
  std::vector<Vector> basis_cols;
  for (int dd : degrees) {
    std::vector<int> idx;
    for (int p = 0; p < np; ++p)
      if (pdeg[p] == dd) idx.push_back(p);
    // rows: relation vectors restricted to this degree (non-homogeneous parts vanish)
    std::vector<Vector> local;
    for (const Vector& r : rels) {
      Vector sub(idx.size());
      bool nonzero = false;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        sub(t) = r(idx[t]);
        nonzero |= std::abs(sub(t)) > 1e-14;
      }
      if (nonzero) local.push_back(std::move(sub));
    }
    Matrix constraints(static_cast<Eigen::Index>(local.size()), idx.size());
    for (std::size_t t = 0; t < local.size(); ++t) constraints.row(t) = local[t].adjoint();
    const Matrix complement = detail::kernel_with_scale(constraints, kDefaultTol, 1.0);
    for (Eigen::Index c = 0; c < complement.cols(); ++c) {
      Vector full = Vector::Zero(np);
      for (std::size_t t = 0; t < idx.size(); ++t) full(idx[t]) = complement(t, c);
      basis_cols.push_back(std::move(full));
      out.slot_deg.push_back(dd);
    }
  }
  const int nt = static_cast<int>(basis_cols.size());
  if (nt * m != np)
    throw Error(Errc::consistency, "relative tensor dimension " + std::to_string(nt) +
                                       " is not dim(X) dim(Y) / |H|");
  Matrix q(np, nt);
  for (int c = 0; c < nt; ++c) q.col(c) = basis_cols[c];

  const Matrix idy = Matrix::Identity(ny, ny), idx_m = Matrix::Identity(nx, nx);
  for (int g = 0; g < m; ++g) {
    out.left.push_back(q.adjoint() * detail::kron(x.left[g], idy) * q);
    out.right.push_back(q.adjoint() * detail::kron(idx_m, y.right[g]) * q);
  }
  return out;
}

struct BimoduleSimple {
  int coset_rep = 0;
  BimoduleObject object;
  int fp = 0;  // dim / |H|
};

/// Multiplicity of each simple in x, via intertwiner dimensions; the
/// dimension bookkeeping sum mult * dim = dim(x) is enforced.
inline std::vector<std::pair<int, int>> decompose_bimodule(
    const BimoduleObject& x, const std::vector<BimoduleSimple>& simples,
    const FiniteGroup& sigma, const Subgroup& h) {
  const detail::BimoduleContext ctx = detail::make_bimodule_context(sigma, h);
  std::vector<std::pair<int, int>> out;
  long long covered = 0;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    const int mult = detail::bimodule_hom_dim(simples[i].object, x, ctx);
    if (mult > 0) {
      out.emplace_back(static_cast<int>(i), mult);
      covered += static_cast<long long>(mult) * simples[i].object.dim();
    }
  }
  if (covered != x.dim())
    throw Error(Errc::consistency, "decomposition covers dimension " + std::to_string(covered) +
                                       " of " + std::to_string(x.dim()));
  return out;
}

struct DualModel {
  FusionRing ring;
  std::vector<BimoduleSimple> simples;
};

/// The Grothendieck ring of the dual model: simples from split free
/// bimodules on double cosets, completeness certified by
/// sum (dim/|H|)^2 = |Sigma|, fusion from relative tensor products.
inline DualModel dual_ring_group_theoretical(const FiniteGroup& sigma, const Subgroup& h,
                                             std::uint64_t seed = 0) {
  if (sigma.n > kMaxDualOrder)
    throw Error(Errc::size, "|Sigma| exceeds " + std::to_string(kMaxDualOrder));
  const detail::BimoduleContext ctx = detail::make_bimodule_context(sigma, h);
  const int m = ctx.h.n;

  std::vector<BimoduleSimple> simples;
  for (const DoubleCoset& coset : double_cosets(sigma, h)) {
    const BimoduleObject free = free_bimodule(sigma, h, coset.representative);
    std::vector<Matrix> action;
    for (int g : ctx.gens) action.push_back(free.left[g]);
    for (int g : ctx.gens) action.push_back(free.right[g]);
    Matrix degree_marker = Matrix::Zero(free.dim(), free.dim());
    for (int p = 0; p < free.dim(); ++p) degree_marker(p, p) = static_cast<double>(free.slot_deg[p]);
    action.push_back(degree_marker);

    for (const auto& blk : split_commutant(action, seed).blocks) {
      BimoduleSimple s;
      s.coset_rep = coset.representative;
      Matrix basis;
      detail::degree_adapt(blk.basis, free.slot_deg, s.object.slot_deg, basis);
      for (int g = 0; g < m; ++g) {
        s.object.left.push_back(basis.adjoint() * free.left[g] * basis);
        s.object.right.push_back(basis.adjoint() * free.right[g] * basis);
      }
      if (s.object.dim() % m != 0)
        throw Error(Errc::splitting, "simple dimension not divisible by |H|");
      s.fp = s.object.dim() / m;
      bool duplicate = false;
      for (const BimoduleSimple& t : simples) {
        if (t.object.dim() != s.object.dim() || t.coset_rep != s.coset_rep) continue;
        if (detail::bimodule_hom_dim(s.object, t.object, ctx) > 0) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) simples.push_back(std::move(s));
    }
  }

  long long total = 0;
  for (const auto& s : simples) total += static_cast<long long>(s.fp) * s.fp;
  if (total != sigma.n)
    throw Error(Errc::splitting, "completeness failed: sum (dim/|H|)^2 = " +
                                     std::to_string(total) + " != " + std::to_string(sigma.n));

  auto r6 = [](double v) { return std::llround(v * 1e6); };
  std::sort(simples.begin(), simples.end(), [&](const BimoduleSimple& a, const BimoduleSimple& b) {
    if (a.object.slot_deg.front() != b.object.slot_deg.front())
      return a.object.slot_deg.front() < b.object.slot_deg.front();
    if (a.object.dim() != b.object.dim()) return a.object.dim() < b.object.dim();
    for (int g = 0; g < m; ++g)
      for (int gp = 0; gp < m; ++gp) {
        const Complex ta = (a.object.left[g] * a.object.right[gp]).trace();
        const Complex tb = (b.object.left[g] * b.object.right[gp]).trace();
        if (r6(ta.real()) != r6(tb.real())) return r6(ta.real()) > r6(tb.real());
        if (r6(ta.imag()) != r6(tb.imag())) return r6(ta.imag()) < r6(tb.imag());
      }
    return false;
  });

  const int rank = static_cast<int>(simples.size());
  DualModel out;
  out.ring = FusionRing::zero(rank);
  const BimoduleObject unit = unit_bimodule(sigma, h);
  int unit_index = -1;
  for (int i = 0; i < rank; ++i) {
    out.ring.names[i] = "b" + std::to_string(i);
    if (simples[i].object.dim() == m &&
        detail::bimodule_hom_dim(simples[i].object, unit, ctx) > 0) {
      if (unit_index >= 0) throw Error(Errc::internal, "unit bimodule appears twice");
      unit_index = i;
    }
  }
  if (unit_index < 0) throw Error(Errc::internal, "unit bimodule not found among simples");
  out.ring.unit = unit_index;

  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      const BimoduleObject t = bimodule_tensor(simples[a].object, simples[b].object, sigma, h);
      for (const auto& [c, mult] : decompose_bimodule(t, simples, sigma, h))
        out.ring.n(a, b, c) = mult;
    }

  for (int x = 0; x < rank; ++x) {
    int dual = -1;
    for (int y = 0; y < rank; ++y) {
      const int v = out.ring.n(x, y, unit_index);
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
    throw Error(Errc::internal, "dual ring failed validation: " + rep.items.front().rule +
                                    " at " + rep.items.front().witness);
  out.simples = std::move(simples);
  return out;
}

}  // namespace bowtie
