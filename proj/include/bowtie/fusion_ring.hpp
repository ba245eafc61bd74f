#pragma once

// Fusion rings (based rings): validation, Frobenius-Perron dimensions,
// universal gradings, stock constructions (group rings, Tambara-Yamagami,
// representation rings) and based-ring isomorphism search.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "group.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace bowtie {

inline constexpr int kMaxRingRank = 64;
inline constexpr double kIntegerGuard = 1e-6;

struct FusionRing {
  int rank = 0;
  int unit = 0;
  std::vector<int> dual;  // involutive permutation of labels
  std::vector<int> coeff; // rank^3 dense, [(a*rank + b)*rank + c]
  std::vector<std::string> names;

  int n(int a, int b, int c) const { return coeff[(a * rank + b) * rank + c]; }
  int& n(int a, int b, int c) { return coeff[(a * rank + b) * rank + c]; }

  static FusionRing zero(int rank) {
    FusionRing r;
    if (rank <= 0 || rank > kMaxRingRank)
      throw Error(Errc::size, "fusion ring rank out of range");
    r.rank = rank;
    r.dual.assign(rank, 0);
    r.coeff.assign(static_cast<std::size_t>(rank) * rank * rank, 0);
    r.names.resize(rank);
    for (int i = 0; i < rank; ++i) r.names[i] = "x" + std::to_string(i);
    return r;
  }
};

// A grading of the labels by a finite group.
struct Grading {
  FiniteGroup group;
  std::vector<int> deg;  // label -> group element
};

struct BasedRingIso {
  std::vector<int> map;  // label of R1 -> label of R2
};

namespace detail {

inline std::string tuple_witness(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

/// Checks every based-ring axiom. The associativity scan is O(rank^5) and can
/// be partitioned over threads; the report is identical either way. At most
/// 200 violations are listed before truncation.
inline Report validate_fusion_ring(const FusionRing& r, int threads = 1) {
  Report rep;
  const int n = r.rank;
  if (n <= 0 || static_cast<int>(r.coeff.size()) != n * n * n ||
      static_cast<int>(r.dual.size()) != n || r.unit < 0 || r.unit >= n) {
    rep.add("shape", "tensor or dual has wrong dimensions");
    return rep;
  }
  constexpr std::size_t kMaxItems = 200;
  for (int v : r.coeff)
    if (v < 0) {
      rep.add("nonnegativity", "negative structure constant");
      return rep;
    }
  for (int a = 0; a < n && rep.items.size() < kMaxItems; ++a)
    for (int b = 0; b < n && rep.items.size() < kMaxItems; ++b) {
      if (r.n(r.unit, a, b) != (a == b ? 1 : 0))
        rep.add("unit-left", detail::tuple_witness({a, b}));
      if (r.n(a, r.unit, b) != (a == b ? 1 : 0))
        rep.add("unit-right", detail::tuple_witness({a, b}));
    }
  for (int a = 0; a < n; ++a) {
    if (r.dual[a] < 0 || r.dual[a] >= n || r.dual[r.dual[a]] != a) {
      rep.add("dual-involution", detail::tuple_witness({a}));
      return rep;
    }
  }
  if (r.dual[r.unit] != r.unit) rep.add("dual-unit", detail::tuple_witness({r.unit}));
  for (int a = 0; a < n && rep.items.size() < kMaxItems; ++a)
    for (int b = 0; b < n && rep.items.size() < kMaxItems; ++b)
      if (r.n(a, b, r.unit) != (b == r.dual[a] ? 1 : 0))
        rep.add("dual-pairing", detail::tuple_witness({a, b}));

  const int nthreads = std::max(1, std::min(threads, n));
  std::vector<Report> partial(nthreads);
  auto scan = [&](int tid) {
    for (int a = tid; a < n; a += nthreads) {
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            long long lhs = 0, rhs = 0;
            for (int x = 0; x < n; ++x) lhs += static_cast<long long>(r.n(a, b, x)) * r.n(x, c, d);
            for (int y = 0; y < n; ++y) rhs += static_cast<long long>(r.n(b, c, y)) * r.n(a, y, d);
            if (lhs != rhs && partial[tid].items.size() < kMaxItems)
              partial[tid].add("associativity", detail::tuple_witness({a, b, c, d}));
          }
    }
  };
  if (nthreads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }
  // Deterministic order: merge by outer index a.
  std::vector<Violation> assoc;
  for (auto& p : partial)
    for (auto& v : p.items) assoc.push_back(std::move(v));
  std::sort(assoc.begin(), assoc.end(),
            [](const Violation& a, const Violation& b) { return a.witness < b.witness; });
  for (auto& v : assoc) {
    if (rep.items.size() >= kMaxItems) {
      rep.add("truncated", "further violations omitted");
      break;
    }
    rep.items.push_back(std::move(v));
  }
  return rep;
}

struct FpDims {
  std::vector<double> per_label;
  double total = 0.0;
};

/// Frobenius-Perron dimensions: the unique positive vector d with
/// d(a) d(b) = sum_c N[a][b][c] d(c), d(unit) = 1, found by power iteration on
/// the matrix sum_a N[a] to residual 1e-12.
inline FpDims fpdim(const FusionRing& r) {
  const int n = r.rank;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) m(b, c) += r.n(a, b, c);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double lambda = 0.0;
  bool converged = false;
  for (int it = 0; it < 100000; ++it) {
    Eigen::VectorXd w = m * v;
    lambda = w.maxCoeff();
    if (lambda <= 0) throw Error(Errc::numeric, "fpdim: non-positive iterate");
    w /= lambda;
    if ((m * w - lambda * w).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, lambda)) {
      v = w;
      converged = true;
      break;
    }
    v = w;
  }
  if (!converged) throw Error(Errc::numeric, "fpdim: power iteration did not converge");
  FpDims out;
  out.per_label.resize(n);
  const double at_unit = v(r.unit);
  if (at_unit <= 0) throw Error(Errc::numeric, "fpdim: vanishing unit coordinate");
  for (int a = 0; a < n; ++a) {
    out.per_label[a] = v(a) / at_unit;
    out.total += out.per_label[a] * out.per_label[a];
  }
  return out;
}

/// Checks a grading against the ring: support multiplicativity, unit and dual
/// degrees, faithfulness.
inline Report validate_grading(const FusionRing& r, const Grading& gr) {
  Report rep;
  if (static_cast<int>(gr.deg.size()) != r.rank) {
    rep.add("shape", "degree map length differs from rank");
    return rep;
  }
  for (int d : gr.deg)
    if (d < 0 || d >= gr.group.n) {
      rep.add("range", "degree out of range");
      return rep;
    }
  for (int a = 0; a < r.rank; ++a)
    for (int b = 0; b < r.rank; ++b)
      for (int c = 0; c < r.rank; ++c)
        if (r.n(a, b, c) > 0 && gr.deg[c] != gr.group.mul(gr.deg[a], gr.deg[b]))
          rep.add("support-multiplicativity", detail::tuple_witness({a, b, c}));
  if (gr.deg[r.unit] != gr.group.identity) rep.add("unit-degree", detail::tuple_witness({r.unit}));
  for (int a = 0; a < r.rank; ++a)
    if (gr.deg[r.dual[a]] != gr.group.inv[gr.deg[a]])
      rep.add("dual-degree", detail::tuple_witness({a}));
  std::vector<bool> hit(gr.group.n, false);
  for (int d : gr.deg) hit[d] = true;
  for (int x = 0; x < gr.group.n; ++x)
    if (!hit[x]) rep.add("faithfulness", "degree " + std::to_string(x) + " unused");
  return rep;
}

/// The universal grading: labels are grouped by the adjoint-component
/// relation, and the component set inherits a group structure from the tensor
/// product.
inline Grading universal_grading(const FusionRing& r) {
  const int n = r.rank;
  // adjoint component: constituents of a (x) dual(a), closed under product
  std::vector<bool> ad(n, false);
  ad[r.unit] = true;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (r.n(a, r.dual[a], c) > 0) ad[c] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!ad[x] || !ad[y]) continue;
        for (int c = 0; c < n; ++c)
          if (r.n(x, y, c) > 0 && !ad[c]) {
            ad[c] = true;
            grew = true;
          }
      }
  }
  // components: closure of each label under multiplication by the adjoint set
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int a = 0; a < n; ++a) {
    if (comp[a] >= 0) continue;
    const int id = ncomp++;
    std::vector<int> queue{a};
    comp[a] = id;
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      for (int s = 0; s < n; ++s) {
        if (!ad[s]) continue;
        for (int c = 0; c < n; ++c)
          if ((r.n(x, s, c) > 0 || r.n(s, x, c) > 0) && comp[c] < 0) {
            comp[c] = id;
            queue.push_back(c);
          }
      }
    }
  }
  // the induced product on components
  std::vector<std::vector<int>> table(ncomp, std::vector<int>(ncomp, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.n(a, b, c) == 0) continue;
        int& cell = table[comp[a]][comp[b]];
        if (cell < 0)
          cell = comp[c];
        else if (cell != comp[c])
          throw Error(Errc::validation,
                      "universal grading: component product not well-defined at " +
                          detail::tuple_witness({a, b, c}));
      }
  for (int i = 0; i < ncomp; ++i)
    for (int j = 0; j < ncomp; ++j)
      if (table[i][j] < 0)
        throw Error(Errc::validation, "universal grading: empty component product");
  std::vector<std::string> names(ncomp);
  for (int i = 0; i < ncomp; ++i) names[i] = "d" + std::to_string(i);
  Grading gr;
  gr.group = group_from_table(table, std::move(names));
  gr.deg = std::move(comp);
  return gr;
}

/// The based ring of a finite group: N[a][b][c] = 1 iff ab = c.
inline FusionRing group_ring(const FiniteGroup& g) {
  FusionRing r = FusionRing::zero(g.n);
  r.unit = g.identity;
  r.names = g.names;
  for (int a = 0; a < g.n; ++a) {
    r.dual[a] = g.inv[a];
    for (int b = 0; b < g.n; ++b) r.n(a, b, g.mul(a, b)) = 1;
  }
  return r;
}

/// The Tambara-Yamagami ring over an abelian group: one extra self-dual label
/// m with a (x) m = m (x) a = m and m (x) m = sum of all group labels.
inline FusionRing tambara_yamagami(const FiniteGroup& a) {
  if (!a.is_abelian()) throw Error(Errc::domain, "Tambara-Yamagami requires an abelian group");
  const int m = a.n;  // index of the non-invertible label
  FusionRing r = FusionRing::zero(a.n + 1);
  r.unit = a.identity;
  for (int x = 0; x < a.n; ++x) {
    r.names[x] = a.names[x];
    r.dual[x] = a.inv[x];
    for (int y = 0; y < a.n; ++y) r.n(x, y, a.mul(x, y)) = 1;
    r.n(x, m, m) = 1;
    r.n(m, x, m) = 1;
    r.n(m, m, x) = 1;
  }
  r.names[m] = "m";
  r.dual[m] = m;
  return r;
}

/// The representation ring, computed numerically: the regular representation
/// is split into irreducible blocks, characters are read off as block traces,
/// and fusion coefficients come from character inner products (rounded under
/// a 1e-6 guard). Labels are sorted by (degree, character values).
inline FusionRing rep_ring(const FiniteGroup& g, std::uint64_t seed = 0) {
  if (g.n > kMaxGroupOrder) throw Error(Errc::size, "rep_ring: group order exceeds cap");
  const int n = g.n;
  const std::vector<int> gens = generating_set(g);
  std::vector<Matrix> action;
  if (gens.empty()) {
    action.push_back(Matrix::Identity(n, n));
  } else {
    for (int x : gens) {
      Matrix l = Matrix::Zero(n, n);
      for (int y = 0; y < n; ++y) l(g.mul(x, y), y) = 1.0;
      action.push_back(std::move(l));
    }
  }
  const BlockSplit split = split_commutant(action, seed);
  // character of each block over all group elements
  std::vector<std::vector<Complex>> chars;
  std::vector<int> degs;
  for (const auto& blk : split.blocks) {
    std::vector<Complex> chi(n, Complex(0, 0));
    for (int x = 0; x < n; ++x) {
      Complex tr(0, 0);
      // trace of B^H L_x B with L_x a permutation of rows
      for (int col = 0; col < blk.dim; ++col)
        for (int row = 0; row < n; ++row)
          tr += std::conj(blk.basis(row, col)) * blk.basis(g.mul(g.inv[x], row), col);
      chi[x] = tr;
    }
    bool fresh = true;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      double diff = 0;
      for (int x = 0; x < n; ++x) diff = std::max(diff, std::abs(chars[i][x] - chi[x]));
      if (diff < 1e-6) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      chars.push_back(std::move(chi));
      degs.push_back(blk.dim);
    }
  }
  long long sq = 0;
  for (int d : degs) sq += static_cast<long long>(d) * d;
  if (sq != n) throw Error(Errc::splitting, "rep_ring: degrees do not sum to the group order");

  const int rank = static_cast<int>(chars.size());
  std::vector<int> order(rank);
  std::iota(order.begin(), order.end(), 0);
  auto r6 = [](double x) { return std::llround(x * 1e6); };
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (degs[i] != degs[j]) return degs[i] < degs[j];
    for (int x = 0; x < n; ++x) {
      const auto ri = r6(chars[i][x].real()), rj = r6(chars[j][x].real());
      if (ri != rj) return ri > rj;
      const auto ii = r6(chars[i][x].imag()), ij = r6(chars[j][x].imag());
      if (ii != ij) return ii < ij;
    }
    return false;
  });

  FusionRing r = FusionRing::zero(rank);
  std::vector<std::vector<Complex>> chi(rank);
  for (int i = 0; i < rank; ++i) {
    chi[i] = chars[order[i]];
    r.names[i] = "chi" + std::to_string(i);
  }
  int unit = -1;
  for (int i = 0; i < rank; ++i) {
    bool ones = true;
    for (int x = 0; x < n && ones; ++x) ones = std::abs(chi[i][x] - Complex(1, 0)) < 1e-6;
    if (ones) unit = i;
  }
  if (unit < 0) throw Error(Errc::internal, "rep_ring: trivial character not found");
  r.unit = unit;
  for (int i = 0; i < rank; ++i) {
    int dual = -1;
    for (int j = 0; j < rank; ++j) {
      double diff = 0;
      for (int x = 0; x < n; ++x) diff = std::max(diff, std::abs(std::conj(chi[i][x]) - chi[j][x]));
      if (diff < 1e-6) dual = j;
    }
    if (dual < 0) throw Error(Errc::numeric, "rep_ring: conjugate character missing");
    r.dual[i] = dual;
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) {
        Complex ip(0, 0);
        for (int x = 0; x < n; ++x) ip += chi[i][x] * chi[j][x] * std::conj(chi[k][x]);
        ip /= static_cast<double>(n);
        const long long v = std::llround(ip.real());
        if (std::abs(ip.real() - v) > kIntegerGuard || std::abs(ip.imag()) > kIntegerGuard || v < 0)
          throw Error(Errc::numeric, "rep_ring: fusion coefficient failed the rounding guard");
        r.n(i, j, k) = static_cast<int>(v);
      }
  return r;
}

/// Restriction of the ring to a tensor-closed label subset (sorted indices).
inline FusionRing restrict_to_labels(const FusionRing& r, const std::vector<int>& labels) {
  std::vector<int> local(r.rank, -1);
  for (std::size_t i = 0; i < labels.size(); ++i) local[labels[i]] = static_cast<int>(i);
  if (local[r.unit] < 0) throw Error(Errc::subring, "label subset misses the unit");
  for (int a : labels) {
    if (local[r.dual[a]] < 0) throw Error(Errc::subring, "label subset not closed under duals");
    for (int b : labels)
      for (int c = 0; c < r.rank; ++c)
        if (r.n(a, b, c) > 0 && local[c] < 0)
          throw Error(Errc::subring, "label subset not tensor-closed at " +
                                         detail::tuple_witness({a, b, c}));
  }
  FusionRing out = FusionRing::zero(static_cast<int>(labels.size()));
  out.unit = local[r.unit];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.names[i] = r.names[labels[i]];
    out.dual[i] = local[r.dual[labels[i]]];
    for (std::size_t j = 0; j < labels.size(); ++j)
      for (std::size_t k = 0; k < labels.size(); ++k)
        out.n(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)) =
            r.n(labels[i], labels[j], labels[k]);
  }
  return out;
}

struct IsoSearch {
  enum class Status { found, none, timeout };
  Status status = Status::none;
  std::optional<BasedRingIso> iso;
  unsigned long long nodes = 0;
};

namespace detail {

struct LabelSig {
  long long fp = 0;
  bool selfdual = false;
  int tensor_order = 0;  // order under tensor powers when invertible, else 0
  std::vector<int> lrow, rrow;

  bool operator==(const LabelSig& o) const {
    return fp == o.fp && selfdual == o.selfdual && tensor_order == o.tensor_order &&
           lrow == o.lrow && rrow == o.rrow;
  }
  bool operator<(const LabelSig& o) const {
    if (fp != o.fp) return fp < o.fp;
    if (selfdual != o.selfdual) return selfdual < o.selfdual;
    if (tensor_order != o.tensor_order) return tensor_order < o.tensor_order;
    if (lrow != o.lrow) return lrow < o.lrow;
    return rrow < o.rrow;
  }
};

inline std::vector<LabelSig> label_signatures(const FusionRing& r) {
  const FpDims fp = fpdim(r);
  std::vector<LabelSig> sigs(r.rank);
  for (int a = 0; a < r.rank; ++a) {
    LabelSig& s = sigs[a];
    s.fp = std::llround(fp.per_label[a] * 1e6);
    s.selfdual = r.dual[a] == a;
    if (std::abs(fp.per_label[a] - 1.0) < kIntegerGuard) {
      int x = a, k = 1;
      while (x != r.unit && k <= r.rank) {
        int next = -1;
        for (int c = 0; c < r.rank; ++c)
          if (r.n(x, a, c) > 0) next = c;
        x = next;
        ++k;
      }
      s.tensor_order = x == r.unit ? k : 0;
    }
    s.lrow.resize(r.rank);
    s.rrow.resize(r.rank);
    for (int b = 0; b < r.rank; ++b) {
      int lsum = 0, rsum = 0;
      for (int c = 0; c < r.rank; ++c) {
        lsum += r.n(a, b, c);
        rsum += r.n(b, a, c);
      }
      s.lrow[b] = lsum;
      s.rrow[b] = rsum;
    }
    std::sort(s.lrow.begin(), s.lrow.end());
    std::sort(s.rrow.begin(), s.rrow.end());
  }
  return sigs;
}

inline bool iso_preserves(const FusionRing& r1, const FusionRing& r2, const std::vector<int>& m) {
  if (m[r1.unit] != r2.unit) return false;
  for (int a = 0; a < r1.rank; ++a)
    if (m[r1.dual[a]] != r2.dual[m[a]]) return false;
  for (int a = 0; a < r1.rank; ++a)
    for (int b = 0; b < r1.rank; ++b)
      for (int c = 0; c < r1.rank; ++c)
        if (r1.n(a, b, c) != r2.n(m[a], m[b], m[c])) return false;
  return true;
}

inline IsoSearch iso_backtrack(const FusionRing& r1, const FusionRing& r2,
                               unsigned long long budget) {
  IsoSearch res;
  if (r1.rank != r2.rank) return res;
  const int n = r1.rank;
  const std::vector<LabelSig> s1 = label_signatures(r1), s2 = label_signatures(r2);
  {
    std::vector<LabelSig> m1 = s1, m2 = s2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (!(m1 == m2)) return res;
  }
  std::vector<std::vector<int>> cand(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (s1[a] == s2[b]) cand[a].push_back(b);
    if (cand[a].empty()) return res;
  }
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  std::sort(vars.begin(), vars.end(), [&](int a, int b) {
    if (cand[a].size() != cand[b].size()) return cand[a].size() < cand[b].size();
    return a < b;
  });

  std::vector<int> map(n, -1), used(n, 0);
  bool timeout = false;

  auto consistent = [&](int a) {
    // all triples whose entries are assigned and involve a
    for (int x = 0; x < n; ++x) {
      if (map[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (map[y] < 0) continue;
        if (r1.n(a, x, y) != r2.n(map[a], map[x], map[y])) return false;
        if (r1.n(x, a, y) != r2.n(map[x], map[a], map[y])) return false;
        if (r1.n(x, y, a) != r2.n(map[x], map[y], map[a])) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    while (pos < vars.size() && map[vars[pos]] >= 0) ++pos;
    if (pos == vars.size()) return true;
    const int a = vars[pos];
    for (int b : cand[a]) {
      if (used[b]) continue;
      if (++res.nodes > budget) {
        timeout = true;
        return false;
      }
      const int ad = r1.dual[a], bd = r2.dual[b];
      const bool pair_assign = ad != a;
      if (pair_assign && map[ad] >= 0 && map[ad] != bd) continue;
      if (pair_assign && map[ad] < 0 && used[bd]) continue;
      if (!pair_assign && bd != b) continue;
      map[a] = b;
      used[b] = 1;
      bool forced = false;
      if (pair_assign && map[ad] < 0) {
        map[ad] = bd;
        used[bd] = 1;
        forced = true;
      }
      if (consistent(a) && (!forced || consistent(ad))) {
        if (self(self, pos + 1)) return true;
        if (timeout) {
          // unwind without exploring siblings
          map[a] = -1;
          used[b] = 0;
          if (forced) {
            map[ad] = -1;
            used[bd] = 0;
          }
          return false;
        }
      }
      map[a] = -1;
      used[b] = 0;
      if (forced) {
        map[ad] = -1;
        used[bd] = 0;
      }
    }
    return false;
  };

  map[r1.unit] = r2.unit;
  used[r2.unit] = 1;
  if (dfs(dfs, 0) && iso_preserves(r1, r2, map)) {
    res.status = IsoSearch::Status::found;
    res.iso = BasedRingIso{map};
  } else if (timeout) {
    res.status = IsoSearch::Status::timeout;
  }
  return res;
}

}  // namespace detail

/// Backtracking search for a based-ring isomorphism, pruned by per-label
/// signatures (FP-dimension, self-duality, tensor order, row-sum multisets).
/// When the direct search finds nothing, the search is repeated against the
/// opposite ring and composed with the dual involution, which absorbs
/// opposite-convention mismatches. Exhausting the node budget is reported as
/// timeout, distinct from a refutation.
inline IsoSearch find_based_iso(const FusionRing& r1, const FusionRing& r2,
                                unsigned long long budget = 10'000'000) {
  IsoSearch direct = detail::iso_backtrack(r1, r2, budget);
  if (direct.status == IsoSearch::Status::found) return direct;

  FusionRing opposite = r2;
  for (int a = 0; a < r2.rank; ++a)
    for (int b = 0; b < r2.rank; ++b)
      for (int c = 0; c < r2.rank; ++c) opposite.n(a, b, c) = r2.n(b, a, c);
  IsoSearch via_op = detail::iso_backtrack(r1, opposite, budget);
  via_op.nodes += direct.nodes;
  if (via_op.status == IsoSearch::Status::found) {
    std::vector<int> composed(r1.rank);
    for (int a = 0; a < r1.rank; ++a) composed[a] = r2.dual[via_op.iso->map[a]];
    if (!detail::iso_preserves(r1, r2, composed))
      throw Error(Errc::internal, "opposite-route isomorphism failed re-verification");
    via_op.iso = BasedRingIso{composed};
    return via_op;
  }
  // either attempt is decisive on its own: a ring is always isomorphic to its
  // opposite through the dual involution
  if (direct.status == IsoSearch::Status::none || via_op.status == IsoSearch::Status::none) {
    via_op.status = IsoSearch::Status::none;
    return via_op;
  }
  return via_op;  // both timed out
}

}  // namespace bowtie
