#pragma once

// Finite groups as validated multiplication tables, with subgroup machinery,
// double cosets and exact-factorization search. Convention: table[a][b] is
// "a then b" under the group's own multiplication.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "report.hpp"

namespace bowtie {

inline constexpr int kMaxGroupOrder = 64;

struct FiniteGroup {
  int n = 0;
  std::vector<int> table;  // n*n, row-major: table[a*n+b] = a then b
  int identity = 0;
  std::vector<int> inv;
  std::vector<std::string> names;

  int mul(int a, int b) const { return table[a * n + b]; }
  const std::string& name(int a) const { return names[a]; }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  int element_order(int a) const {
    int x = a, k = 1;
    while (x != identity) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }
};

// A subgroup is kept as a sorted list of parent element indices. The parent is
// passed alongside where needed; Subgroup itself stays a plain value.
struct Subgroup {
  std::vector<int> elements;  // sorted, contains the parent identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
};

namespace detail {

inline std::vector<std::string> default_names(int n, const std::string& prefix) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
  return out;
}

}  // namespace detail

/// Validates a multiplication table: Latin square, two-sided identity,
/// exhaustive associativity (n^3 triples), inverses.
inline FiniteGroup group_from_table(const std::vector<std::vector<int>>& t,
                                    std::vector<std::string> names = {}) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw Error(Errc::format, "group table is empty");
  if (n > kMaxGroupOrder)
    throw Error(Errc::size, "group order " + std::to_string(n) + " exceeds cap");
  FiniteGroup g;
  g.n = n;
  g.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(t[a].size()) != n)
      throw Error(Errc::format, "group table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      if (t[a][b] < 0 || t[a][b] >= n)
        throw Error(Errc::format, "group table entry out of range at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
      g.table[a * n + b] = t[a][b];
    }
  }
  // Latin square: every row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      if (row[g.mul(a, b)])
        throw Error(Errc::format, "not a Latin square: duplicate in row " + std::to_string(a));
      row[g.mul(a, b)] = true;
      if (col[g.mul(b, a)])
        throw Error(Errc::format, "not a Latin square: duplicate in column " + std::to_string(a));
      col[g.mul(b, a)] = true;
    }
  }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw Error(Errc::validation, "no two-sided identity element");
  g.identity = id;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(Errc::validation, "associativity fails at triple (" + std::to_string(a) +
                                            "," + std::to_string(b) + "," + std::to_string(c) +
                                            ")");
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == id && g.mul(b, a) == id) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw Error(Errc::validation, "element " + std::to_string(a) + " has no inverse");
  }
  g.names = names.empty() ? detail::default_names(n, "g") : std::move(names);
  if (static_cast<int>(g.names.size()) != n)
    throw Error(Errc::format, "names list length does not match group order");
  return g;
}

/// Closure of permutation generators under composition ("a then b" means apply
/// a first). Images are 1-based; element 0 of the result is the identity.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                           int order_cap = kMaxGroupOrder) {
  if (generators.empty()) throw Error(Errc::format, "no permutation generators given");
  const int m = static_cast<int>(generators.front().size());
  std::vector<std::vector<int>> gens;
  for (const auto& img : generators) {
    if (static_cast<int>(img.size()) != m)
      throw Error(Errc::format, "permutation generators act on different sets");
    std::vector<int> p(m);
    std::vector<bool> hit(m, false);
    for (int i = 0; i < m; ++i) {
      if (img[i] < 1 || img[i] > m) throw Error(Errc::format, "permutation image out of range");
      p[i] = img[i] - 1;
      if (hit[p[i]]) throw Error(Errc::format, "generator is not a bijection");
      hit[p[i]] = true;
    }
    gens.push_back(std::move(p));
  }
  std::vector<int> e(m);
  for (int i = 0; i < m; ++i) e[i] = i;
  std::vector<std::vector<int>> elems{e};
  std::map<std::vector<int>, int> index{{e, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : gens) {
      std::vector<int> prod(m);
      for (int i = 0; i < m; ++i) prod[i] = gperm[elems[head][i]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (static_cast<int>(elems.size()) > order_cap)
          throw Error(Errc::size, "permutation closure exceeds order cap " +
                                      std::to_string(order_cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(m);
      for (int i = 0; i < m; ++i) prod[i] = elems[b][elems[a][i]];
      t[a][b] = index.at(prod);
    }
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    // cycle notation on 1-based letters
    std::string s;
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
      if (seen[i] || elems[a][i] == i) continue;
      s += '(';
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        s += std::to_string(j + 1);
        j = elems[a][j];
        if (!seen[j]) s += ' ';
      }
      s += ')';
    }
    names[a] = s.empty() ? "e" : s;
  }
  return group_from_table(t, std::move(names));
}

/// Smallest subgroup containing the given elements (the empty list generates
/// the trivial subgroup).
inline Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& elems) {
  for (int x : elems)
    if (x < 0 || x >= g.n) throw Error(Errc::format, "generator index out of range");
  std::set<int> closure{g.identity};
  std::vector<int> queue{g.identity};
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    for (int y : elems) {
      const int z = g.mul(x, y);
      if (closure.insert(z).second) queue.push_back(z);
    }
  }
  Subgroup s;
  s.elements.assign(closure.begin(), closure.end());
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!h.contains(g.identity)) return false;
  for (int a : h.elements) {
    if (!h.contains(g.inv[a])) return false;
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

/// A short generating list found greedily; empty for the trivial group.
inline std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup have = subgroup_generated(g, {});
  for (int x = 0; x < g.n && have.order() < g.n; ++x) {
    if (have.contains(x)) continue;
    gens.push_back(x);
    have = subgroup_generated(g, gens);
  }
  return gens;
}

/// The subgroup as a standalone group with local indices following
/// h.elements order; to_parent maps local indices back.
struct RestrictedGroup {
  FiniteGroup group;
  std::vector<int> to_parent;
};

inline RestrictedGroup subgroup_to_group(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw Error(Errc::containment, "element set is not a subgroup");
  const int m = h.order();
  std::vector<int> local(g.n, -1);
  for (int i = 0; i < m; ++i) local[h.elements[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    names[a] = g.names[h.elements[a]];
    for (int b = 0; b < m; ++b) t[a][b] = local[g.mul(h.elements[a], h.elements[b])];
  }
  return {group_from_table(t, std::move(names)), h.elements};
}

struct DoubleCoset {
  std::vector<int> elements;   // sorted
  int representative = 0;      // least element
  std::vector<int> stabilizer; // H meet rep * H * rep^-1, sorted parent indices
};

/// Partition of the group into double cosets H s H, with the two-sided
/// stabilizer of the chosen representative.
inline std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h)) throw Error(Errc::containment, "H is not a subgroup");
  std::vector<bool> seen(g.n, false);
  std::vector<DoubleCoset> out;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    std::set<int> part;
    for (int a : h.elements)
      for (int b : h.elements) part.insert(g.mul(g.mul(a, s), b));
    DoubleCoset dc;
    dc.elements.assign(part.begin(), part.end());
    dc.representative = dc.elements.front();
    for (int x : dc.elements) seen[x] = true;
    const int rep = dc.representative;
    for (int a : h.elements)
      if (h.contains(g.mul(g.mul(g.inv[rep], a), rep))) dc.stabilizer.push_back(a);
    out.push_back(std::move(dc));
  }
  return out;
}

namespace detail {

inline std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, int max_generators) {
  std::set<std::vector<int>> found;
  found.insert(subgroup_generated(g, {}).elements);
  std::vector<int> gens;
  auto visit = [&](auto&& self, int start, int depth) -> void {
    if (depth == 0) return;
    for (int x = start; x < g.n; ++x) {
      gens.push_back(x);
      found.insert(subgroup_generated(g, gens).elements);
      self(self, x + 1, depth - 1);
      gens.pop_back();
    }
  };
  visit(visit, 0, max_generators);
  std::vector<int> all(g.n);
  for (int i = 0; i < g.n; ++i) all[i] = i;
  found.insert(all);
  std::vector<Subgroup> out;
  for (const auto& e : found) out.push_back(Subgroup{e});
  return out;
}

}  // namespace detail

/// All ordered pairs (G, Gamma) of subgroups with trivial intersection and
/// |G| * |Gamma| = |Sigma|, which forces Sigma = G * Gamma. Subgroups are
/// enumerated from generator subsets of size <= max_generators (default 2)
/// plus the full group; raise max_generators to 3 for groups whose subgroups
/// need three generators.
inline std::vector<std::pair<Subgroup, Subgroup>> exact_factorizations(const FiniteGroup& g,
                                                                       int max_generators = 2) {
  if (g.n > kMaxGroupOrder) throw Error(Errc::size, "group order exceeds cap");
  if (max_generators < 1 || max_generators > 3)
    throw Error(Errc::domain, "max_generators must be between 1 and 3");
  const std::vector<Subgroup> subs = detail::enumerate_subgroups(g, max_generators);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (const Subgroup& a : subs) {
    for (const Subgroup& b : subs) {
      if (a.order() * b.order() != g.n) continue;
      int common = 0;
      for (int x : a.elements)
        if (b.contains(x)) ++common;
      if (common == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace bowtie
