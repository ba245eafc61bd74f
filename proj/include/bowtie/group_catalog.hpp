#pragma once

// Stock groups used throughout the test and demo suites.

#include <string>
#include <vector>

#include "group.hpp"

namespace bowtie {

inline FiniteGroup cyclic_group(int n) {
  if (n <= 0 || n > kMaxGroupOrder) throw Error(Errc::size, "cyclic order out of range");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return group_from_table(t, std::move(names));
}

inline FiniteGroup klein_four_group() {
  return group_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                          {"e", "a", "b", "ab"});
}

/// S_n for n <= 4 at desk scale, generated by an n-cycle and a transposition.
inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 4) throw Error(Errc::size, "symmetric_group supports n in 1..4");
  if (n == 1) return group_from_table({{0}}, {"e"});
  std::vector<int> cycle(n), swap01(n);
  for (int i = 0; i < n; ++i) {
    cycle[i] = i == n - 1 ? 1 : i + 2;  // 1-based images of (1 2 ... n)
    swap01[i] = i == 0 ? 2 : (i == 1 ? 1 : i + 1);
  }
  return group_from_permutations({cycle, swap01});
}

inline FiniteGroup alternating_group_4() {
  return group_from_permutations({{2, 3, 1, 4}, {2, 1, 4, 3}});
}

/// Dihedral group of order 2n (symmetries of the n-gon): r rotation, s flip.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1 || 2 * n > kMaxGroupOrder) throw Error(Errc::size, "dihedral order out of range");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  auto idx = [n](int rot, int flip) { return flip * n + ((rot % n) + n) % n; };
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < n; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < n; ++r2) {
          // (r1,f1) then (r2,f2): s r = r^-1 s
          const int rot = f1 == 0 ? r1 + r2 : r1 - r2;
          t[idx(r1, f1)][idx(r2, f2)] = idx(rot, f1 ^ f2);
        }
  std::vector<std::string> names(m);
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < n; ++r)
      names[idx(r, f)] = (r == 0 && f == 0) ? "e"
                                            : (f == 0 ? "r" + std::to_string(r)
                                                      : (r == 0 ? "s" : "r" + std::to_string(r) + "s"));
  return group_from_table(t, std::move(names));
}

inline FiniteGroup quaternion_group() {
  // elements 1, i, j, k, -1, -i, -j, -k
  const int n = 8;
  auto neg = [](int x) { return x < 4 ? x + 4 : x - 4; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  // base table on {1, i, j, k}: sign * unit
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int u = unit[a % 4][b % 4];
      int s = sign[a % 4][b % 4];
      if (a >= 4) s = -s;
      if (b >= 4) s = -s;
      t[a][b] = s > 0 ? u : neg(u);
    }
  return group_from_table(t, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.n * b.n;
  if (n > kMaxGroupOrder) throw Error(Errc::size, "direct product exceeds order cap");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  auto idx = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1) {
      names[idx(x1, y1)] = "(" + a.names[x1] + "," + b.names[y1] + ")";
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    }
  return group_from_table(t, std::move(names));
}

}  // namespace bowtie
