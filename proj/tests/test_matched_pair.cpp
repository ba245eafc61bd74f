#include <catch2/catch_amalgamated.hpp>

#include <bowtie/group_catalog.hpp>
#include <bowtie/matched_pair.hpp>

using namespace bowtie;

namespace {

Subgroup subgroup_of_order(const FiniteGroup& g, int order) {
  for (int x = 0; x < g.n; ++x)
    if (g.element_order(x) == order) return subgroup_generated(g, {x});
  throw std::runtime_error("no element of requested order");
}

// (x, k) -> x k lands in Sigma and must be a group isomorphism.
void check_round_trip(const FiniteGroup& sigma, const Subgroup& gs, const Subgroup& ks) {
  const MatchedPair mp = derive_matched_pair(sigma, gs, ks);
  REQUIRE(verify_matched_pair(mp).ok());
  const FiniteGroup z = zappa_szep(mp);
  REQUIRE(z.n == sigma.n);
  std::vector<int> phi(z.n);
  std::vector<bool> hit(sigma.n, false);
  for (int x = 0; x < mp.g.n; ++x)
    for (int k = 0; k < mp.gamma.n; ++k) {
      const int image = sigma.mul(gs.elements[x], ks.elements[k]);
      phi[zappa_index(mp, x, k)] = image;
      REQUIRE_FALSE(hit[image]);
      hit[image] = true;
    }
  for (int p = 0; p < z.n; ++p)
    for (int q = 0; q < z.n; ++q) REQUIRE(phi[z.mul(p, q)] == sigma.mul(phi[p], phi[q]));
}

}  // namespace

TEST_CASE("trivial matched pair is the direct product") {
  const MatchedPair mp = trivial_matched_pair(cyclic_group(2), cyclic_group(3));
  CHECK(verify_matched_pair(mp).ok());
  const FiniteGroup z = zappa_szep(mp);
  CHECK(z.n == 6);
  CHECK(z.is_abelian());
}

TEST_CASE("matched pair derived from S3") {
  const FiniteGroup s3 = symmetric_group(3);
  const Subgroup g2 = subgroup_of_order(s3, 2);
  const Subgroup g3 = subgroup_of_order(s3, 3);
  const MatchedPair mp = derive_matched_pair(s3, g2, g3);
  CHECK(verify_matched_pair(mp).ok());

  // |> is trivial and <| on Gamma = Z3 is inversion by the involution
  const int t = 1 - mp.g.identity;  // the non-identity element of G
  for (int k = 0; k < 3; ++k) {
    for (int x = 0; x < 2; ++x) CHECK(mp.left(k, x) == x);
    CHECK(mp.right(k, t) == mp.gamma.inv[k]);
    CHECK(mp.right(k, mp.g.identity) == k);
  }

  const FiniteGroup z = zappa_szep(mp);
  CHECK(z.n == 6);
  CHECK_FALSE(z.is_abelian());
  check_round_trip(s3, g2, g3);
}

TEST_CASE("corrupting an action entry is reported with a witness") {
  const FiniteGroup s3 = symmetric_group(3);
  MatchedPair mp = derive_matched_pair(s3, subgroup_of_order(s3, 2), subgroup_of_order(s3, 3));
  const int t = 1 - mp.g.identity;
  const int a = mp.gamma.identity == 0 ? 1 : 0;
  mp.ract[a * mp.g.n + t] = a;  // a <| t overwritten to a
  const Report rep = verify_matched_pair(mp);
  CHECK_FALSE(rep.ok());
  CHECK_THROWS_AS(zappa_szep(mp), Error);
}

TEST_CASE("matched pair derived from S4 = Z4 . S3") {
  const FiniteGroup s4 = group_from_permutations({{2, 3, 4, 1}, {2, 1, 3, 4}});
  int c4 = -1;
  for (int x = 0; x < s4.n && c4 < 0; ++x)
    if (s4.element_order(x) == 4) c4 = x;
  const Subgroup z4 = subgroup_generated(s4, {c4});

  // the stabilizer of the letter 4: elements generated by (1 2) and (1 2 3)
  std::vector<int> stab_gens;
  for (int x = 0; x < s4.n; ++x)
    if (s4.names[x] == "(1 2)" || s4.names[x] == "(1 2 3)") stab_gens.push_back(x);
  REQUIRE(stab_gens.size() == 2);
  const Subgroup s3sub = subgroup_generated(s4, stab_gens);
  REQUIRE(s3sub.order() == 6);

  const MatchedPair mp = derive_matched_pair(s4, z4, s3sub);
  CHECK(verify_matched_pair(mp).ok());

  bool lact_moves = false, ract_moves = false;
  for (int k = 0; k < mp.gamma.n; ++k)
    for (int x = 0; x < mp.g.n; ++x) {
      lact_moves |= mp.left(k, x) != x;
      ract_moves |= mp.right(k, x) != k;
    }
  CHECK(lact_moves);
  CHECK(ract_moves);

  check_round_trip(s4, z4, s3sub);
}

TEST_CASE("derive rejects non-factorizations") {
  const FiniteGroup z4 = cyclic_group(4);
  const Subgroup two = subgroup_generated(z4, {2});
  CHECK_THROWS_AS(derive_matched_pair(z4, two, two), Error);
}

TEST_CASE("round trip over every factorization of small suite groups") {
  for (const FiniteGroup& sigma :
       {symmetric_group(3), cyclic_group(6), dihedral_group(4), alternating_group_4()}) {
    for (const auto& [gs, ks] : exact_factorizations(sigma)) check_round_trip(sigma, gs, ks);
  }
}

TEST_CASE("a direct product derives trivial actions") {
  const FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  const FiniteGroup sigma = direct_product(z2, z3);
  std::vector<int> left_elems, right_elems;
  for (int x = 0; x < sigma.n; ++x) {
    if (x % 3 == 0) left_elems.push_back(x);   // (a, e) block
    if (x / 3 == 0) right_elems.push_back(x);  // (e, b) block
  }
  const MatchedPair mp = derive_matched_pair(sigma, Subgroup{left_elems}, Subgroup{right_elems});
  for (int k = 0; k < mp.gamma.n; ++k)
    for (int x = 0; x < mp.g.n; ++x) {
      CHECK(mp.left(k, x) == x);
      CHECK(mp.right(k, x) == k);
    }
}
