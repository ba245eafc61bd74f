#include <catch2/catch_amalgamated.hpp>

#include <bowtie/duality_check.hpp>
#include <bowtie/equivariantization.hpp>
#include <bowtie/group_catalog.hpp>

#include <cmath>

#include "test_helpers.hpp"

using namespace bowtie;
using namespace bowtie::testing;

TEST_CASE("trivial G returns the group ring of Gamma") {
  const MatchedPair mp = trivial_matched_pair(group_from_table({{0}}), cyclic_group(3));
  const Equivariantization k = equivariantize_pointed(pointed_crossed_action(mp));
  REQUIRE(k.ring.rank == 3);
  for (const auto& s : k.simples) CHECK(s.dim == 1);
  const IsoSearch iso = find_based_iso(k.ring, group_ring(cyclic_group(3)));
  CHECK(iso.status == IsoSearch::Status::found);
}

TEST_CASE("Z2 acting trivially on Z2 gives the Klein four ring") {
  const MatchedPair mp = trivial_matched_pair(cyclic_group(2), cyclic_group(2));
  const Equivariantization k = equivariantize_pointed(pointed_crossed_action(mp));
  REQUIRE(k.ring.rank == 4);
  long long sq = 0;
  for (const auto& s : k.simples) sq += s.dim * s.dim;
  CHECK(sq == 4);
  const IsoSearch iso = find_based_iso(k.ring, group_ring(klein_four_group()));
  CHECK(iso.status == IsoSearch::Status::found);
}

TEST_CASE("S3 pointed case: rep ring of S3 with the standard fusion rule") {
  const CrossedActionData d = pointed_crossed_action(s3_matched_pair());
  const Equivariantization k = equivariantize_pointed(d);
  REQUIRE(k.ring.rank == 3);

  std::vector<double> fps;
  for (const auto& s : k.simples) fps.push_back(s.fp);
  std::sort(fps.begin(), fps.end());
  CHECK(fps == std::vector<double>{1.0, 1.0, 2.0});

  // canonical order puts the trivial-orbit invertibles first, then X
  CHECK(k.ring.unit == 0);
  CHECK(k.simples[2].dim == 2);
  CHECK(k.ring.n(2, 2, 0) == 1);
  CHECK(k.ring.n(2, 2, 1) == 1);
  CHECK(k.ring.n(2, 2, 2) == 1);

  const IsoSearch iso = find_based_iso(k.ring, rep_ring(symmetric_group(3)));
  CHECK(iso.status == IsoSearch::Status::found);

  // every simple carries a verified equivariant structure and End(S) = C
  const std::vector<int> gens = generating_set(d.mp.g);
  for (const auto& s : k.simples) {
    CHECK(verify_equivariant_structure(s.object, d).ok());
    CHECK(detail::equivariant_hom_dim(s.object, s.object, gens) == 1);
  }
}

TEST_CASE("explicit equivariant structures") {
  const CrossedActionData d = pointed_crossed_action(s3_matched_pair());
  const int t = 1 - d.mp.g.identity;

  SECTION("the unit object passes") {
    EquivariantObject one;
    one.slot_deg = {d.mp.gamma.identity};
    one.u.assign(2, Matrix::Identity(1, 1));
    CHECK(verify_equivariant_structure(one, d).ok());
  }
  SECTION("the regular permutation on the 2-element orbit passes") {
    const int a = d.mp.gamma.identity == 0 ? 1 : 0;
    EquivariantObject x;
    x.slot_deg = {a, d.mp.gamma.inv[a]};
    x.u.assign(2, Matrix::Zero(2, 2));
    x.u[d.mp.g.identity] = Matrix::Identity(2, 2);
    x.u[t](1, 0) = 1;
    x.u[t](0, 1) = 1;
    CHECK(verify_equivariant_structure(x, d).ok());

    // one flipped sign breaks the cocycle at (t, t) with residual 2
    x.u[t](0, 1) = -1;
    const Report rep = verify_equivariant_structure(x, d);
    REQUIRE_FALSE(rep.ok());
    bool cocycle_tt = false;
    for (const auto& v : rep.items)
      if (v.rule == "cocycle" &&
          v.witness.find(detail::tuple_witness({t, t})) != std::string::npos &&
          v.witness.find("2.0") != std::string::npos)
        cocycle_tt = true;
    CHECK(cocycle_tt);
  }
}

TEST_CASE("fusion coefficients do not depend on the seed") {
  const CrossedActionData d = pointed_crossed_action(s3_matched_pair());
  const Equivariantization base = equivariantize_pointed(d, 0);
  for (std::uint64_t seed : {1, 2}) {
    const Equivariantization other = equivariantize_pointed(d, seed);
    CHECK(other.ring.coeff == base.ring.coeff);
    CHECK(other.ring.dual == base.ring.dual);
    CHECK(other.ring.unit == base.ring.unit);
  }
}

TEST_CASE("census of the S3 pointed case") {
  const CrossedActionData d = pointed_crossed_action(s3_matched_pair());
  const Census census = equivariant_census_general(d);
  REQUIRE(census.entries.size() == 2);
  CHECK(census.entries[0].orbit == std::vector<int>{d.mp.gamma.identity});
  CHECK(census.entries[0].stabilizer_order == 2);
  CHECK(census.entries[0].fp_dims == std::vector<double>{1.0, 1.0});
  CHECK(census.entries[1].stabilizer_order == 1);
  CHECK(census.entries[1].fp_dims.size() == 1);
  CHECK(std::abs(census.entries[1].fp_dims[0] - 2.0) < 1e-9);
  CHECK(census.consistent);

  // census FP-dims match the equivariantization entrywise
  const Equivariantization k = equivariantize_pointed(d);
  std::vector<double> from_ring, from_census;
  for (const auto& s : k.simples) from_ring.push_back(s.fp);
  for (const auto& e : census.entries)
    for (double fp : e.fp_dims) from_census.push_back(fp);
  std::sort(from_ring.begin(), from_ring.end());
  std::sort(from_census.begin(), from_census.end());
  REQUIRE(from_ring.size() == from_census.size());
  for (std::size_t i = 0; i < from_ring.size(); ++i)
    CHECK(std::abs(from_ring[i] - from_census[i]) < 1e-9);
}

TEST_CASE("census of Z2 on TY(Z3)") {
  const Census census = equivariant_census_general(ty_inversion_action(3));
  std::vector<double> fps;
  for (const auto& e : census.entries)
    for (double fp : e.fp_dims) fps.push_back(fp);
  std::sort(fps.begin(), fps.end());
  REQUIRE(fps.size() == 5);
  CHECK(std::abs(fps[0] - 1.0) < 1e-9);
  CHECK(std::abs(fps[1] - 1.0) < 1e-9);
  CHECK(std::abs(fps[2] - std::sqrt(3.0)) < 1e-9);
  CHECK(std::abs(fps[3] - std::sqrt(3.0)) < 1e-9);
  CHECK(std::abs(fps[4] - 2.0) < 1e-9);
  CHECK(std::abs(census.fp_square_sum - 12.0) < 1e-9);
  CHECK(census.consistent);
}

TEST_CASE("census of a trivial action lists |Irr(C)| x |Irr(G)| simples") {
  CrossedActionData d = ty_inversion_action(3);
  for (int a = 0; a < d.ring.rank; ++a) d.act[a * 2 + 1] = a;  // make the action trivial
  const Census census = equivariant_census_general(d);
  std::size_t count = 0;
  for (const auto& e : census.entries) count += e.fp_dims.size();
  CHECK(count == 4 * 2);
  CHECK(census.consistent);
}

TEST_CASE("extension checks") {
  SECTION("S3 case passes, including the forgetful expansion") {
    const CrossedActionData d = pointed_crossed_action(s3_matched_pair());
    const Equivariantization k = equivariantize_pointed(d);
    CHECK(extension_checks(k, d).ok());
  }
  SECTION("trivial-action case passes") {
    const MatchedPair mp = trivial_matched_pair(cyclic_group(2), cyclic_group(2));
    const CrossedActionData d = pointed_crossed_action(mp);
    const Equivariantization k = equivariantize_pointed(d);
    CHECK(extension_checks(k, d).ok());
  }
  SECTION("a corrupted coefficient fails the homomorphism scan") {
    const CrossedActionData d = pointed_crossed_action(s3_matched_pair());
    Equivariantization k = equivariantize_pointed(d);
    k.ring.n(2, 2, 2) += 1;
    const Report rep = extension_checks(k, d);
    REQUIRE_FALSE(rep.ok());
    bool mult = false;
    for (const auto& v : rep.items) mult |= v.rule == "forgetful-multiplicative";
    CHECK(mult);
  }
}

TEST_CASE("caps and preconditions") {
  // base must be the group ring of Gamma
  CHECK_THROWS_AS(equivariantize_pointed(ty_inversion_action(3)), Error);
}

TEST_CASE("A4 pair: simples verified, completeness certified") {
  const FiniteGroup a4 = alternating_group_4();
  Subgroup three = subgroup_of_order(a4, 3);
  std::vector<int> v4_elems;
  for (int x = 0; x < a4.n; ++x)
    if (a4.element_order(x) <= 2) v4_elems.push_back(x);
  const MatchedPair mp = derive_matched_pair(a4, three, Subgroup{v4_elems});
  const CrossedActionData d = pointed_crossed_action(mp);
  const Equivariantization k = equivariantize_pointed(d);
  long long sq = 0;
  for (const auto& s : k.simples) {
    CHECK(verify_equivariant_structure(s.object, d).ok());
    sq += 1LL * s.dim * s.dim;
  }
  CHECK(sq == 12);
  std::vector<double> fps;
  for (const auto& s : k.simples) fps.push_back(s.fp);
  std::sort(fps.begin(), fps.end());
  CHECK(fps == std::vector<double>{1.0, 1.0, 1.0, 3.0});
}

TEST_CASE("D8 = Z4 . Z2: extension and dual rings agree") {
  const FiniteGroup d8 = dihedral_group(4);
  int r4 = -1;
  for (int x = 0; x < 8 && r4 < 0; ++x)
    if (d8.element_order(x) == 4) r4 = x;
  const Subgroup z4 = subgroup_generated(d8, {r4});
  int s2 = -1;
  for (int x = 1; x < 8 && s2 < 0; ++x)
    if (d8.element_order(x) == 2 && !z4.contains(x)) s2 = x;
  const MatchedPair mp = derive_matched_pair(d8, z4, subgroup_generated(d8, {s2}));
  const DualityCheck check = check_extension_duality(mp);
  CHECK(check.ok());
  CHECK(check.extension.ring.rank == 8);
  CHECK(check.dual.ring.rank == 8);
}

TEST_CASE("trivial Gamma recovers the representation ring by a different route") {
  // the extension over a point is plain equivariantization; its fusion comes
  // from intertwiner counts on induced objects, not from characters
  for (const FiniteGroup& g : {symmetric_group(3), quaternion_group(), klein_four_group()}) {
    const MatchedPair mp = trivial_matched_pair(g, group_from_table({{0}}));
    const Equivariantization k = equivariantize_pointed(pointed_crossed_action(mp));
    const FusionRing reps = rep_ring(g);
    REQUIRE(k.ring.rank == reps.rank);
    const IsoSearch iso = find_based_iso(k.ring, reps);
    CHECK(iso.status == IsoSearch::Status::found);
  }
}
