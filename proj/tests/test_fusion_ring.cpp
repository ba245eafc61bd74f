#include <catch2/catch_amalgamated.hpp>

#include <bowtie/fusion_ring.hpp>
#include <bowtie/group_catalog.hpp>

#include <cmath>

using namespace bowtie;

TEST_CASE("validation of stock rings") {
  CHECK(validate_fusion_ring(group_ring(cyclic_group(3))).ok());
  CHECK(validate_fusion_ring(tambara_yamagami(cyclic_group(2))).ok());
  CHECK(validate_fusion_ring(group_ring(symmetric_group(3))).ok());
}

TEST_CASE("a corrupted Ising ring fails associativity with witnesses") {
  FusionRing ising = tambara_yamagami(cyclic_group(2));
  const int m = 2;
  ising.n(m, m, 1) = 0;  // m (x) m now contains only the unit
  const Report rep = validate_fusion_ring(ising);
  REQUIRE_FALSE(rep.ok());
  // exhaustive scan: exactly the four quadruples mixing m (x) m with g fail
  std::vector<std::string> witnesses;
  for (const auto& v : rep.items)
    if (v.rule == "associativity") witnesses.push_back(v.witness);
  CHECK(witnesses ==
        std::vector<std::string>{"(1,2,2,0)", "(1,2,2,1)", "(2,2,1,0)", "(2,2,1,1)"});
}

TEST_CASE("multithreaded validation agrees with single-threaded") {
  FusionRing ising = tambara_yamagami(cyclic_group(2));
  ising.n(2, 2, 1) = 0;
  const Report one = validate_fusion_ring(ising, 1);
  const Report four = validate_fusion_ring(ising, 4);
  REQUIRE(one.items.size() == four.items.size());
  for (std::size_t i = 0; i < one.items.size(); ++i) {
    CHECK(one.items[i].rule == four.items[i].rule);
    CHECK(one.items[i].witness == four.items[i].witness);
  }
}

TEST_CASE("Frobenius-Perron dimensions") {
  SECTION("group rings are pointed") {
    for (int n : {1, 2, 5}) {
      const FpDims d = fpdim(group_ring(cyclic_group(n)));
      for (double x : d.per_label) CHECK(std::abs(x - 1.0) < 1e-9);
      CHECK(std::abs(d.total - n) < 1e-9);
    }
  }
  SECTION("Ising") {
    const FpDims d = fpdim(tambara_yamagami(cyclic_group(2)));
    CHECK(std::abs(d.per_label[2] - std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(d.total - 4.0) < 1e-9);
  }
  SECTION("rep ring of S3") {
    const FusionRing r = rep_ring(symmetric_group(3));
    const FpDims d = fpdim(r);
    std::vector<double> sorted = d.per_label;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::abs(sorted[0] - 1) < 1e-9);
    CHECK(std::abs(sorted[1] - 1) < 1e-9);
    CHECK(std::abs(sorted[2] - 2) < 1e-9);
    CHECK(std::abs(d.total - 6) < 1e-9);
  }
  SECTION("defining equation holds") {
    const FusionRing r = tambara_yamagami(cyclic_group(3));
    const FpDims d = fpdim(r);
    CHECK(std::abs(d.total - 6.0) < 1e-9);
    for (int a = 0; a < r.rank; ++a)
      for (int b = 0; b < r.rank; ++b) {
        double sum = 0;
        for (int c = 0; c < r.rank; ++c) sum += r.n(a, b, c) * d.per_label[c];
        CHECK(std::abs(sum - d.per_label[a] * d.per_label[b]) < 1e-9);
      }
  }
}

TEST_CASE("universal grading") {
  SECTION("group ring grades by itself") {
    const FiniteGroup g = symmetric_group(3);
    const Grading gr = universal_grading(group_ring(g));
    CHECK(gr.group.n == g.n);
    CHECK(validate_grading(group_ring(g), gr).ok());
  }
  SECTION("Tambara-Yamagami grades by Z2") {
    const FusionRing ty = tambara_yamagami(cyclic_group(3));
    const Grading gr = universal_grading(ty);
    REQUIRE(gr.group.n == 2);
    for (int a = 0; a < 3; ++a) CHECK(gr.deg[a] == gr.group.identity);
    CHECK(gr.deg[3] != gr.group.identity);
    CHECK(validate_grading(ty, gr).ok());
  }
  SECTION("rep ring of S3 has trivial universal grading") {
    CHECK(universal_grading(rep_ring(symmetric_group(3))).group.n == 1);
  }
}

TEST_CASE("group rings") {
  CHECK(group_ring(group_from_table({{0}})).rank == 1);
  const FusionRing z2 = group_ring(cyclic_group(2));
  CHECK(z2.n(1, 1, 0) == 1);
  CHECK(group_ring(symmetric_group(3)).rank == 6);
}

TEST_CASE("Tambara-Yamagami construction") {
  CHECK(tambara_yamagami(cyclic_group(2)).rank == 3);
  const FusionRing ty3 = tambara_yamagami(cyclic_group(3));
  CHECK(ty3.rank == 4);
  CHECK(validate_fusion_ring(ty3).ok());
  CHECK_THROWS_AS(tambara_yamagami(symmetric_group(3)), Error);
}

TEST_CASE("rep rings") {
  SECTION("Z2") {
    const FusionRing r = rep_ring(cyclic_group(2));
    CHECK(r.rank == 2);
    const FpDims d = fpdim(r);
    CHECK(std::abs(d.per_label[0] - 1) < 1e-9);
    CHECK(std::abs(d.per_label[1] - 1) < 1e-9);
  }
  SECTION("S3: degrees and the standard fusion rule") {
    const FusionRing r = rep_ring(symmetric_group(3));
    REQUIRE(r.rank == 3);
    CHECK(validate_fusion_ring(r).ok());
    CHECK(r.unit == 0);
    // labels sorted by degree: 0 trivial, 1 sign, 2 the two-dimensional one
    CHECK(r.n(2, 2, 0) == 1);
    CHECK(r.n(2, 2, 1) == 1);
    CHECK(r.n(2, 2, 2) == 1);
    CHECK(r.n(1, 1, 0) == 1);
  }
  SECTION("Q8 has degrees 1,1,1,1,2") {
    const FusionRing r = rep_ring(quaternion_group());
    REQUIRE(r.rank == 5);
    CHECK(validate_fusion_ring(r).ok());
    const FpDims d = fpdim(r);
    std::vector<double> s = d.per_label;
    std::sort(s.begin(), s.end());
    CHECK(std::abs(s[3] - 1) < 1e-9);
    CHECK(std::abs(s[4] - 2) < 1e-9);
  }
  SECTION("deterministic across seeds") {
    const FiniteGroup s3 = symmetric_group(3);
    const FusionRing base = rep_ring(s3, 0);
    for (std::uint64_t seed : {1, 2}) {
      const FusionRing other = rep_ring(s3, seed);
      CHECK(other.coeff == base.coeff);
      CHECK(other.dual == base.dual);
      CHECK(other.unit == base.unit);
    }
  }
}

TEST_CASE("based isomorphism search") {
  SECTION("identity on self") {
    const FusionRing r = rep_ring(symmetric_group(3));
    const IsoSearch res = find_based_iso(r, r);
    REQUIRE(res.status == IsoSearch::Status::found);
    for (int a = 0; a < r.rank; ++a) CHECK(res.iso->map[a] == a);
  }
  SECTION("Z4 vs Z2xZ2 has none") {
    const IsoSearch res =
        find_based_iso(group_ring(cyclic_group(4)), group_ring(klein_four_group()));
    CHECK(res.status == IsoSearch::Status::none);
  }
  SECTION("isomorphic group rings are matched and re-verified") {
    const FusionRing a = group_ring(symmetric_group(3));
    const FusionRing b = group_ring(dihedral_group(3));
    const IsoSearch res = find_based_iso(a, b);
    REQUIRE(res.status == IsoSearch::Status::found);
    const auto& m = res.iso->map;
    CHECK(m[a.unit] == b.unit);
    for (int x = 0; x < a.rank; ++x)
      for (int y = 0; y < a.rank; ++y)
        for (int z = 0; z < a.rank; ++z) CHECK(a.n(x, y, z) == b.n(m[x], m[y], m[z]));
  }
  SECTION("rings of different rank do not match") {
    const IsoSearch res =
        find_based_iso(group_ring(cyclic_group(3)), group_ring(cyclic_group(4)));
    CHECK(res.status == IsoSearch::Status::none);
  }
}

TEST_CASE("restriction to label subsets") {
  const FusionRing ty = tambara_yamagami(cyclic_group(3));
  const FusionRing pointed = restrict_to_labels(ty, {0, 1, 2});
  CHECK(pointed.rank == 3);
  CHECK(validate_fusion_ring(pointed).ok());
  CHECK_THROWS_AS(restrict_to_labels(ty, {0, 3}), Error);  // m (x) m leaves the set
}

TEST_CASE("universal grading of a group ring recovers the group") {
  for (const FiniteGroup& g : {cyclic_group(4), klein_four_group(), symmetric_group(3),
                               dihedral_group(4), quaternion_group()}) {
    const Grading ug = universal_grading(group_ring(g));
    REQUIRE(ug.group.n == g.n);
    // deg is a bijection and a homomorphism, i.e. a group isomorphism
    std::vector<bool> hit(g.n, false);
    for (int d : ug.deg) hit[d] = true;
    for (bool b : hit) CHECK(b);
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        CHECK(ug.deg[g.mul(a, b)] == ug.group.mul(ug.deg[a], ug.deg[b]));
  }
}
