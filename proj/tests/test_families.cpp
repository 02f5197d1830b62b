#include <doctest.h>

#include <cmath>
#include <vector>

#include "ffproj/families.hpp"
#include "ffproj/gen.hpp"
#include "ffproj/grassmann.hpp"
#include "ffproj/rng.hpp"

using namespace ffproj;

namespace {

SubspaceFamily lines(Ambient amb,
                     const std::vector<std::vector<std::uint32_t>>& dirs) {
  std::vector<Subspace> ms;
  for (const auto& d : dirs) ms.push_back(Subspace::from_rows(amb, {d}));
  return SubspaceFamily(amb, 1, std::move(ms));
}

}  // namespace

TEST_CASE("families deduplicate and validate") {
  Ambient amb{Prime(3), 3};
  // (1,0,0) and (2,0,0) span the same line.
  SubspaceFamily e = lines(amb, {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}});
  CHECK(e.size() == 2);
  CHECK(e.member_dim() == 1);
  CHECK(e.contains(Subspace::from_rows(amb, {{2, 0, 0}})));
  CHECK(!e.contains(Subspace::from_rows(amb, {{0, 0, 1}})));

  CHECK_THROWS_AS(SubspaceFamily(amb, 4), RangeError);
  CHECK_THROWS_AS(
      SubspaceFamily(amb, 2, {Subspace::from_rows(amb, {{1, 0, 0}})}),
      RangeError);
  Ambient other{Prime(5), 3};
  CHECK_THROWS_AS(
      SubspaceFamily(amb, 1, {Subspace::from_rows(other, {{1, 0, 0}})}),
      AmbientMismatch);
}

TEST_CASE("non-degeneracy at small scale") {
  Ambient amb{Prime(3), 2};
  CHECK(is_nondegenerate(lines(amb, {{1, 0}, {0, 1}})).nondegenerate);

  auto single = is_nondegenerate(lines(amb, {{1, 0}}));
  CHECK(!single.nondegenerate);
  REQUIRE(single.witness.has_value());
  CHECK(*single.witness == Subspace::from_rows(amb, {{1, 0}}));

  // A witness meets every member, by definition.
  Ambient a3{Prime(3), 3};
  SubspaceFamily few = lines(a3, {{1, 0, 0}, {0, 1, 0}});
  auto r = is_nondegenerate(few);
  CHECK(!r.nondegenerate);
  REQUIRE(r.witness.has_value());
  for (std::size_t i = 0; i < few.size(); ++i)
    CHECK(!is_transverse(few[i], *r.witness));
}

TEST_CASE("coordinate families are non-degenerate in every dimension") {
  for (std::size_t m = 0; m <= 4; ++m) {
    SubspaceFamily e = coordinate_family(Ambient{Prime(2), 4}, m);
    // C(4, m) members.
    std::size_t binom[] = {1, 4, 6, 4, 1};
    CHECK(e.size() == binom[m]);
    CHECK(is_nondegenerate(e).nondegenerate);
  }
  SubspaceFamily top = coordinate_family(Ambient{Prime(5), 3}, 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == Subspace::full(Ambient{Prime(5), 3}));
  SubspaceFamily ls = coordinate_family(Ambient{Prime(7), 3}, 1);
  CHECK(ls.size() == 3);
  CHECK(ls.contains(Subspace::from_rows(Ambient{Prime(7), 3}, {{0, 1, 0}})));
  CHECK_THROWS_AS(coordinate_family(Ambient{Prime(2), 3}, 4), RangeError);
}

TEST_CASE("non-concentration compares exactly against rational exponents") {
  Ambient amb{Prime(3), 2};
  // All four lines of the plane: every V meets exactly one member.
  std::vector<Subspace> all = gr_enumerate(amb, 1);
  SubspaceFamily e(amb, 1, std::move(all));
  REQUIRE(e.size() == 4);

  auto ok = nonconcentration_check(e, Rational(1));  // 1 <= 4/3
  CHECK(ok.holds);
  CHECK(ok.worst_count == 1);
  auto tight = nonconcentration_check(e, Rational(5, 4));  // 3^(5/4) < 4
  CHECK(tight.holds);
  auto fail = nonconcentration_check(e, Rational(2));  // 1 > 4/9
  CHECK(!fail.holds);
  CHECK(fail.worst_count == 1);

  // Singleton with positive kappa never passes.
  auto s = nonconcentration_check(lines(amb, {{1, 1}}), Rational(1, 2));
  CHECK(!s.holds);
  CHECK(s.worst_count == 1);
  CHECK_THROWS_AS(nonconcentration_check(e, Rational(-1)), RangeError);
}

TEST_CASE("non-concentration implies non-degeneracy on random families") {
  Rng rng(606);
  Ambient amb{Prime(3), 3};
  int seen_holds = 0;
  for (int trial = 0; trial < 40; ++trial) {
    SubspaceFamily e = random_family(amb, 1, 2 + rng.below(8), rng);
    auto nc = nonconcentration_check(e, Rational(1, 3));
    if (!nc.holds) continue;
    ++seen_holds;
    CHECK(is_nondegenerate(e).nondegenerate);
  }
  CHECK(seen_holds > 0);  // the implication was actually exercised
}

TEST_CASE("common intersection") {
  Ambient amb{Prime(3), 3};
  SubspaceFamily coord = coordinate_family(amb, 2);
  CHECK(common_intersection(coord).dim() == 0);

  Subspace w = Subspace::from_rows(amb, {{1, 0, 2}, {0, 1, 1}});
  CHECK(common_intersection(SubspaceFamily(amb, 2, {w})) == w);

  // All hyperplanes of F_3^3 containing span{e1} meet exactly in span{e1}.
  Subspace e1 = Subspace::from_rows(amb, {{1, 0, 0}});
  std::vector<Subspace> containing;
  for (const auto& h : gr_enumerate(amb, 2))
    if (h.contains(e1)) containing.push_back(h);
  CHECK(containing.size() == 4);
  CHECK(common_intersection(SubspaceFamily(amb, 2, std::move(containing))) ==
        e1);

  CHECK_THROWS_AS(common_intersection(SubspaceFamily(amb, 1)), EmptyFamily);
}

TEST_CASE("hyperplane families: non-degenerate iff trivial intersection") {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t n : {2, 3}) {
      Ambient amb{Prime(p), n};
      std::vector<Subspace> hyp = gr_enumerate(amb, n - 1);
      // Every family of one, two, or three hyperplanes.
      for (std::size_t i = 0; i < hyp.size(); ++i) {
        for (std::size_t j = i; j < hyp.size(); ++j) {
          for (std::size_t k = j; k < hyp.size(); ++k) {
            SubspaceFamily e(amb, n - 1, {hyp[i], hyp[j], hyp[k]});
            bool nondeg = is_nondegenerate(e).nondegenerate;
            bool trivial = common_intersection(e).dim() == 0;
            CHECK(nondeg == trivial);
          }
        }
      }
    }
  }
}

TEST_CASE("sum family") {
  Ambient amb{Prime(3), 3};
  SubspaceFamily cl = coordinate_family(amb, 1);
  SubspaceFamily planes = sum_family(cl, cl);
  CHECK(planes.member_dim() == 2);
  CHECK(planes.size() == 3);  // {e_i + e_j : i != j}
  CHECK(planes.contains(Subspace::from_rows(amb, {{1, 0, 0}, {0, 1, 0}})));

  // Adding the zero family is the identity.
  SubspaceFamily zero(amb, 0, {Subspace::zero(amb)});
  SubspaceFamily same = sum_family(zero, cl);
  CHECK(same.size() == cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) CHECK(same.contains(cl[i]));

  // No transverse pair -> empty result.
  SubspaceFamily e1 = lines(amb, {{1, 0, 0}});
  CHECK(sum_family(e1, e1).empty());

  Ambient a4{Prime(3), 4};
  SubspaceFamily pl4 = coordinate_family(a4, 2);
  CHECK_THROWS_AS(sum_family(pl4, pl4), DimOverflow);
}

TEST_CASE("cap family and its duality route") {
  Ambient amb{Prime(3), 3};
  SubspaceFamily cp = coordinate_family(amb, 2);
  SubspaceFamily capped = cap_family(cp, cp);
  CHECK(capped.member_dim() == 1);
  CHECK(capped.size() == 3);  // pairwise meets of distinct coordinate planes

  // W cap W has dimension 2, not 1: excluded.
  SubspaceFamily one(amb, 2,
                     {Subspace::from_rows(amb, {{1, 0, 0}, {0, 1, 0}})});
  CHECK(cap_family(one, one).empty());

  // Intersecting with the full space gives back the family.
  SubspaceFamily full(amb, 3, {Subspace::full(amb)});
  SubspaceFamily back = cap_family(full, cp);
  CHECK(back.size() == cp.size());

  SubspaceFamily ls = coordinate_family(amb, 1);
  CHECK_THROWS_AS(cap_family(ls, ls), DimUnderflow);

  // cap through duality: perp(sum(perp, perp)) computes the same family.
  Rng rng(1999);
  for (int trial = 0; trial < 10; ++trial) {
    SubspaceFamily a = random_family(amb, 2, 3, rng);
    SubspaceFamily b = random_family(amb, 2, 3, rng);
    SubspaceFamily direct = cap_family(a, b);
    SubspaceFamily dual =
        perp_family(sum_family(perp_family(a), perp_family(b)));
    CHECK(direct.size() == dual.size());
    for (std::size_t i = 0; i < direct.size(); ++i)
      CHECK(dual.contains(direct[i]));
  }
}

TEST_CASE("perp family is a size-preserving involution") {
  Ambient amb{Prime(3), 3};
  SubspaceFamily cl = coordinate_family(amb, 1);
  SubspaceFamily pf = perp_family(cl);
  CHECK(pf.member_dim() == 2);
  CHECK(pf.size() == 3);
  // Coordinate lines dualize to coordinate planes.
  SubspaceFamily cp = coordinate_family(amb, 2);
  for (std::size_t i = 0; i < cp.size(); ++i) CHECK(pf.contains(cp[i]));

  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    SubspaceFamily e = random_family(amb, 1 + rng.below(2), 4, rng);
    SubspaceFamily twice = perp_family(perp_family(e));
    CHECK(twice.size() == e.size());
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(twice.contains(e[i]));
    CHECK(perp_family(e).size() == e.size());
  }
}

TEST_CASE("family constructions preserve non-degeneracy with the size bound") {
  Rng rng(7777);
  for (std::size_t n : {3, 4}) {
    Ambient amb{Prime(3), n};
    int done = 0;
    while (done < 8) {
      SubspaceFamily a = random_family(amb, 1, 3 + rng.below(4), rng);
      if (n >= 3 && !is_nondegenerate(a).nondegenerate) continue;
      if (n == 4) {
        SubspaceFamily b = random_family(amb, 1, 3 + rng.below(4), rng);
        if (!is_nondegenerate(b).nondegenerate) continue;
        SubspaceFamily s = sum_family(a, b);
        CHECK(is_nondegenerate(s).nondegenerate);
        CHECK(std::pow(double(std::max(a.size(), b.size())), 1.0 / n) <=
              double(s.size()) + 1e-9);
        ++done;
      } else {
        SubspaceFamily s = sum_family(a, a);
        CHECK(is_nondegenerate(s).nondegenerate);
        CHECK(std::pow(double(a.size()), 1.0 / n) <= double(s.size()) + 1e-9);
        // Duals of non-degenerate hyperplane-complement families.
        CHECK(is_nondegenerate(perp_family(a)).nondegenerate);
        // cap of the dual planes mirrors the sum of the lines.
        SubspaceFamily c = cap_family(perp_family(a), perp_family(a));
        CHECK(is_nondegenerate(c).nondegenerate);
        CHECK(std::pow(double(a.size()), 1.0 / n) <= double(c.size()) + 1e-9);
        ++done;
      }
    }
  }
}

TEST_CASE("random families of many lines are usually non-degenerate") {
  // k = 12 members with m = 1, n = 3, p = 5: k > m(n-m), so almost all
  // samples are non-degenerate; demand at least 95 percent of 200.
  Ambient amb{Prime(5), 3};
  Rng rng(20240801);
  int hits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SubspaceFamily e = random_family(amb, 1, 12, rng);
    if (is_nondegenerate(e).nondegenerate) ++hits;
  }
  CHECK(hits >= 190);
}
