#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "setkit/binary_conditions.hpp"
#include "setkit/boolean_completion.hpp"
#include "setkit/finite_poset.hpp"
#include "setkit/generic_filter.hpp"

using namespace setkit;

namespace {

FinitePoset closed_chain(std::size_t n) {
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) els.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(els[i], els[i + 1]);
  return FinitePoset(els, pairs, true);
}

FinitePoset antichain(std::size_t n) {
  std::vector<std::string> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back("a" + std::to_string(i));
  return FinitePoset(els, {}, true);
}

FinitePoset diamond() {
  return FinitePoset({"bot", "l", "r", "top"},
                     {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}, true);
}

}  // namespace

TEST_CASE("down-set topology on a two-chain") {
  FinitePoset P = closed_chain(2);  // c0 <= c1
  DownSetTopology T(P);

  CHECK(T.ground_size() == 2);
  CHECK(T.full() == 0b11u);
  CHECK(T.basic_open(0) == 0b01u);
  CHECK(T.basic_open(1) == 0b11u);

  CHECK(T.is_open(0b00));
  CHECK(T.is_open(0b01));
  CHECK(T.is_open(0b11));
  CHECK_FALSE(T.is_open(0b10));  // {c1} misses the stronger c0

  CHECK(T.interior(0b10) == 0b00u);
  CHECK(T.closure(0b01) == 0b11u);
  CHECK(T.closure(0b10) == 0b10u);
  CHECK(T.regularize(0b01) == 0b11u);
  CHECK(T.regularize(0b10) == 0b00u);
}

TEST_CASE("interior and closure laws, exhaustively on a diamond") {
  FinitePoset P = diamond();
  DownSetTopology T(P);
  const Mask full = T.full();
  for (Mask b = 0; b <= full; ++b) {
    CHECK((T.interior(b) & ~b) == 0u);
    CHECK((b & ~T.closure(b)) == 0u);
    CHECK(T.interior(T.interior(b)) == T.interior(b));
    CHECK(T.closure(T.closure(b)) == T.closure(b));
    CHECK(T.is_open(T.interior(b)));
    CHECK(T.interior(b) == Mask(full & ~T.closure(Mask(full & ~b))));
    CHECK(T.regularize(T.regularize(b)) == T.regularize(b));
    for (Mask c = 0; c <= full; ++c)
      if ((b & ~c) == 0u) {
        CHECK((T.interior(b) & ~T.interior(c)) == 0u);
        CHECK((T.closure(b) & ~T.closure(c)) == 0u);
      }
  }
}

TEST_CASE("regular open carrier sizes of the standard small posets") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(ro_algebra(closed_chain(n)).size() == 2);
  CHECK(ro_algebra(antichain(2)).size() == 4);
  CHECK(ro_algebra(antichain(3)).size() == 8);
  CHECK(ro_algebra(diamond()).size() == 2);
  CHECK(ro_algebra(k_window(1)).size() == 16);
  CHECK_THROWS_AS(ro_algebra(antichain(13)), limit_error);
  CHECK_THROWS_AS(ro_algebra(antichain(5), 4), limit_error);
}

TEST_CASE("the discrete algebra is the powerset") {
  RegularOpenAlgebra A = ro_algebra(antichain(3));
  const Mask full = A.topology().full();
  REQUIRE(A.size() == 8);
  CHECK(A.element(A.zero()) == 0u);
  CHECK(A.element(A.one()) == full);
  for (int a = 0; a < 8; ++a) {
    CHECK(A.index_of(A.element(a)) == a);
    CHECK(A.element(A.complement(a)) == Mask(full & ~A.element(a)));
    for (int b = 0; b < 8; ++b) {
      CHECK(A.element(A.meet(a, b)) == Mask(A.element(a) & A.element(b)));
      CHECK(A.element(A.join(a, b)) == Mask(A.element(a) | A.element(b)));
      CHECK(A.leq(a, b) == ((A.element(a) & ~A.element(b)) == 0u));
    }
  }
  auto atoms = A.atoms();
  REQUIRE(atoms.size() == 3);
  std::set<std::string> names;
  for (int a : atoms) names.insert(A.describe(a));
  CHECK(names == std::set<std::string>{"{a0}", "{a1}", "{a2}"});
  CHECK(A.describe(A.zero()) == "{}");
  for (std::size_t p = 0; p < 3; ++p) CHECK(A.embed(p) == A.index_of(Mask{1} << p));
}

TEST_CASE("embedding checks") {
  EmbeddingReport rep = verify_embedding(ro_algebra(closed_chain(4)));
  CHECK(rep.ok());
  CHECK(rep.witness.empty());
  CHECK(rep.incompatible_pairs == 0);
  CHECK(rep.third_clause_vacuous);

  rep = verify_embedding(ro_algebra(k_window(1)));
  CHECK(rep.ok());
  CHECK(rep.incompatible_pairs > 0);
  CHECK_FALSE(rep.third_clause_vacuous);

  CHECK(verify_embedding(ro_algebra(diamond())).ok());
  CHECK(verify_embedding(ro_algebra(antichain(4))).ok());
}

TEST_CASE("boolean algebra laws and completeness") {
  BaLawsReport rep = ba_laws_check(ro_algebra(antichain(3)));
  CHECK(rep.laws);
  CHECK(rep.complete);
  CHECK(rep.complete_exhaustive);
  CHECK(rep.witness.empty());

  rep = ba_laws_check(ro_algebra(closed_chain(3)));
  CHECK(rep.ok());
  CHECK(rep.complete_exhaustive);

  rep = ba_laws_check(ro_algebra(antichain(5)));  // carrier 32
  CHECK(rep.laws);
  CHECK(rep.complete);
  CHECK_FALSE(rep.complete_exhaustive);

  CHECK(ba_laws_check(ro_algebra(k_window(1))).ok());
  CHECK_THROWS_AS(ba_laws_check(ro_algebra(antichain(10))), limit_error);
}

TEST_CASE("the nonzero carrier as a poset") {
  RegularOpenAlgebra A = ro_algebra(antichain(2));
  FinitePoset AP = algebra_poset(A);
  REQUIRE(AP.size() == A.size() - 1);
  for (int a = 0; a < static_cast<int>(A.size()); ++a) {
    if (a == A.zero()) continue;
    for (int b = 0; b < static_cast<int>(A.size()); ++b) {
      if (b == A.zero()) continue;
      CHECK(AP.leq(AP.index(A.describe(a)), AP.index(A.describe(b))) == A.leq(a, b));
    }
  }
}

TEST_CASE("stone space points are the ultrafilters") {
  RegularOpenAlgebra A = ro_algebra(closed_chain(3));
  StoneSpace S = stone_space(A);
  REQUIRE(S.points.size() == 1);
  CHECK(S.points[0] == std::vector<int>{A.one()});
  CHECK(S.point_min[0] == A.one());
  CHECK(S.basic_open[static_cast<std::size_t>(A.zero())] == 0u);
  CHECK(S.basic_open[static_cast<std::size_t>(A.one())] == 1u);

  for (std::size_t n = 2; n <= 4; ++n) {
    RegularOpenAlgebra B = ro_algebra(antichain(n));
    StoneSpace SB = stone_space(B);
    auto atoms = B.atoms();
    REQUIRE(SB.points.size() == n);
    CHECK(atoms.size() == n);
    FinitePoset AP = algebra_poset(B);
    CHECK(enumerate_ultrafilters(AP).size() == n);
    std::set<int> mins(SB.point_min.begin(), SB.point_min.end());
    CHECK(mins == std::set<int>(atoms.begin(), atoms.end()));
    // Each point really is a maximal filter of the nonzero carrier.
    for (const auto& pt : SB.points) {
      ElementSet G = AP.empty_set();
      for (int b : pt) G.set(AP.index(B.describe(b)));
      CHECK(is_ultrafilter(AP, G));
    }
    // Monotone and bounded basic-open map.
    CHECK(SB.basic_open[static_cast<std::size_t>(B.zero())] == 0u);
    CHECK(SB.basic_open[static_cast<std::size_t>(B.one())] ==
          (std::uint32_t{1} << n) - 1);
    for (int b = 0; b < static_cast<int>(B.size()); ++b)
      for (int c = 0; c < static_cast<int>(B.size()); ++c)
        if (B.leq(b, c))
          CHECK((SB.basic_open[static_cast<std::size_t>(b)] &
                 ~SB.basic_open[static_cast<std::size_t>(c)]) == 0u);
    CHECK(stone_ccc_check(B, SB).ok());
  }

  RegularOpenAlgebra K = ro_algebra(k_window(1));
  StoneSpace SK = stone_space(K);
  CHECK(SK.points.size() == 4);
  CHECK(stone_ccc_check(K, SK).ok());
  CHECK(stone_ccc_check(A, S).ok());
}

TEST_CASE("a generic filter pulled back through the embedding") {
  FinitePoset W = k_window(1);
  auto conds = k_window_conditions(1);
  RegularOpenAlgebra A = ro_algebra(W);
  FinitePoset AP = algebra_poset(A);

  auto ap_index = [&](std::size_t p) { return AP.index(A.describe(A.embed(p))); };

  // Dense subsets of the window, then their images in the algebra.
  std::vector<ElementSet> dense_in_w;
  ElementSet d0 = W.empty_set(), d1 = W.empty_set();
  for (std::size_t p = 0; p < W.size(); ++p) {
    if (conds[p].defined_at(0)) d0.set(p);
    if (conds[p].defined_at(1)) d1.set(p);
  }
  dense_in_w.push_back(d0);
  dense_in_w.push_back(d1);
  for (std::size_t p = 0; p < W.size(); ++p)
    for (std::size_t q = 0; q < W.size(); ++q) dense_in_w.push_back(dpq_dense(W, p, q));

  std::vector<ElementSet> images;
  std::vector<std::function<bool(const std::size_t&)>> dense;
  for (const auto& D : dense_in_w) {
    ElementSet img = AP.empty_set();
    for (std::size_t p = D.find_first(); p != ElementSet::npos; p = D.find_next(p))
      img.set(ap_index(p));
    CHECK(is_dense(AP, img));
    images.push_back(img);
    dense.push_back([&AP, img](const std::size_t& x) { return img.test(x); });
  }

  auto res = generic_filter(as_lazy(AP), dense, AP.index(A.describe(A.one())), 10000);
  ElementSet G = AP.empty_set();
  for (std::size_t x : res.filter) G.set(x);
  CHECK(is_filter(AP, G));

  ElementSet H = W.empty_set();
  for (std::size_t p = 0; p < W.size(); ++p)
    if (G.test(ap_index(p))) H.set(p);
  CHECK(is_filter(W, H));
  CHECK((H & d0).any());
  CHECK((H & d1).any());
}
