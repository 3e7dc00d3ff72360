#include <doctest.h>

#include <random>
#include <vector>

#include "setkit/ordinal.hpp"
#include "setkit/well_orders.hpp"

using namespace setkit;

namespace {

Ordinal ev(const std::string& s) { return parse_ordinal(s); }

// Random CNF ordinal below w^w: up to three terms, natural exponents <= 4,
// coefficients 1..5.
Ordinal random_small(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), expo(0, 4), coeff(1, 5);
  int k = nterms(rng);
  std::vector<int> exps;
  for (int i = 0; i < k; ++i) exps.push_back(expo(rng));
  std::sort(exps.rbegin(), exps.rend());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  Ordinal acc;
  for (int e : exps)
    acc = acc + Ordinal::single_term(Ordinal::from_nat(static_cast<unsigned long>(e)),
                                     coeff(rng));
  return acc;
}

}  // namespace

TEST_CASE("natural arithmetic embeds faithfully") {
  for (unsigned long a = 0; a <= 6; ++a)
    for (unsigned long b = 0; b <= 6; ++b) {
      CHECK(add(Ordinal::from_nat(a), Ordinal::from_nat(b)) == Ordinal::from_nat(a + b));
      CHECK(mul(Ordinal::from_nat(a), Ordinal::from_nat(b)) == Ordinal::from_nat(a * b));
    }
  CHECK(pow(Ordinal::from_nat(2ul), Ordinal::from_nat(10ul)) == Ordinal::from_nat(1024ul));
  CHECK(pow(Ordinal::from_nat(0ul), Ordinal::from_nat(0ul)) == Ordinal::from_nat(1ul));
  CHECK(pow(Ordinal::from_nat(0ul), Ordinal::from_nat(3ul)) == Ordinal::from_nat(0ul));
  CHECK(Ordinal::from_nat(7ul).is_nat());
  CHECK(Ordinal::from_nat(7ul).nat_value() == 7);
  CHECK_FALSE(Ordinal::omega().is_nat());
}

TEST_CASE("worked identities") {
  CHECK(ev("1+2") == ev("3"));
  CHECK(ev("1+w") == ev("w"));
  CHECK(ev("w+1") != ev("w"));
  CHECK(to_string(ev("w+1")) == "w + 1");
  CHECK(ev("2*w") == ev("w"));
  CHECK(ev("w*2") == ev("w+w"));
  CHECK(ev("(1+1)*w") == ev("w"));
  CHECK(ev("(1+1)*w") != ev("w+w"));
  CHECK(ev("2^3") == ev("8"));
  CHECK(ev("2^w") == ev("w"));
  CHECK(to_string(ev("w^w")) == "w^w");
  CHECK(ev("(w+1)^2") == ev("w^2+w+1"));
  CHECK(ev("2^(w*2+3)") == ev("w^2*8"));
  CHECK(ev("w^0") == ev("1"));
  CHECK(ev("(w^2+w)*w") == ev("w^3"));
  CHECK(ev("w*0") == ev("0"));
}

TEST_CASE("comparison is the expected order") {
  std::vector<std::string> chain_exprs = {"0",   "1",     "5",       "w",
                                          "w+1", "w*2",   "w*2+7",   "w^2",
                                          "w^2*3 + w + 5", "w^3", "w^w", "w^(w+1)",
                                          "w^w^w"};
  for (std::size_t i = 0; i < chain_exprs.size(); ++i)
    for (std::size_t j = 0; j < chain_exprs.size(); ++j) {
      auto got = compare(ev(chain_exprs[i]), ev(chain_exprs[j]));
      if (i < j) CHECK(got == std::strong_ordering::less);
      if (i == j) CHECK(got == std::strong_ordering::equal);
      if (i > j) CHECK(got == std::strong_ordering::greater);
    }
  CHECK(compare(ev("w+1"), ev("w*2")) == std::strong_ordering::less);
}

TEST_CASE("classify and sup_list") {
  CHECK(classify(ev("0")) == OrdinalKind::Zero);
  CHECK(classify(ev("5")) == OrdinalKind::Successor);
  CHECK(classify(ev("w")) == OrdinalKind::Limit);
  CHECK(classify(ev("w+3")) == OrdinalKind::Successor);
  CHECK(classify(ev("w^2+w")) == OrdinalKind::Limit);
  CHECK(sup_list({}) == ev("0"));
  std::vector<Ordinal> items = {ev("w"), ev("w^2"), ev("5")};
  CHECK(sup_list(items) == ev("w^2"));
}

TEST_CASE("rendering round-trips") {
  // Canonical strings print back unchanged.
  for (const char* s : {"0", "5", "w", "w*2", "w + 1", "w^2*3 + w + 5", "w^w",
                        "w^(w + 1)*2 + w^2 + 3", "w^w*2 + 1"}) {
    CHECK(to_string(ev(s)) == s);
  }
  // Arbitrary values survive print/parse.
  const unsigned seed = 20240817;
  INFO("seed " << seed);
  std::mt19937 rng(seed);
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = random_small(rng);
    CHECK(parse_ordinal(to_string(a)) == a);
  }
  // Including exponents beyond w^w.
  Ordinal big = pow(ev("w"), ev("w^2+1")) + ev("w^(w*2)*4 + w^5*2 + 9");
  CHECK(parse_ordinal(to_string(big)) == big);
}

TEST_CASE("parser rejects malformed input") {
  for (const char* s : {"", "w+", "(w", "w^", "* w", "2*^3", "foo", "w w", "()",
                        "1+", "^2", "w^^2", "3)", "w+()", "-1"}) {
    CHECK_THROWS_AS(parse_ordinal(s), parse_error);
  }
}

TEST_CASE("arithmetic laws on random ordinals") {
  const unsigned seed = 424242;
  INFO("seed " << seed);
  std::mt19937 rng(seed);
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = random_small(rng), b = random_small(rng), c = random_small(rng);
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    // Strict right monotonicity.
    if (compare(b, c) == std::strong_ordering::less)
      CHECK(compare(add(a, b), add(a, c)) == std::strong_ordering::less);
    // Successor clauses.
    CHECK(add(a, Ordinal()) == a);
    CHECK(add(a, add(b, Ordinal::from_nat(1ul))) ==
          add(add(a, b), Ordinal::from_nat(1ul)));
    CHECK(mul(a, Ordinal()).is_zero());
    CHECK(mul(a, Ordinal::from_nat(1ul)) == a);
    CHECK(mul(a, add(b, Ordinal::from_nat(1ul))) == add(mul(a, b), a));
    // Trichotomy of compare.
    auto ab = compare(a, b);
    auto ba = compare(b, a);
    if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
    if (ab == std::strong_ordering::equal) {
      CHECK(ba == std::strong_ordering::equal);
      CHECK(a == b);
    }
    auto bc = compare(b, c);
    if (ab == std::strong_ordering::less && bc == std::strong_ordering::less)
      CHECK(compare(a, c) == std::strong_ordering::less);
  }
}

TEST_CASE("small oracle agreement with explicit orders") {
  for (std::size_t a = 0; a <= 5; ++a)
    for (std::size_t b = 0; b <= 5; ++b) {
      FiniteRelation ra = chain(a, "a"), rb = chain(b, "b");
      CHECK(order_type_small(sum_order(ra, rb)) ==
            add(Ordinal::from_nat(a), Ordinal::from_nat(b)));
      CHECK(order_type_small(product_order(ra, rb)) ==
            mul(Ordinal::from_nat(a), Ordinal::from_nat(b)));
    }
}

TEST_CASE("pow guards against astronomically large results") {
  CHECK_THROWS_AS(pow(Ordinal::from_nat(2ul), Ordinal::from_nat(1ul << 27)),
                  limit_error);
  CHECK_THROWS_AS(pow(ev("w+1"), Ordinal::from_nat(100001ul)), limit_error);
  // Just inside the multi-term bound: (w+1)^n = w^n + ... + w + 1.
  Ordinal p = pow(ev("w+1"), Ordinal::from_nat(1000ul));
  CHECK(p.terms().size() == 1001);
  CHECK(p.leading_exponent() == Ordinal::from_nat(1000ul));
  CHECK(p.terms().back().coefficient == 1);
}

TEST_CASE("stepwise recursion along the naturals") {
  auto tri = recurse_omega<unsigned long>(
      0ul, [](std::size_t i, unsigned long prev) { return prev + (i + 1); }, 4);
  CHECK(tri == std::vector<unsigned long>{0, 1, 3, 6, 10});

  auto fact = recurse_omega<unsigned long>(
      1ul, [](std::size_t i, unsigned long prev) { return prev * (i + 1); }, 4);
  CHECK(fact == std::vector<unsigned long>{1, 1, 2, 6, 24});

  auto constant = recurse_omega<int>(7, [](std::size_t, int prev) { return prev; }, 3);
  CHECK(constant == std::vector<int>{7, 7, 7, 7});

  CHECK_THROWS_AS(recurse_omega<int>(0, [](std::size_t, int p) { return p; }, 100, 10),
                  limit_error);
}
