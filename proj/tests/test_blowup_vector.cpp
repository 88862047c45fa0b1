#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace toric {
namespace {

using test::R;

BlowupVector V(const char* s) { return parse_blowup_vector(s); }

TEST(BlowupVector, RejectsBadEntries) {
  EXPECT_THROW(BlowupVector(R(1), {R(1, 3), R(1, 3)}), DomainError);
  EXPECT_THROW(BlowupVector(R(0), {R(1, 3), R(1, 3), R(1, 3)}), DomainError);
  EXPECT_THROW(BlowupVector(R(1), {R(1, 3), R(0), R(1, 3)}), DomainError);
}

TEST(ParseBlowupVector, Syntax) {
  EXPECT_EQ(V("1; 1/3, 1/3, 1/9"), BlowupVector(R(1), {R(1, 3), R(1, 3), R(1, 9)}));
  EXPECT_EQ(V("  5/2 ;1,1 ,1/2 "), BlowupVector(R(5, 2), {R(1), R(1), R(1, 2)}));
  EXPECT_THROW(V("1; 0.3, 0.3, 0.1"), ParseError);
  EXPECT_EQ(parse_blowup_vector("1; 0.3, 0.3, 0.1", true), BlowupVector(R(1), {R(3, 10), R(3, 10), R(1, 10)}));

  try {
    V("1; 1/3, x, 1/9");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  try {
    V("1; 1/3, 1/3, -1/9");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
  EXPECT_THROW(V("1; 1/3, 1/3"), ParseError);
  EXPECT_THROW(V("1, 1/3, 1/3, 1/3"), ParseError);
  EXPECT_THROW(V("1; 1/3,, 1/3"), ParseError);
}

TEST(ParseBlowupVector, PrintRoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto v = test::random_reduced_vector(rng, 3 + i % 5, 60);
    EXPECT_EQ(parse_blowup_vector(to_string(v)), v);
  }
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(is_reduced(V("1; 1/3, 1/3, 1/9")));
  EXPECT_FALSE(is_reduced(V("1; 1/3, 1/2, 1/9")));
  EXPECT_FALSE(is_reduced(V("1; 1/2, 2/5, 3/10")));
  EXPECT_TRUE(is_reduced(V("1; 1/2, 1/4, 1/4")));  // equality allowed
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(V("1; 1/3, 1/3, 1/9")), V("1; 1/3, 1/3, 1/9"));
  // One move: lambda' = 2 - 6/5, deltas (1 - 7/10, 1 - 8/10, 1 - 9/10).
  EXPECT_EQ(reduce(V("1; 1/2, 2/5, 3/10")), V("4/5; 3/10, 1/5, 1/10"));
  EXPECT_TRUE(is_reduced(reduce(V("1; 1/2, 2/5, 3/10"))));
  EXPECT_EQ(reduce(V("1; 1/9, 1/3, 1/3")), V("1; 1/3, 1/3, 1/9"));
  EXPECT_THROW(reduce(V("2; 1, 1, 1")), NotBlowupClass);
}

TEST(Reduce, RecoversFromCremonaScrambles) {
  std::mt19937_64 rng(99);
  int scrambled = 0;
  for (int i = 0; i < 100; ++i) {
    const auto original = test::random_reduced_vector(rng, 3 + i % 4, 30);
    EXPECT_EQ(reduce(original), original);

    BlowupVector v = original;
    std::uniform_int_distribution<std::size_t> pos(0, v.k() - 1);
    for (int step = 0; step < 6; ++step) {
      std::size_t a = pos(rng), b = pos(rng), c = pos(rng);
      if (a == b || b == c || a == c) continue;
      if (auto moved = cremona_move(v, a, b, c)) v = *moved;
      std::vector<Rational> d = v.deltas();
      std::shuffle(d.begin(), d.end(), rng);
      v = BlowupVector(v.lambda(), d);
    }
    if (!(v == original)) ++scrambled;
    const auto back = reduce(v);
    EXPECT_EQ(back, original) << to_string(v);
    EXPECT_EQ(reduce(back), back);
  }
  EXPECT_GT(scrambled, 80);
}

TEST(DerivedParams, Examples) {
  auto p = derived_params(V("1; 1/3, 1/3, 1/9"));
  EXPECT_EQ(p.delta, R(1, 3));
  EXPECT_EQ(p.a, R(2, 3));
  EXPECT_EQ(p.b, R(2, 3));

  p = derived_params(V("1; 3/10, 3/10, 1/10, 1/10, 1/10, 1/10"));
  EXPECT_EQ(p.delta, R(2, 5));
  EXPECT_EQ(p.a, R(7, 10));
  EXPECT_EQ(p.b, R(7, 10));

  p = derived_params(V("1; 1/2, 1/4, 1/8"));
  EXPECT_EQ(p.delta, R(1, 4));
  EXPECT_EQ(p.a, R(3, 4));
  EXPECT_EQ(p.b, R(1, 2));

  EXPECT_THROW(derived_params(V("1; 1/2, 2/5, 3/10")), PreconditionError);
}

TEST(DerivedParams, PositiveOnRandomReducedVectors) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto v = test::random_reduced_vector(rng, 3 + i % 5, 60);
    const auto p = derived_params(v);
    EXPECT_GT(p.delta, 0);
    EXPECT_GT(p.b, 0);
    EXPECT_GE(p.a, p.b);
    if (v.delta(1) == v.delta(2)) {
      EXPECT_EQ(p.a, p.b);
    }
  }
}

TEST(NonexistenceCheck, CriterionA) {
  const auto r = nonexistence_check(V("1; 9/20, 9/20, 1/10, 1/10, 1/10, 1/10"));
  EXPECT_EQ(r.verdict, Existence::none_exist);
  EXPECT_EQ(r.criterion, 'a');
}

TEST(NonexistenceCheck, CriterionB) {
  auto r = nonexistence_check(V("1; 1/5, 1/5, 1/5, 1/5"));
  EXPECT_EQ(r.verdict, Existence::none_exist);
  EXPECT_EQ(r.criterion, 'b');
  EXPECT_EQ(r.index, 1u);

  r = nonexistence_check(V("1; 1/4, 1/8, 1/8, 1/8, 1/8, 1/8"));
  EXPECT_EQ(r.criterion, 'b');
  EXPECT_EQ(r.index, 2u);

  // Five equal from delta_2 is one short of what i = 2 needs.
  EXPECT_EQ(nonexistence_check(V("1; 1/4, 1/8, 1/8, 1/8, 1/8, 1/16")).verdict, Existence::inconclusive);
}

TEST(NonexistenceCheck, Inconclusive) {
  EXPECT_EQ(nonexistence_check(V("1; 1/3, 1/3, 1/9")).verdict, Existence::inconclusive);
  EXPECT_EQ(nonexistence_check(V("1; 3/10, 3/10, 1/10, 1/10, 1/10, 1/10")).verdict, Existence::inconclusive);
  EXPECT_EQ(nonexistence_check(V("1; 1/5, 1/5, 1/5")).verdict, Existence::inconclusive);  // needs k >= 4
  EXPECT_THROW(nonexistence_check(V("1; 1/9, 1/3, 1/3")), PreconditionError);
}

TEST(BoundReport, Examples) {
  auto r = bound_report(V("1; 1/3, 1/3, 1/9"));
  EXPECT_EQ(r.bound, 5);
  EXPECT_TRUE(r.attained);

  r = bound_report(V("1; 1/3, 1/3, 1/9, 1/27"));
  EXPECT_EQ(r.bound, 30);
  EXPECT_TRUE(r.attained);

  r = bound_report(V("1; 1/10, 1/10, 1/10"));
  EXPECT_EQ(r.bound, 5);
  EXPECT_EQ(r.conditions, (std::array<bool, 4>{true, true, true, false}));
  EXPECT_FALSE(r.attained);

  // a/b = 16/15: two seeds plus ceil((1/20)/(3/4)) = 1, times 5!/24.
  r = bound_report(V("1; 1/4, 1/5, 1/20"));
  EXPECT_EQ(r.bound, 15);
  EXPECT_FALSE(r.conditions[0]);  // 2 * 3/4 >= 1

  // k = 5: condition (ii) checks delta_4 + delta_5 < delta_3 and delta_5 < delta_4.
  r = bound_report(V("1; 1/4, 1/4, 1/8, 1/16, 1/16"));
  EXPECT_EQ(r.bound, 210);
  EXPECT_FALSE(r.conditions[1]);
  EXPECT_FALSE(r.attained);
}

}  // namespace
}  // namespace toric
