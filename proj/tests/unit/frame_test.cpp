#include <geocheck/frame.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace geocheck::frame;

namespace {

/// Delete-and-reduce with a plain stack, independent of the library.
std::vector<Letter> stack_reduce(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_TRUE(parse_word("A B B' A'").is_identity());
  EXPECT_EQ(parse_word("A B A' B'").str(), "A B A' B'");
  EXPECT_EQ(parse_word("A A' A").str(), "A");
  EXPECT_EQ(parse_word("1").str(), "1");
  EXPECT_EQ(ReducedWord::generator(27).str(), "x27");
  EXPECT_EQ(parse_word(ReducedWord::generator(27).str()), ReducedWord::generator(27));
}

TEST(Reduce, IsARetractionAndMatchesStackOracle) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1), len(0, 40);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = {gen(rng), sign(rng) ? 1 : -1};
    const auto r = reduce(w);
    EXPECT_EQ(r, stack_reduce(w));
    EXPECT_EQ(reduce(r), r);
  }
}

TEST(NailWord, Examples) {
  EXPECT_EQ(nail_word(1, NailScheme::kLeftNested).str(), "A");
  EXPECT_EQ(nail_word(2, NailScheme::kLeftNested).str(), "A B A' B'");
  EXPECT_EQ(nail_word(3, NailScheme::kLeftNested).str(), "A B A' B' C B A B' A' C'");
  const ReducedWord ab = commutator(ReducedWord::generator(1), ReducedWord::generator(2));
  const ReducedWord cd = commutator(ReducedWord::generator(3), ReducedWord::generator(4));
  EXPECT_EQ(nail_word(4, NailScheme::kBalanced), commutator(ab, cd));
}

TEST(NailWord, FallsWhenAnyNailIsRemoved) {
  for (auto scheme : {NailScheme::kLeftNested, NailScheme::kBalanced}) {
    for (int n = 1; n <= 6; ++n) {
      const ReducedWord w = nail_word(n, scheme);
      EXPECT_FALSE(w.is_identity()) << n;
      for (int i = 1; i <= n; ++i) EXPECT_TRUE(drop_nail(w, i).is_identity()) << "n=" << n << " nail " << i;
    }
  }
}

TEST(NailWord, LeftNestedLengthLaw) {
  std::size_t expected = 1;
  for (int n = 1; n <= 8; ++n) {
    if (n > 1) expected = 2 * expected + 2;
    EXPECT_EQ(nail_word(n, NailScheme::kLeftNested).length(), expected);
    EXPECT_EQ(expected, 3u * (1u << (n - 1)) - 2u);
  }
}

TEST(DropNail, Examples) {
  const ReducedWord ab = nail_word(2, NailScheme::kLeftNested);
  EXPECT_TRUE(drop_nail(ab, 1).is_identity());
  EXPECT_TRUE(drop_nail(nail_word(3, NailScheme::kLeftNested), 3).is_identity());
  EXPECT_EQ(drop_nail(ReducedWord::generator(1), 2), ReducedWord::generator(1));
}
