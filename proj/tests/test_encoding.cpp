#include <gtest/gtest.h>

#include <random>

#include "lifetrace/encoding.hpp"
#include "support.hpp"

using namespace lifetrace;

namespace {

// The word written out directly from the definition.
std::string expected_word(const FiniteConfig& y, int M, int N, bool row_major) {
  std::string w(std::size_t(M), '0');
  w += std::string(std::size_t(N), '1');
  w += '0';
  if (row_major) {
    for (int b = -N; b <= N; ++b)
      for (int a = -M; a <= M; ++a) w += char('0' + y.at(a, b));
  } else {
    for (int a = -M; a <= M; ++a)
      for (int b = -N; b <= N; ++b) w += char('0' + y.at(a, b));
  }
  return w;
}

}  // namespace

TEST(EncodingTest, ZeroConfiguration) {
  const EncodedConfig e = encode_config(FiniteConfig{});
  EXPECT_EQ(e.M, 0);
  EXPECT_EQ(e.N, 0);
  EXPECT_EQ(word_to_string(e.word), "00");
  EXPECT_TRUE(decode_config(word_from_string("00")).is_zero());
}

TEST(EncodingTest, PayloadLength) {
  Pattern p(Rect{-1, -2, 3, 5});
  p.set(1, 2, 1);
  p.set(-1, -2, 1);
  const EncodedConfig e = encode_config(FiniteConfig(p));
  EXPECT_EQ(e.M, 1);
  EXPECT_EQ(e.N, 2);
  EXPECT_EQ(e.word.size(), std::size_t(1 + 2 + 1 + 15));
  EXPECT_EQ(word_to_string(e.word), expected_word(FiniteConfig(p), 1, 2, true));
}

TEST(EncodingTest, RoundTripBothOrders) {
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    const int w = 1 + int(rng() % 6), h = 1 + int(rng() % 6);
    const Coordinate o{int(rng() % 7) - 4, int(rng() % 7) - 4};
    const FiniteConfig y(testsupport::random_pattern(rng, w, h, 30, o));
    for (PayloadOrder order : {PayloadOrder::RowMajor, PayloadOrder::ColumnMajor}) {
      const EncodedConfig e = encode_config(y, order);
      EXPECT_EQ(word_to_string(e.word), expected_word(y, e.M, e.N, order == PayloadOrder::RowMajor));
      EXPECT_EQ(decode_config(e.word, 2, order), y);
    }
  }
}

TEST(EncodingTest, BoundsAreLeast) {
  std::mt19937 rng(10);
  for (int t = 0; t < 50; ++t) {
    const FiniteConfig y(testsupport::random_pattern(rng, 4, 3, 25, Coordinate{int(rng() % 5) - 2, -1}));
    const EncodedConfig e = encode_config(y);
    const Rect s = y.support_box();
    if (s.empty()) {
      EXPECT_EQ(e.M + e.N, 0);
      continue;
    }
    EXPECT_EQ(e.M, std::max(std::abs(s.x), std::abs(s.x_end() - 1)));
    EXPECT_EQ(e.N, std::max(std::abs(s.y), std::abs(s.y_end() - 1)));
  }
}

TEST(EncodingTest, SingleRowConfigurations) {
  // N = 0 words are 0^(M+1) followed by the row, so the row may start with 0s.
  Pattern p(Rect{-3, 0, 7, 1});
  p.set(3, 0, 1);
  const FiniteConfig y(p);
  const EncodedConfig e = encode_config(y);
  EXPECT_EQ(e.N, 0);
  EXPECT_EQ(word_to_string(e.word), "00000000001");
  EXPECT_EQ(decode_config(e.word), y);
}

TEST(EncodingTest, MalformedWords) {
  EXPECT_THROW(decode_config(word_from_string("")), EncodingError);
  EXPECT_THROW(decode_config(word_from_string("0")), EncodingError);
  EXPECT_THROW(decode_config(word_from_string("111")), EncodingError);
  EXPECT_THROW(decode_config(word_from_string("0000")), EncodingError);
  EXPECT_THROW(decode_config(word_from_string("0102")), EncodingError);
  // Right prefix, wrong payload length.
  EXPECT_THROW(decode_config(word_from_string("0100000000000")), EncodingError);
  EXPECT_THROW(word_from_string("01a"), EncodingError);
  EXPECT_EQ(word_from_string(" 0 0\n"), (std::vector<Symbol>{0, 0}));
}

TEST(EncodingTest, LargerAlphabet) {
  Pattern p(Rect{0, 0, 1, 1}, 2);
  const EncodedConfig e = encode_config(FiniteConfig(p));
  EXPECT_EQ(decode_config(e.word, 3), FiniteConfig(p));
  EXPECT_THROW(decode_config(e.word, 2), EncodingError);
}
