#include <gtest/gtest.h>

#include <sstream>

#include "uep/code.hpp"
#include "uep/word.hpp"

namespace {

using uep::Word;

uep::UepCode make_code(unsigned n, std::vector<std::size_t> shape, std::vector<std::string> words) {
  uep::UepCode c;
  c.n = n;
  c.shape = std::move(shape);
  for (const auto& w : words) c.book.push_back(Word::parse(w));
  c.profile = uep::verify_profile(c);
  return c;
}

TEST(Word, IndexAndString) {
  const auto w = Word::from_index(5, 0b10110);
  EXPECT_EQ(w.str(), "10110");
  EXPECT_TRUE(w.get(0));
  EXPECT_FALSE(w.get(1));
  EXPECT_EQ(w.weight(), 3u);
  EXPECT_EQ(w.to_index(), 0b10110u);
  EXPECT_EQ(Word::parse("10110"), w);
  EXPECT_THROW(Word::parse("1021"), uep::Error);
}

TEST(Word, LongWords) {
  std::string s(200, '0');
  s[0] = s[64] = s[199] = '1';
  const auto w = Word::parse(s);
  EXPECT_EQ(w.weight(), 3u);
  EXPECT_EQ(w.str(), s);
  auto v = w;
  v.flip(199);
  EXPECT_EQ(uep::hamming_distance(w, v), 1u);
  EXPECT_LT(v, w);
}

TEST(Word, OrderIsLexicographic) {
  EXPECT_LT(Word::parse("0111"), Word::parse("1000"));
  EXPECT_LT(Word::parse("0011"), Word::parse("0101"));
}

TEST(Profile, SingleLevel) {
  const auto c = make_code(3, {2}, {"000", "111"});
  EXPECT_EQ(c.profile, (std::vector<uep::Distance>{3}));
}

TEST(Profile, TwoLevelHandExample) {
  const auto c = make_code(4, {2, 2}, {"0000", "0011", "1111", "1100"});
  EXPECT_EQ(c.profile, (std::vector<uep::Distance>{2, 2}));
}

TEST(Profile, TrivialLevelIsUnbounded) {
  const auto c = make_code(3, {1, 2}, {"000", "011"});
  EXPECT_EQ(c.profile[0], uep::kUnbounded);
  EXPECT_EQ(c.profile[1], 2u);
}

TEST(Profile, DuplicateCodewordsGiveZero) {
  const auto c = make_code(3, {2, 2}, {"000", "011", "000", "110"});
  EXPECT_EQ(c.profile[0], 0u);
  EXPECT_FALSE(uep::profile_satisfies(c.profile, {1, 1}));
}

TEST(Profile, IndependentPairLoop) {
  const auto c = make_code(5, {2, 3}, {"00000", "00011", "00101", "11110", "11000", "11011"});
  std::vector<uep::Distance> expect(2, uep::kUnbounded);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == j) continue;
      const auto d = static_cast<uep::Distance>(uep::hamming_distance(c.book[i], c.book[j]));
      if (i / 3 != j / 3) expect[0] = std::min(expect[0], d);
      if (i % 3 != j % 3) expect[1] = std::min(expect[1], d);
    }
  EXPECT_EQ(c.profile, expect);
}

TEST(Profile, NeedsTwoCodewords) {
  uep::UepCode c;
  c.n = 3;
  c.shape = {1};
  c.book = {Word::parse("000")};
  EXPECT_THROW(uep::verify_profile(c), uep::Error);
}

TEST(Messages, MixedRadixOrder) {
  const auto c = make_code(5, {2, 3}, {"00000", "00011", "00101", "11110", "11000", "11011"});
  EXPECT_EQ(c.index_of({1, 2}), 5u);
  EXPECT_EQ(c.message_of(4), (uep::MessageTuple{1, 1}));
  EXPECT_EQ(c.at({1, 0}).str(), "11110");
  EXPECT_THROW(c.index_of({2, 0}), uep::Error);
}

TEST(Codebook, RoundTrip) {
  const auto c = make_code(5, {2, 3}, {"00000", "00011", "00101", "11110", "11000", "11011"});
  std::ostringstream out;
  uep::write_codebook(out, c);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "uep v1 n=5 shape=2,3 profile=2,2");
  std::istringstream in(out.str());
  const auto back = uep::read_codebook(in);
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.shape, c.shape);
  EXPECT_EQ(back.profile, c.profile);
  EXPECT_EQ(back.book, c.book);
  std::ostringstream again;
  uep::write_codebook(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(Codebook, UnboundedProfileRoundTrips) {
  const auto c = make_code(3, {1, 2}, {"000", "011"});
  std::ostringstream out;
  uep::write_codebook(out, c);
  std::istringstream in(out.str());
  EXPECT_EQ(uep::read_codebook(in).profile[0], uep::kUnbounded);
}

uep::ErrorKind read_error(const std::string& text) {
  std::istringstream in(text);
  try {
    uep::read_codebook(in);
  } catch (const uep::Error& e) {
    return e.kind();
  }
  return uep::ErrorKind::kInternal;
}

TEST(Codebook, RejectsMalformedInput) {
  const auto bad = uep::ErrorKind::kMalformedInput;
  EXPECT_EQ(read_error(""), bad);
  EXPECT_EQ(read_error("uep v2 n=3 shape=2 profile=3\n0\t000\n1\t111\n"), bad);
  EXPECT_EQ(read_error("uep v1 n=3 shape=2 profile=3\n0\t000\n"), bad);
  EXPECT_EQ(read_error("uep v1 n=3 shape=2 profile=3\n0\t000\n0\t111\n"), bad);
  EXPECT_EQ(read_error("uep v1 n=3 shape=2 profile=3\n0\t000\n1\t11\n"), bad);
  EXPECT_EQ(read_error("uep v1 n=3 shape=2 profile=3\n0\t000\n2\t111\n"), bad);
  EXPECT_EQ(read_error("uep v1 n=3 shape=2 profile=3\n0\t000\n1 111\n"), bad);
  EXPECT_EQ(read_error("uep v1 n=3 shape=2,2 profile=3\n"), bad);
}

}  // namespace
