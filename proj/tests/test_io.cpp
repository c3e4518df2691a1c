#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "support.hpp"
#include "twinchain/error.hpp"
#include "twinchain/io.hpp"

using namespace twinchain;
using support::for_all;
using support::Rng;

namespace {

const std::filesystem::path kFixtures = TWINCHAIN_FIXTURE_DIR;

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_pair(text);
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no exception for:\n" << text;
  return {};
}

}  // namespace

TEST(Io, LineFormat) {
  const PosetPair pair = parse_pair("# wedge\nd = 3\n3 < 1\n3 < 2   # bottom\n\nd = 3\n2 < 1\n2 < 3\n");
  EXPECT_EQ(pair.p, oracle::wedge());
  EXPECT_EQ(pair.q, oracle::wedge_b());
  EXPECT_EQ(parse_pair("d=2\nd=2\n").p, Poset::antichain(2));
}

TEST(Io, JsonFormats) {
  const PosetPair obj = parse_pair(R"({"P": {"d": 3, "covers": [[3, 1], [3, 2]]}, "Q": {"d": 3, "relation": [[2, 1], [2, 3]]}})");
  EXPECT_EQ(obj.p, oracle::wedge());
  EXPECT_EQ(obj.q, oracle::wedge_b());
  const PosetPair arr = parse_pair(R"(  [{"d": 2, "covers": [[1, 2]]}, {"d": 2}])");
  EXPECT_EQ(arr.p, Poset::chain(2));
  EXPECT_EQ(arr.q, Poset::antichain(2));
}

TEST(Io, ErrorsNameTheField) {
  EXPECT_NE(message_of<DimensionMismatch>("d = 2\nd = 3\n").find("Q.d"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("d = 2\n").find("Q.d"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("").find("P.d"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("1 < 2\n").find("P.d"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("d = x\nd = 2\n").find("P.d"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("d = 2\nd = 2\n1 - 2\n").find("Q.covers"), std::string::npos);
  EXPECT_NE(message_of<IndexError>("d = 2\n1 < 3\nd = 2\n").find("P.covers"), std::string::npos);
  EXPECT_NE(message_of<CycleError>("d = 2\nd = 2\n1 < 2\n2 < 1\n").find("Q.covers"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("d = 1\nd = 1\nd = 1\n").find("more than two"), std::string::npos);
  EXPECT_NE(message_of<ParseError>(R"({"P": {"d": 2}, "Q": {"d": "two"}})").find("Q.d"), std::string::npos);
  EXPECT_NE(message_of<ParseError>(R"({"P": {"d": 2}})").find("Q"), std::string::npos);
  EXPECT_NE(message_of<ParseError>(R"({"P": {"d": 2, "covers": [[1]]}, "Q": {"d": 2}})").find("P.covers[0]"),
            std::string::npos);
  EXPECT_NE(message_of<IndexError>(R"({"P": {"d": 2, "covers": [[1, 9]]}, "Q": {"d": 2}})").find("P.covers[0]"),
            std::string::npos);
  EXPECT_NE(message_of<IndexError>(R"({"P": {"d": 2, "covers": [[1, 99999999999]]}, "Q": {"d": 2}})").find("P.covers"),
            std::string::npos);
  EXPECT_NE(message_of<ParseError>("{not json").find("JSON"), std::string::npos);
  EXPECT_NE(message_of<ParseError>("d = 40\nd = 40\n").find("P.d"), std::string::npos);
}

TEST(Io, InvalidFixtures) {
  const auto dir = kFixtures / "invalid";
  EXPECT_THROW(read_pair_file(dir / "mismatched_d.txt"), DimensionMismatch);
  EXPECT_THROW(read_pair_file(dir / "cycle.txt"), CycleError);
  EXPECT_THROW(read_pair_file(dir / "index_out_of_range.txt"), IndexError);
  EXPECT_THROW(read_pair_file(dir / "missing_q.txt"), ParseError);
  EXPECT_THROW(read_pair_file(dir / "bad_field.json"), ParseError);
  EXPECT_THROW(read_pair_file(dir / "does_not_exist.txt"), IoError);
}

TEST(Io, JsonAndLineFixturesAgree) {
  const PosetPair line = read_pair_file(kFixtures / "wedge_pair_a.txt");
  const PosetPair json = read_pair_file(kFixtures / "wedge_pair_a.json");
  EXPECT_EQ(line.p, json.p);
  EXPECT_EQ(line.q, json.q);
}

TEST(Io, FormatRoundTrips) {
  for_all(61, 200, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 0, 10);
    const Poset p = support::random_poset(rng, d);
    const Poset q = support::random_poset(rng, d);
    const std::string text = format_pair(p, q);
    const PosetPair back = parse_pair(text);
    EXPECT_EQ(back.p, p);
    EXPECT_EQ(back.q, q);
    EXPECT_EQ(format_pair(back.p, back.q), text);
  });
}

TEST(Io, FamilyFormats) {
  const FacetFamily f = facet_chains(oracle::wedge(), oracle::wedge_b());
  const std::string text = format_family(f, false);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
  EXPECT_NE(text.find("P: [2] Q: [3]\n"), std::string::npos);
  EXPECT_EQ(text.substr(0, text.find('\n')), "P: [] Q: [1, 2]");
  const std::string json = format_family(f, true);
  EXPECT_NE(json.find(R"({"P": [2], "Q": [3]})"), std::string::npos);
  EXPECT_EQ(std::count(json.begin(), json.end(), '\n'), 11);
}
