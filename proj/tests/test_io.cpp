#include <gtest/gtest.h>

#include <filesystem>

#include "helpers.hpp"

namespace gag {
namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(Parse, Fixtures) {
  const auto& G = test::worked_example();
  EXPECT_EQ(G.order(), 5u);
  EXPECT_EQ(G.gammas(), 3u);
  EXPECT_EQ(G.gamma_names(), (std::vector<std::string>{"α", "β", "γ"}));
  EXPECT_EQ(G.apply(4, 2, 3), 2u);
  const auto& D = test::dot_example();
  EXPECT_EQ(D.gammas(), 1u);
  EXPECT_EQ(D.apply(3, 0, 0), 0u);  // 4 . 1 = 1
}

TEST(Parse, CommentsBlankLinesAndDefaultLabels) {
  const auto G = parse("# header\n\norder 2   # two\ngammas 1\ngamma g\n1 2\n\n2 1\n");
  EXPECT_EQ(G.labels(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(G.apply(1, 0, 1), 0u);
}

TEST(Parse, CustomLabels) {
  const auto G = parse("order 2\ngammas 1\nlabels e x\ngamma *\ne x\nx e\n");
  EXPECT_EQ(G.label(1), "x");
  EXPECT_EQ(G.apply(1, 0, 1), 0u);
}

TEST(Parse, ErrorLines) {
  EXPECT_EQ(error_line("orderr 2\n"), 1u);
  EXPECT_EQ(error_line("order 0\n"), 1u);
  EXPECT_EQ(error_line("order 2\ngammas x\n"), 2u);
  EXPECT_EQ(error_line("order 2\ngammas 1\nlabels a a\n"), 3u);
  EXPECT_EQ(error_line("order 2\ngammas 1\nlabels a\n"), 3u);
  EXPECT_EQ(error_line("order 2\ngammas 1\ngamma g\n1 2\n1 3\n"), 5u);
  EXPECT_EQ(error_line("order 2\ngammas 1\ngamma g\n1 2 1\n1 2\n"), 4u);
  EXPECT_EQ(error_line("order 2\ngammas 2\ngamma g\n1 2\n1 2\ngamma g\n1 1\n1 1\n"), 6u);
  EXPECT_EQ(error_line("order 2\ngammas 1\ngamma g\n1 2\n1 2\nextra\n"), 6u);
  EXPECT_EQ(error_line("order 2\ngammas 1\nrow\n"), 3u);
  EXPECT_EQ(error_line("order 2\ngammas 1\ngamma g\nlabels 1 2\n"), 4u);
  // Truncated input points at the last line.
  EXPECT_EQ(error_line("order 2\ngammas 1\ngamma g\n1 2\n"), 4u);
  EXPECT_EQ(error_line(""), 1u);
}

TEST(Parse, ErrorCarriesExpectedAndFound) {
  try {
    parse("order 2\ngammas 1\ngamma g\n1 2\n1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.found(), "9");
    EXPECT_EQ(e.message(), "unknown label");
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
}

TEST(Serialize, RoundTripsFixturesAndSearchOutput) {
  for (const auto* G : {&test::worked_example(), &test::dot_example()}) {
    const auto back = parse(serialize(*G));
    EXPECT_EQ(back, *G);
    EXPECT_EQ(serialize(back), serialize(*G));
  }
  for (const auto& G : test::small_left_invertive()) EXPECT_EQ(parse(serialize(G)), G);
}

TEST(Serialize, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "gag_io_roundtrip.gag";
  write_file(path, test::worked_example());
  EXPECT_EQ(parse_file(path), test::worked_example());
  std::filesystem::remove(path);
  EXPECT_THROW(parse_file(path), std::runtime_error);
}

}  // namespace
}  // namespace gag
