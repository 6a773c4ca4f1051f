#include <gtest/gtest.h>

#include "tdc/coloring_io.hpp"

namespace tdc {
namespace {

using Lists = std::vector<std::vector<int>>;

TEST(ParseColoring, Json) {
    EXPECT_EQ(parse_coloring("[[1,8],[2,9],[3,5,7],[4,6]]"), (Lists{{1, 8}, {2, 9}, {3, 5, 7}, {4, 6}}));
    EXPECT_EQ(parse_coloring("  \n[[1], [2]]"), (Lists{{1}, {2}}));
}

TEST(ParseColoring, Text) {
    EXPECT_EQ(parse_coloring("1 8\n2,9\n# comment\n\n3 5 7  # tail\n4, 6\n"),
              (Lists{{1, 8}, {2, 9}, {3, 5, 7}, {4, 6}}));
}

TEST(ParseColoring, TextErrorsCarryPosition) {
    try {
        parse_coloring("1 2\n3 x 4\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
    EXPECT_THROW(parse_coloring(""), ParseError);
    EXPECT_THROW(parse_coloring("# only a comment\n"), ParseError);
    EXPECT_THROW(parse_coloring("-1 2"), ParseError);
}

TEST(ParseColoring, JsonErrors) {
    try {
        parse_coloring("[[1,2],\n [3,]]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_coloring("[1,2]"), ParseError);
    EXPECT_THROW(parse_coloring("[[1,\"a\"]]"), ParseError);
}

}  // namespace
}  // namespace tdc
