#include <gtest/gtest.h>

#include <string>

#include "hsbs/error.hpp"
#include "hsbs/key_value.hpp"

using namespace hsbs;

TEST(KeyValues, NormalizesKeysAndSkipsComments) {
    const auto kv = KeyValues::parse("ENVI\n# comment\n; another\n  Data   Type = 12 \n\nlines=3\n");
    EXPECT_EQ(kv.require("data type"), "12");
    EXPECT_EQ(kv.require("lines"), "3");
    EXPECT_FALSE(kv.contains("envi"));
}

TEST(KeyValues, BracedValuesSpanLines) {
    const auto kv = KeyValues::parse("wavelength = {400.0,\n 410.0,\n 420.0}\nbands = 3\n");
    EXPECT_EQ(kv.require("bands"), "3");
    const std::string w = kv.require("wavelength");
    EXPECT_EQ(w.front(), '{');
    EXPECT_EQ(w.back(), '}');
}

TEST(KeyValues, LaterDuplicateWins) {
    EXPECT_EQ(KeyValues::parse("a = 1\na = 2\n").require("a"), "2");
}

TEST(KeyValues, RequireNamesMissingKey) {
    const auto kv = KeyValues::parse("a = 1\n");
    try {
        kv.require("samples");
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("samples"), std::string::npos);
    }
}

TEST(KeyValues, MalformedLineRejected) {
    EXPECT_THROW(KeyValues::parse("no equals sign here\n"), FormatError);
    EXPECT_THROW(KeyValues::parse("x = {unterminated\n"), FormatError);
}

TEST(Scalars, StrictParsing) {
    EXPECT_EQ(parse_int("-4", "f"), -4);
    EXPECT_EQ(parse_uint("17", "f"), 17u);
    EXPECT_DOUBLE_EQ(parse_double("0.25", "f"), 0.25);
    EXPECT_TRUE(parse_bool("true", "f"));
    EXPECT_FALSE(parse_bool("0", "f"));
    EXPECT_THROW(parse_int("4x", "f"), FormatError);
    EXPECT_THROW(parse_uint("-1", "f"), FormatError);
    EXPECT_THROW(parse_double("", "f"), FormatError);
    EXPECT_THROW(parse_double("nan", "f"), FormatError);
    EXPECT_THROW(parse_bool("maybe", "f"), FormatError);
}
