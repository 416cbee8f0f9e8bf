#include <gtest/gtest.h>

#include "epr/errors.hpp"
#include "epr/text_io.hpp"

namespace epr {
namespace {

TEST(TextIo, Fasta) {
    EXPECT_EQ(parse_fasta(">a\nAC GT\n;note\nTT\r\n>b\n\nG"), "ACGTTTG");
    EXPECT_EQ(parse_fasta(""), "");
    EXPECT_EQ(parse_fasta(">only header\n"), "");
}

TEST(TextIo, Raw) {
    EXPECT_EQ(parse_raw("abc\n"), "abc");
    EXPECT_EQ(parse_raw("abc\r\n"), "abc");
    EXPECT_EQ(parse_raw("abc\n\n"), "abc\n");
    EXPECT_EQ(parse_raw("a b"), "a b");
}

TEST(TextIo, Detection) {
    EXPECT_EQ(parse_text("\n>x\nAC\n", TextFormat::automatic), "AC");
    EXPECT_EQ(parse_text("AC>\n", TextFormat::automatic), "AC>");
    EXPECT_EQ(parse_text(">x\nAC\n", TextFormat::raw), ">x\nAC");
    EXPECT_EQ(parse_text_format("fasta"), TextFormat::fasta);
    EXPECT_THROW(parse_text_format("fastq"), InvalidInputError);
    EXPECT_THROW(read_file("/nonexistent/file"), Error);
}

}  // namespace
}  // namespace epr
