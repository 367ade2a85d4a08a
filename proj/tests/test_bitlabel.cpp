#include <doctest.h>

#include "daisy/bitlabel.hpp"

using daisy::BitLabel;
using daisy::Error;
using daisy::ErrorCode;

TEST_CASE("string round trip puts coordinate 0 first") {
    BitLabel l = BitLabel::from_string("110");
    CHECK(l.width() == 3);
    CHECK(l.test(0));
    CHECK(l.test(1));
    CHECK(!l.test(2));
    CHECK(l.bits() == 0b011);  // coordinate 0 is the low bit
    CHECK(l.to_string() == "110");
    CHECK(BitLabel(4, 0b0101).to_string() == "1010");
}

TEST_CASE("weight, flip, xor, hamming") {
    BitLabel l = BitLabel::from_string("1010");
    CHECK(l.weight() == 2);
    CHECK(l.with_flipped(1).to_string() == "1110");
    CHECK((l ^ BitLabel::from_string("0110")).to_string() == "1100");
    CHECK(l.hamming(BitLabel::from_string("0101")) == 4);
    CHECK(l.hamming(l) == 0);
}

TEST_CASE("containment order") {
    auto sub = [](const char* a, const char* b) {
        return BitLabel::from_string(a).subsumed_by(BitLabel::from_string(b));
    };
    CHECK(sub("0000", "1010"));
    CHECK(sub("1010", "1010"));
    CHECK(sub("1000", "1010"));
    CHECK(!sub("0100", "1010"));
    CHECK(!sub("1010", "1000"));
}

TEST_CASE("lex order matches string order") {
    std::vector<std::string> strs{"110", "000", "101", "011", "100", "111"};
    std::vector<BitLabel> ls;
    for (const auto& s : strs) ls.push_back(BitLabel::from_string(s));
    daisy::sort_labels_lex(ls);
    std::sort(strs.begin(), strs.end());
    for (size_t i = 0; i < strs.size(); ++i) CHECK(ls[i].to_string() == strs[i]);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(BitLabel(65, 0), Error);
    CHECK_THROWS_AS(BitLabel(2, 0b100), Error);
    CHECK_THROWS_AS(BitLabel::from_string("01x"), Error);
    CHECK_THROWS_AS(BitLabel(3, 0).with_flipped(3), Error);
    CHECK_THROWS_AS(BitLabel(3, 0).hamming(BitLabel(4, 0)), Error);
    // width 64 is the inclusive cap
    BitLabel wide(64, ~uint64_t{0});
    CHECK(wide.weight() == 64);
}
