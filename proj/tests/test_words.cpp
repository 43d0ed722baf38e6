#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace mes;
using mestest::Rng;

TEST_CASE("index words: weight, depth, spaces", "[words]") {
    ZWord w = parse_zword("3,2");
    CHECK(w.weight() == 5);
    CHECK(w.depth() == 2);
    CHECK(w.in_h0());
    CHECK(w.in_ge2());

    CHECK(ZWord().empty());
    CHECK(ZWord().weight() == 0);
    CHECK(ZWord().in_h0());
    CHECK(ZWord().in_ge2());

    CHECK(parse_zword("1,2").in(Space::H1));
    CHECK_FALSE(parse_zword("1,2").in(Space::H0));
    CHECK(parse_zword("2,1").in_h0());
    CHECK_FALSE(parse_zword("2,1").in_ge2());

    // at most one letter 1, never leading
    CHECK(parse_zword("2,1,3").in_ge2alm());
    CHECK(parse_zword("2,3").in_ge2alm());
    CHECK_FALSE(parse_zword("1,2").in_ge2alm());
    CHECK_FALSE(parse_zword("2,1,1").in_ge2alm());
}

TEST_CASE("letter encoding between index and xy alphabets", "[words]") {
    CHECK(encode_xy(parse_zword("2")).s == "xy");
    CHECK(encode_xy(parse_zword("1")).s == "y");
    CHECK(encode_xy(parse_zword("3,2")).s == "xxyxy");
    CHECK(decode_xy(XYWord("xxyxy")) == parse_zword("3,2"));
    CHECK(decode_xy(encode_xy(ZWord())) == ZWord());
    CHECK_THROWS_AS(decode_xy(XYWord("xyx")), std::domain_error);
    CHECK_THROWS_AS(XYWord("xza"), std::invalid_argument);
}

TEST_CASE("canonical order: weight, then depth, then lexicographic", "[words]") {
    auto words = enumerate_basis(6, Space::GE2);
    std::vector<std::string> got;
    for (auto& w : words) got.push_back(format_zword(w));
    CHECK(got == std::vector<std::string>{"(6)", "(2,4)", "(3,3)", "(4,2)", "(2,2,2)"});
    CHECK(std::is_sorted(words.begin(), words.end(),
                         [](const ZWord& a, const ZWord& b) { return canonical_less(a, b); }));
}

TEST_CASE("basis enumeration counts", "[words]") {
    // all words: compositions of k -> 2^(k-1); empty word at weight 0
    CHECK(enumerate_basis(0, Space::H1).size() == 1);
    for (int k = 1; k <= 10; ++k)
        CHECK(enumerate_basis(k, Space::H1).size() == (1u << (k - 1)));
    // first letter >= 2: 2^(k-2)
    CHECK(enumerate_basis(1, Space::H0).empty());
    for (int k = 2; k <= 10; ++k)
        CHECK(enumerate_basis(k, Space::H0).size() == (1u << (k - 2)));
    // all letters >= 2: Fibonacci-counted
    for (int k = 0; k <= 12; ++k)
        CHECK(static_cast<long>(enumerate_basis(k, Space::GE2).size()) == generator_count(k));
    CHECK(generator_count(14) == 233);
}

TEST_CASE("word parsing errors", "[words]") {
    CHECK(parse_zword("") == ZWord());
    CHECK_THROWS_AS(parse_zword("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zword("-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zword("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zword("2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zword("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bword("0,2"), std::domain_error);  // leading b0
    CHECK_THROWS_AS(parse_bword("2,-1"), std::invalid_argument);
}

TEST_CASE("balanced words: flat form and tau", "[words]") {
    BWord w = parse_bword("2,0,3");
    CHECK(w.weight() == 6);
    CHECK(w.depth() == 2);
    CHECK(format_bword(w) == "[2,0,3]");
    CHECK(BWord::from_flat(w.flat()) == w);

    // tau reverses runs and trades (letter, zero-run) for (zero-run+1, letter-1)
    CHECK(tau(w) == parse_bword("1,0,0,2,0"));
    CHECK(tau(tau(w)) == w);
    CHECK(tau(BWord()) == BWord());

    // index words embed as zero-free balanced words
    CHECK(to_bword(parse_zword("2,3")) == parse_bword("2,3"));
}

TEST_CASE("random words: encode/decode and tau round-trips", "[words][property]") {
    auto seed = mestest::test_seed();
    mestest::announce_seed("words round-trips", seed);
    Rng rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(seed, trial);
        ZWord w = rng.zword(6, 1, 5);
        XYWord xw = encode_xy(w);
        CHECK(static_cast<int>(xw.s.size()) == w.weight());
        CHECK(decode_xy(xw) == w);

        BWord b = rng.bword(4, 4, 2);
        CAPTURE(format_bword(b));
        CHECK(BWord::from_flat(b.flat()) == b);
        CHECK(tau(tau(b)) == b);
        CHECK(tau(b).weight() == b.weight());
    }
}
