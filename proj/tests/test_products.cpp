#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace mes;
using mestest::parse_lin;
using mestest::Rng;

namespace {
ZLin lin(const char* t) { return parse_lin(t); }
}  // namespace

TEST_CASE("harmonic product of index words", "[products]") {
    CHECK(harmonic(lin("2"), lin("2")) == lin("2,2") * Rat(2) + lin("4"));
    CHECK(harmonic(lin("2"), lin("3")) == lin("2,3") + lin("3,2") + lin("5"));
    // unit
    CHECK(harmonic(lin(""), lin("3,2")) == lin("3,2"));
    CHECK(harmonic(lin("3,2"), lin("")) == lin("3,2"));
}

TEST_CASE("shuffle product of index words", "[products]") {
    CHECK(shuffle(lin("2"), lin("2")) == lin("2,2") * Rat(2) + lin("3,1") * Rat(4));
    // same computation at the letter level
    XYLin xy = shuffle_xy(encode_xy(parse_zword("2")), encode_xy(parse_zword("2")));
    CHECK(decode_xy(xy) == shuffle(lin("2"), lin("2")));
    CHECK(shuffle(lin(""), lin("2,1")) == lin("2,1"));
}

TEST_CASE("product defect ds = harmonic - shuffle", "[products]") {
    CHECK(ds(parse_zword("2"), parse_zword("2")) == lin("4") - lin("3,1") * Rat(4));
    CHECK(ds(parse_zword("2,1"), parse_zword("2")) ==
          lin("2,3") + lin("4,1") - lin("2,2,1") - lin("3,1,1") * Rat(6));
    CHECK(ds(parse_zword("2"), ZWord()).is_zero());
}

TEST_CASE("balanced harmonic product", "[products]") {
    // zero-free balanced words multiply exactly like index words
    CHECK(harmonic_b(BLin(parse_bword("2")), BLin(parse_bword("3"))) ==
          BLin(parse_bword("5")) + BLin(parse_bword("2,3")) + BLin(parse_bword("3,2")));
    // an internal zero-run participates in the letter merge
    BLin got = harmonic_b(BLin(parse_bword("2,0,2")), BLin(parse_bword("2")));
    BLin want = BLin(parse_bword("2,0,4")) + BLin(parse_bword("4,0,2")) +
                BLin(parse_bword("2,0,2,2")) * Rat(2) + BLin(parse_bword("2,2,0,2")) * Rat(2);
    CHECK(got == want);
}

TEST_CASE("products are commutative and associative", "[products][property]") {
    auto seed = mestest::test_seed();
    mestest::announce_seed("product laws", seed);
    Rng rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
        ZWord u = rng.zword(3, 1, 4), v = rng.zword(3, 1, 4), w = rng.zword(2, 1, 4);
        CAPTURE(seed, trial, format_zword(u), format_zword(v), format_zword(w));
        CHECK(harmonic(ZLin(u), ZLin(v)) == harmonic(ZLin(v), ZLin(u)));
        CHECK(shuffle(ZLin(u), ZLin(v)) == shuffle(ZLin(v), ZLin(u)));
        CHECK(harmonic(harmonic(ZLin(u), ZLin(v)), ZLin(w)) ==
              harmonic(ZLin(u), harmonic(ZLin(v), ZLin(w))));
        CHECK(shuffle(shuffle(ZLin(u), ZLin(v)), ZLin(w)) ==
              shuffle(ZLin(u), shuffle(ZLin(v), ZLin(w))));
        // zero-free balanced words multiply like index words
        BLin bz = harmonic_b(BLin(to_bword(u)), BLin(to_bword(v)));
        BLin viaz;
        for (auto& [x, c] : harmonic(ZLin(u), ZLin(v)).terms()) viaz.add_term(to_bword(x), c);
        CHECK(bz == viaz);
    }
    for (int trial = 0; trial < 25; ++trial) {
        BWord u = rng.bword(3, 3, 1), v = rng.bword(3, 3, 1);
        CAPTURE(seed, trial, format_bword(u), format_bword(v));
        CHECK(harmonic_b(BLin(u), BLin(v)) == harmonic_b(BLin(v), BLin(u)));
    }
}

TEST_CASE("regularized evaluation reg0", "[products]") {
    // leading-one words acquire lower-depth corrections
    CHECK(reg0(lin("1,1"), ProductKind::Harmonic) == lin("2") * Rat(-1, 2));
    CHECK(reg0(lin("1,2"), ProductKind::Harmonic) == -lin("2,1") - lin("3"));
    CHECK(reg0(lin("1,2"), ProductKind::Shuffle) == lin("2,1") * Rat(-2));
    CHECK(reg0(lin("1,1,2"), ProductKind::Shuffle) == lin("2,1,1") * Rat(3));
    // pure powers of the weight-one letter vanish under the shuffle rule
    for (int n = 1; n <= 4; ++n) {
        ZWord ones;
        for (int i = 0; i < n; ++i) ones.k.push_back(1);
        CHECK(reg0(ZLin(ones), ProductKind::Shuffle).is_zero());
    }
    // identity on words that already start with a letter >= 2
    CHECK(reg0(lin("3,1,2"), ProductKind::Harmonic) == lin("3,1,2"));
    CHECK(reg0(lin(""), ProductKind::Shuffle) == lin(""));
}

TEST_CASE("reg0 is an algebra map killing the weight-one letter", "[products][property]") {
    auto seed = mestest::test_seed();
    mestest::announce_seed("reg0 homomorphism", seed);
    Rng rng(seed);
    for (auto kind : {ProductKind::Harmonic, ProductKind::Shuffle}) {
        CHECK(reg0(lin("1"), kind).is_zero());
        for (int trial = 0; trial < 30; ++trial) {
            ZWord u = rng.zword(3, 1, 3), v = rng.zword(3, 1, 3);
            CAPTURE(seed, trial, kind == ProductKind::Harmonic, format_zword(u),
                    format_zword(v));
            auto prod = [&](const ZLin& a, const ZLin& b) {
                return kind == ProductKind::Harmonic ? harmonic(a, b) : shuffle(a, b);
            };
            CHECK(reg0(prod(ZLin(u), ZLin(v)), kind) ==
                  prod(reg0(ZLin(u), kind), reg0(ZLin(v), kind)));
            // projection: applying twice changes nothing
            CHECK(reg0(reg0(ZLin(u), kind), kind) == reg0(ZLin(u), kind));
        }
    }
}
