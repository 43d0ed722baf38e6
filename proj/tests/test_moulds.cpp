#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace mes;
using mestest::Rng;

namespace {

// sparse random pure-v mould within the given bounds
Mould<Rat> random_vmould(Rng& rng, int dmax, int wmax, int nterms) {
    Mould<Rat> m(dmax, wmax);
    for (int i = 0; i < nterms; ++i) {
        int d = rng.uniform(0, dmax);
        std::vector<int> n;
        for (int j = 0; j < d; ++j) n.push_back(rng.uniform(1, 3));
        m.add_vterm(n, rng.rat(5));
    }
    return m;
}

// random bimould: keys carry both exponents
Mould<Rat> random_bimould(Rng& rng, int dmax, int wmax, int nterms) {
    Mould<Rat> m(dmax, wmax);
    for (int i = 0; i < nterms; ++i) {
        int d = rng.uniform(1, dmax);
        MKey key;
        for (int j = 0; j < d; ++j) key.ef.emplace_back(rng.uniform(0, 2), rng.uniform(0, 2));
        m.add_term(key, rng.rat(5));
    }
    return m;
}

}  // namespace

TEST_CASE("mould keys and truncation", "[moulds]") {
    MKey key = vkey(parse_zword("3,2"));
    CHECK(key.depth() == 2);
    CHECK(key.weight() == 5);  // depth + sum of exponents
    CHECK(key.pure_v());

    // add_vterm takes raw v-exponents; index words map letter k -> exponent k-1
    Mould<Rat> m(2, 4);
    m.add_vterm({1}, Rat(7));        // index word (2), weight 2
    m.add_vterm({1, 2}, Rat(9));     // index word (2,3), weight 5 > 4: dropped exactly
    m.add_vterm({0, 0, 0}, Rat(1));  // index word (1,1,1), depth 3 > 2: dropped exactly
    CHECK(vcoeff(m, parse_zword("2")) == Rat(7));
    CHECK(vcoeff(m, parse_zword("1,2")) == Rat(0));        // in bounds, absent
    CHECK_THROWS_AS(vcoeff(m, parse_zword("2,3")), std::out_of_range);
    CHECK_THROWS_AS(vcoeff(m, parse_zword("1,1,1")), std::out_of_range);
}

TEST_CASE("mould multiplication is deconcatenation", "[moulds]") {
    Mould<Rat> a(2, 5), b(2, 5);
    a.add_vterm({}, Rat(2));
    a.add_vterm({1}, Rat(3));  // index word (2)
    b.add_vterm({}, Rat(5));
    b.add_vterm({2}, Rat(7));  // index word (3)
    Mould<Rat> p = mould_mul(a, b);
    CHECK(vcoeff(p, ZWord()) == Rat(10));
    CHECK(vcoeff(p, parse_zword("2")) == Rat(15));
    CHECK(vcoeff(p, parse_zword("3")) == Rat(14));
    CHECK(vcoeff(p, parse_zword("2,3")) == Rat(21));
    CHECK(vcoeff(p, parse_zword("3,2")) == Rat(0));

    // mismatched truncation bounds are a usage error
    Mould<Rat> other(3, 5);
    CHECK_THROWS_AS(mould_mul(a, other), std::invalid_argument);
    CHECK_THROWS_AS(mould_add(a, other), std::invalid_argument);
}

TEST_CASE("mould algebra laws", "[moulds][property]") {
    auto seed = mestest::test_seed();
    mestest::announce_seed("mould laws", seed);
    Rng rng(seed);
    for (int trial = 0; trial < 15; ++trial) {
        CAPTURE(seed, trial);
        auto a = random_vmould(rng, 3, 6, 6);
        auto b = random_vmould(rng, 3, 6, 6);
        auto c = random_vmould(rng, 3, 6, 6);
        auto unit = mould_unit<Rat>(3, 6);
        CHECK(mould_mul(a, unit) == a);
        CHECK(mould_mul(unit, a) == a);
        CHECK(mould_mul(mould_mul(a, b), c) == mould_mul(a, mould_mul(b, c)));
        // reversal is an anti-homomorphism, sign maps are homomorphisms
        CHECK(mould_anti(mould_mul(a, b)) == mould_mul(mould_anti(b), mould_anti(a)));
        CHECK(mould_pari(mould_mul(a, b)) == mould_mul(mould_pari(a), mould_pari(b)));
        CHECK(mould_anti(mould_anti(a)) == a);
        CHECK(mould_pari(mould_pari(a)) == a);
        CHECK(mould_neg_arg(mould_neg_arg(a)) == a);
        CHECK(mould_minus(mould_minus(a)) == a);
    }
}

TEST_CASE("swap substitution is an involution", "[moulds][property]") {
    // frozen mixed-exponent example
    Mould<Rat> bm(3, 6);
    int c = 1;
    for (int r = 1; r <= 3; ++r) {
        MKey key;
        for (int i = 0; i < r; ++i) key.ef.emplace_back((i + c) % 3, (2 * i + c) % 3);
        bm.add_term(key, Rat(c++));
        MKey k2;
        for (int i = 0; i < r; ++i) k2.ef.emplace_back((i * c + 1) % 2, (i + 2 * c) % 4);
        bm.add_term(k2, Rat(-c));
    }
    CHECK(mould_swap(mould_swap(bm)) == bm);

    auto seed = mestest::test_seed();
    mestest::announce_seed("swap involution", seed);
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        CAPTURE(seed, trial);
        auto m = random_bimould(rng, 3, 6, 8);
        CHECK(mould_swap(mould_swap(m)) == m);
    }
}

TEST_CASE("gaxit requires pure v-moulds", "[moulds]") {
    Mould<Rat> bad(2, 4);
    MKey key;
    key.ef.emplace_back(1, 1);  // nonzero u-exponent
    bad.add_term(key, Rat(1));
    auto unit = mould_unit<Rat>(2, 4);
    CHECK_THROWS_AS(gaxit(bad, unit, unit), std::domain_error);
}

TEST_CASE("gaxit against the closed expansion formula", "[moulds]") {
    // formal-symbol moulds: one generator per composition
    const int D = 2, W = 5;
    auto A = make_vmould<SymPoly>(D, W, [](const ZWord& n) {
        return n.empty() ? SymPoly::one() : SymPoly::gen('a', n.k);
    });
    auto B = make_vmould<SymPoly>(D, W, [](const ZWord& n) {
        return n.empty() ? SymPoly::one() : SymPoly::gen('b', n.k);
    });
    auto G = gila(A, B);
    auto T = gilat(A, B);
    for (int r = 0; r <= D; ++r)
        for (int wt = r; wt <= W; ++wt)
            for (auto& parts : detail::compositions(wt, r, 1)) {
                ZWord k{parts};
                CAPTURE(format_zword(k));
                CHECK(vcoeff(G, k) == gila_coeff(A, B, k));
                CHECK(vcoeff(T, k) == gilat_coeff(A, B, k));
            }
}

TEST_CASE("coproduct-convolution path with the tautological character", "[moulds]") {
    const int D = 2, W = 5;
    auto A = make_vmould<WordPoly>(D, W, [](const ZWord& n) {
        return n.empty() ? WordPoly::one() : WordPoly::gen('a', n.k);
    });
    auto B = make_vmould<WordPoly>(D, W, [](const ZWord& n) {
        return n.empty() ? WordPoly::one() : WordPoly(ShuffleRing(ZLin(n)));
    });
    auto G = gila(A, B);
    for (int r = 0; r <= D; ++r)
        for (int wt = r; wt <= W; ++wt)
            for (auto& parts : detail::compositions(wt, r, 1)) {
                ZWord k{parts};
                CAPTURE(format_zword(k));
                CHECK(vcoeff(G, k) == convolve_at(A, B, k));
            }
}

TEST_CASE("expansion-term coproduct of small words", "[moulds]") {
    auto t = [](const char* l, const char* r) {
        return Tensor(ZPair(parse_zword(l), parse_zword(r)));
    };
    CHECK(goncharov_coproduct(parse_zword("3")) == t("", "3") + t("3", ""));
    CHECK(goncharov_coproduct(parse_zword("2,3")) ==
          t("", "2,3") - t("2", "3") * Rat(2) + t("3", "2") + t("2,3", ""));
}

TEST_CASE("constant-term expansion over formal symbols", "[moulds]") {
    FourierExpansion fe = fourier_expansion(parse_zword("4,2"));
    REQUIRE(fe.terms.size() == 5);
    CHECK(fe.terms.at(ZWord()) == ZLin(parse_zword("4,2")));
    CHECK(fe.terms.at(parse_zword("2")) == ZLin(parse_zword("4")) * Rat(4));
    CHECK(fe.terms.at(parse_zword("3")) == ZLin(parse_zword("3")) * Rat(2));
    CHECK(fe.terms.at(parse_zword("4")) == ZLin(parse_zword("2")) * Rat(2));
    CHECK(fe.terms.at(parse_zword("4,2")) == ZLin(ZWord()));
    // the depth-one symbol never appears, and every coefficient word is
    // admissible (first letter >= 2)
    for (auto& [g, z] : fe.terms) {
        CHECK(g != parse_zword("1"));
        CHECK(z.all_words([](const ZWord& w) { return w.in_h0(); }));
    }
    CHECK_THROWS_AS(fourier_expansion(parse_zword("1,2")), std::domain_error);
    CHECK_THROWS_AS(fourier_expansion(ZWord()), std::domain_error);
}
