#pragma once

// The two products on index words and the product on balanced words, plus the
// product defect and the constant-term regularization reg0.
//
//   harmonic:  z_k u * z_l v = z_k(u * z_l v) + z_l(z_k u * v) + z_{k+l}(u * v)
//   shuffle:   a u sh b v    = a(u sh b v) + b(a u sh v)   on the xy alphabet
//   harmonic_b: like harmonic on the balanced alphabet, but two letters merge
//               only when both are nonzero.
//
// Word-by-word products are computed with a suffix table: the recursion only
// ever visits suffix pairs, so each call fills an (r+1) x (s+1) grid.

#include <stdexcept>
#include <vector>

#include "lincomb.hpp"

namespace mes {

// ---------------------------------------------------------------------------
// harmonic (quasi-shuffle) product

inline ZLin stuffle(const ZWord& u, const ZWord& v) {
    size_t r = u.k.size(), s = v.k.size();
    // grid[i][j] = product of the suffixes u[i..], v[j..]
    std::vector<std::vector<ZLin>> grid(r + 1, std::vector<ZLin>(s + 1));
    grid[r][s] = ZLin(ZWord());
    auto prepend = [](int letter, const ZLin& x) {
        ZLin out;
        for (auto& [w, c] : x.terms()) out.add_term(w.prepend(letter), c);
        return out;
    };
    for (size_t i = r + 1; i-- > 0;) {
        for (size_t j = s + 1; j-- > 0;) {
            if (i == r && j == s) continue;
            ZLin acc;
            if (i < r) acc += prepend(u.k[i], grid[i + 1][j]);
            if (j < s) acc += prepend(v.k[j], grid[i][j + 1]);
            if (i < r && j < s) acc += prepend(u.k[i] + v.k[j], grid[i + 1][j + 1]);
            grid[i][j] = std::move(acc);
        }
    }
    return grid[0][0];
}

inline ZLin harmonic(const ZLin& a, const ZLin& b) {
    ZLin acc;
    for (auto& [u, cu] : a.terms())
        for (auto& [v, cv] : b.terms()) {
            ZLin part = stuffle(u, v);
            part *= cu * cv;
            acc += part;
        }
    return acc;
}

// ---------------------------------------------------------------------------
// shuffle product

inline XYLin shuffle_xy(const XYWord& u, const XYWord& v) {
    size_t r = u.s.size(), s = v.s.size();
    std::vector<std::vector<XYLin>> grid(r + 1, std::vector<XYLin>(s + 1));
    grid[r][s] = XYLin(XYWord());
    auto prepend = [](char letter, const XYLin& x) {
        XYLin out;
        for (auto& [w, c] : x.terms()) {
            XYWord pw;
            pw.s.reserve(w.s.size() + 1);
            pw.s.push_back(letter);
            pw.s.append(w.s);
            out.add_term(pw, c);
        }
        return out;
    };
    for (size_t i = r + 1; i-- > 0;) {
        for (size_t j = s + 1; j-- > 0;) {
            if (i == r && j == s) continue;
            XYLin acc;
            if (i < r) acc += prepend(u.s[i], grid[i + 1][j]);
            if (j < s) acc += prepend(v.s[j], grid[i][j + 1]);
            grid[i][j] = std::move(acc);
        }
    }
    return grid[0][0];
}

// Index-word shuffle via the xy encoding. Both inputs and every term of the
// result end in y (or are empty), so the decoding is total here.
inline ZLin shuffle_words(const ZWord& u, const ZWord& v) {
    return decode_xy(shuffle_xy(encode_xy(u), encode_xy(v)));
}

inline ZLin shuffle(const ZLin& a, const ZLin& b) {
    ZLin acc;
    for (auto& [u, cu] : a.terms())
        for (auto& [v, cv] : b.terms()) {
            ZLin part = shuffle_words(u, v);
            part *= cu * cv;
            acc += part;
        }
    return acc;
}

// ---------------------------------------------------------------------------
// harmonic product on the balanced alphabet (flat letters, b0 merges with
// nothing). Public entry points reject words that start with b0; the
// recursion itself is total on suffixes.

namespace detail {
inline BLin stuffle_b_flat(const std::vector<int>& u, const std::vector<int>& v) {
    size_t r = u.size(), s = v.size();
    using Flat = std::vector<int>;
    // Work on flat letter lists; convert once at the end.
    std::vector<std::vector<std::vector<std::pair<Flat, Rat>>>> grid(
        r + 1, std::vector<std::vector<std::pair<Flat, Rat>>>(s + 1));
    grid[r][s] = {{Flat{}, Rat(1)}};
    auto combine = [](int letter, const std::vector<std::pair<Flat, Rat>>& xs,
                      std::vector<std::pair<Flat, Rat>>& out) {
        for (auto& [f, c] : xs) {
            Flat nf;
            nf.reserve(f.size() + 1);
            nf.push_back(letter);
            nf.insert(nf.end(), f.begin(), f.end());
            out.emplace_back(std::move(nf), c);
        }
    };
    for (size_t i = r + 1; i-- > 0;) {
        for (size_t j = s + 1; j-- > 0;) {
            if (i == r && j == s) continue;
            std::vector<std::pair<Flat, Rat>> acc;
            if (i < r) combine(u[i], grid[i + 1][j], acc);
            if (j < s) combine(v[j], grid[i][j + 1], acc);
            if (i < r && j < s && u[i] > 0 && v[j] > 0)
                combine(u[i] + v[j], grid[i + 1][j + 1], acc);
            grid[i][j] = std::move(acc);
        }
    }
    BLin out;
    for (auto& [f, c] : grid[0][0]) out.add_term(BWord::from_flat(f), c);
    return out;
}
}  // namespace detail

inline BLin stuffle_b(const BWord& u, const BWord& v) {
    return detail::stuffle_b_flat(u.flat(), v.flat());
}

inline BLin harmonic_b(const BLin& a, const BLin& b) {
    BLin acc;
    for (auto& [u, cu] : a.terms())
        for (auto& [v, cv] : b.terms()) {
            BLin part = stuffle_b(u, v);
            part *= cu * cv;
            acc += part;
        }
    return acc;
}

// ---------------------------------------------------------------------------
// product defect

inline ZLin ds(const ZLin& a, const ZLin& b) { return harmonic(a, b) - shuffle(a, b); }
inline ZLin ds(const ZWord& u, const ZWord& v) { return stuffle(u, v) - shuffle_words(u, v); }

// ---------------------------------------------------------------------------
// reg0: the algebra homomorphism onto words with leading letter >= 2 that
// kills z_1, for either product. A word z_1^n u (u not starting in z_1)
// appears with coefficient n in z_1 * (z_1^{n-1} u), and every other term of
// that product has strictly fewer leading z_1 letters; solving for the word
// and recursing terminates. reg0 is the identity on its image.

enum class ProductKind { Harmonic, Shuffle };

namespace detail {
inline ZLin reg0_word(const ZWord& w, ProductKind kind, int fuel);

inline ZLin reg0_lin(const ZLin& x, ProductKind kind, int fuel) {
    ZLin acc;
    for (auto& [w, c] : x.terms()) {
        ZLin part = reg0_word(w, kind, fuel);
        part *= c;
        acc += part;
    }
    return acc;
}

inline ZLin reg0_word(const ZWord& w, ProductKind kind, int fuel) {
    int lead = 0;
    while (lead < w.depth() && w.k[lead] == 1) ++lead;
    if (lead == 0) return ZLin(w);
    if (fuel <= 0)
        throw std::logic_error("reg0 rewrite failed to strip leading letters on " +
                               format_zword(w));
    ZWord rest = w.subword(1, w.k.size() - 1);  // z_1^{lead-1} u
    ZLin prod = kind == ProductKind::Harmonic ? stuffle(ZWord::single(1), rest)
                                              : shuffle_words(ZWord::single(1), rest);
    // prod = lead * w + R where every word of R has fewer leading ones.
    prod.add_term(w, Rat(-lead));
    for (auto& [t, c] : prod.terms()) {
        int l = 0;
        while (l < t.depth() && t.k[l] == 1) ++l;
        if (l >= lead)
            throw std::logic_error("reg0 rewrite did not reduce leading-letter count");
    }
    ZLin out = reg0_lin(prod, kind, fuel - 1);
    out *= Rat(-1, lead);
    return out;
}
}  // namespace detail

inline ZLin reg0(const ZLin& x, ProductKind kind) {
    ZLin acc;
    for (auto& [w, c] : x.terms()) {
        if (w.in_h0()) {  // fast path: already in the image
            acc.add_term(w, c);
            continue;
        }
        ZLin part = detail::reg0_word(w, kind, w.weight() + 1);
        part *= c;
        acc += part;
    }
    return acc;
}

inline ZLin reg0(const ZWord& w, ProductKind kind) { return reg0(ZLin(w), kind); }

}  // namespace mes
