#pragma once

// Weight-graded operators on word sums:
//
//   weight_op  W: multiplies each homogeneous word by its weight.
//   phi        phi(w) = w * z2 - w sh z2 (harmonic minus shuffle), weight +2.
//   r_bracket  R(u,v) = phi(u*v) - phi(u)*v - u*phi(v): the failure of phi to
//              be a harmonic derivation.
//   delta      the weight -2 "lowering" operator on xy words.
//   d_bim      the weight +2 derivation on balanced words.
//   drop1      the letter-dropping projector H0 -> span of all-letters>=2
//              words (identity on them), via the run-tuple recursion.
//   der        der = -(drop1 o phi), a weight +2 operator on H0.

#include <map>
#include <stdexcept>
#include <vector>

#include "products.hpp"

namespace mes {

// ---------------------------------------------------------------------------
// W

template <class W>
LinComb<W> weight_op(const LinComb<W>& x) {
    LinComb<W> r;
    for (auto& [w, c] : x.terms()) r.add_term(w, c * w.weight());
    return r;
}

// ---------------------------------------------------------------------------
// phi and its derivation failure R

inline ZLin phi(const ZLin& x) {
    static const ZLin z2(ZWord::single(2));
    return harmonic(x, z2) - shuffle(x, z2);
}
inline ZLin phi(const ZWord& w) { return phi(ZLin(w)); }

inline ZLin r_bracket(const ZLin& u, const ZLin& v) {
    return phi(harmonic(u, v)) - harmonic(phi(u), v) - harmonic(u, phi(v));
}
inline ZLin r_bracket(const ZWord& u, const ZWord& v) {
    return r_bracket(ZLin(u), ZLin(v));
}

// ---------------------------------------------------------------------------
// delta: on an xy word w,
//   delta(w) = (1/2 [w = yx u] - 1/2 [w = xy u] + 1/4 [w = yy u]) u
//            + 1/2 ( sum_{w = u yyx u'} - sum_{w = u xyy u'} ) u y u'
// where every factorization, including overlapping ones, contributes.

inline XYLin delta(const XYWord& w) {
    XYLin out;
    const std::string& s = w.s;
    size_t n = s.size();
    if (n >= 2) {
        std::string u = s.substr(2);
        if (s[0] == 'y' && s[1] == 'x') out.add_term(XYWord(u), Rat(1, 2));
        if (s[0] == 'x' && s[1] == 'y') out.add_term(XYWord(u), Rat(-1, 2));
        if (s[0] == 'y' && s[1] == 'y') out.add_term(XYWord(u), Rat(1, 4));
    }
    for (size_t i = 0; i + 3 <= n; ++i) {
        bool yyx = s[i] == 'y' && s[i + 1] == 'y' && s[i + 2] == 'x';
        bool xyy = s[i] == 'x' && s[i + 1] == 'y' && s[i + 2] == 'y';
        if (!yyx && !xyy) continue;
        std::string t = s.substr(0, i) + "y" + s.substr(i + 3);
        out.add_term(XYWord(t), yyx ? Rat(1, 2) : Rat(-1, 2));
    }
    return out;
}

inline XYLin delta(const XYLin& x) {
    XYLin acc;
    for (auto& [w, c] : x.terms()) {
        XYLin part = delta(w);
        part *= c;
        acc += part;
    }
    return acc;
}

// Index-level delta. Input and output live among words that are empty or end
// in y, so both transports are total.
inline ZLin delta_z(const ZLin& x) { return decode_xy(delta(encode_xy(x))); }
inline ZLin delta_z(const ZWord& w) { return delta_z(ZLin(w)); }

// ---------------------------------------------------------------------------
// d_bim: on w = b_{k1} b0^{m1} ... b_{kr} b0^{mr},
//   d_bim(w) = sum_{1 <= i <= j <= r} k_i (m_j + 1) * (w with k_i -> k_i + 1,
//                                                        m_j -> m_j + 1)

inline BLin d_bim(const BWord& w) {
    BLin out;
    int r = w.depth();
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            BWord t = w;
            Rat c = Rat(w.runs[i].first) * Rat(w.runs[j].second + 1);
            t.runs[i].first += 1;
            t.runs[j].second += 1;
            out.add_term(t, c);
        }
    return out;
}

inline BLin d_bim(const BLin& x) {
    BLin acc;
    for (auto& [w, c] : x.terms()) {
        BLin part = d_bim(w);
        part *= c;
        acc += part;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// drop1: recursion on the run tuple (c1,...,c_{2s}) of x^{c1} y^{c2} ... .
//
// Let [2s]^1  = positions p with c_p = 1 and [2s]^{>1} those with c_p > 1.
// A ranges over unions of adjacent pairs {2l, 2l+1} (even-odd, 1 <= l <= s-1)
// or {2l-1, 2l} (odd-even, 1 <= l <= s) inside [2s]^1; removing such a pair
// keeps the x/y run alternation intact. B ranges over subsets of [2s]^{>1},
// barred from containing an adjacent pair of the same parity shape as A.
// With e = #A + #B, the three sums contribute
//   (1)  A even-odd, e >= 1:  (-1)^{#B-1} x^e     * F(c - A - B)
//   (2)  A even-odd, e >= 2:  (-1)^{#B-1} x^{e-1}y* F(c - A - B)
//   (3)  A odd-even, e >= 2:  (-1)^{#B}   x^{e-1}y* F(c - A - B)
// where "c - A - B" deletes the A positions and lowers the B positions by 1,
// F is the recursion, F(empty) = empty word, and the prefixes act on the
// z-encoding: x^e raises the first letter by e, x^{e-1}y prepends the letter
// e. Every produced letter is >= 2, which is asserted on each memoized value.

namespace detail {

using RunTuple = std::vector<int>;

// Deletes positions in A (a sorted position list) and subtracts 1 at
// positions in B. A-gaps are unions of adjacent pairs, so consecutive
// survivors always sit an odd distance apart in the original tuple: the
// surviving runs still alternate x,y,x,... and no merging is needed.
inline RunTuple shrink_tuple(const RunTuple& c, const std::vector<int>& apos,
                             const std::vector<int>& bpos) {
    RunTuple out;
    out.reserve(c.size());
    size_t ai = 0, bi = 0;
    for (size_t p = 0; p < c.size(); ++p) {
        if (ai < apos.size() && static_cast<size_t>(apos[ai]) == p) {
            ++ai;
            continue;
        }
        int v = c[p];
        if (bi < bpos.size() && static_cast<size_t>(bpos[bi]) == p) {
            ++bi;
            --v;
        }
        out.push_back(v);
    }
    return out;
}

ZLin drop1_tuple(const RunTuple& c);

inline const ZLin& drop1_tuple_memo(const RunTuple& c) {
    thread_local std::map<RunTuple, ZLin> memo;
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    ZLin v = drop1_tuple(c);
    for (auto& [w, coeff] : v.terms())
        if (!w.in_ge2())
            throw std::logic_error("drop1 recursion produced a letter < 2");
    return memo.emplace(c, std::move(v)).first->second;
}

// Prefix helpers acting on the z-encoding of x^{c1} y^{c2} ... .
inline ZLin raise_first(const ZLin& x, int e) {
    ZLin out;
    for (auto& [w, c] : x.terms()) {
        if (w.empty()) throw std::logic_error("drop1: x-prefix applied to empty word");
        ZWord t = w;
        t.k[0] += e;
        out.add_term(t, c);
    }
    return out;
}
inline ZLin prepend_letter(const ZLin& x, int e) {
    ZLin out;
    for (auto& [w, c] : x.terms()) out.add_term(w.prepend(e), c);
    return out;
}

inline ZLin drop1_tuple(const RunTuple& c) {
    ZLin out;
    if (c.empty()) {
        out.add_term(ZWord(), 1);
        return out;
    }
    size_t n = c.size();  // = 2s
    // Candidate A pairs. Positions are 0-based here; the 1-based pair
    // {2l, 2l+1} starts at even 1-based = odd 0-based index, i.e. 0-based
    // {2l-1, 2l}; the 1-based {2l-1, 2l} is 0-based {2l-2, 2l-1}.
    std::vector<int> eo_starts, oe_starts;  // 0-based start of each pair
    for (size_t p = 1; p + 1 < n; p += 2)   // 1-based even position start
        if (c[p] == 1 && c[p + 1] == 1) eo_starts.push_back(static_cast<int>(p));
    for (size_t p = 0; p + 1 < n; p += 2)  // 1-based odd position start
        if (c[p] == 1 && c[p + 1] == 1) oe_starts.push_back(static_cast<int>(p));

    std::vector<int> big;  // positions with c_p > 1
    for (size_t p = 0; p < n; ++p)
        if (c[p] > 1) big.push_back(static_cast<int>(p));

    // B subsets avoiding one adjacency shape: shape 0 forbids 0-based pairs
    // {odd, odd+1} (1-based {even, even+1}); shape 1 forbids {even, even+1}
    // (1-based {odd, odd+1}).
    auto b_subsets = [&](int shape) {
        std::vector<std::vector<int>> subs;
        size_t m = big.size();
        for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
            std::vector<int> sel;
            bool ok = true;
            for (size_t i = 0; i < m && ok; ++i)
                if (mask >> i & 1) {
                    if (!sel.empty() && sel.back() + 1 == big[i]) {
                        int lo = sel.back();
                        bool forbidden = (shape == 0) ? (lo % 2 == 1) : (lo % 2 == 0);
                        if (forbidden) ok = false;
                    }
                    sel.push_back(big[i]);
                }
            if (ok) subs.push_back(std::move(sel));
        }
        return subs;
    };

    auto a_subsets = [&](const std::vector<int>& starts) {
        std::vector<std::vector<int>> subs;
        size_t m = starts.size();
        for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
            std::vector<int> sel;
            for (size_t i = 0; i < m; ++i)
                if (mask >> i & 1) {
                    sel.push_back(starts[i]);
                    sel.push_back(starts[i] + 1);
                }
            subs.push_back(std::move(sel));
        }
        return subs;
    };

    auto bsub0 = b_subsets(0), bsub1 = b_subsets(1);
    auto asub_eo = a_subsets(eo_starts), asub_oe = a_subsets(oe_starts);

    // Sums (1) and (2): even-odd A with shape-0 B.
    for (auto& A : asub_eo)
        for (auto& B : bsub0) {
            int e = static_cast<int>(A.size() + B.size());
            if (e < 1) continue;
            Rat sign = (B.size() % 2 == 1) ? Rat(1) : Rat(-1);  // (-1)^{#B-1}
            const ZLin& sub = drop1_tuple_memo(shrink_tuple(c, A, B));
            out += sign * raise_first(sub, e);
            if (e >= 2) out += sign * prepend_letter(sub, e);
        }
    // Sum (3): odd-even A with shape-1 B.
    for (auto& A : asub_oe)
        for (auto& B : bsub1) {
            int e = static_cast<int>(A.size() + B.size());
            if (e < 2) continue;
            Rat sign = (B.size() % 2 == 0) ? Rat(1) : Rat(-1);  // (-1)^{#B}
            const ZLin& sub = drop1_tuple_memo(shrink_tuple(c, A, B));
            out += sign * prepend_letter(sub, e);
        }
    return out;
}

inline RunTuple run_tuple(const ZWord& w) {
    XYWord xy = encode_xy(w);
    RunTuple c;
    for (char ch : xy.s) {
        if (c.empty() || (ch == 'x') != (c.size() % 2 == 1)) {
            // runs alternate x,y,x,y,...; position 1 (odd) is an x run
            c.push_back(1);
        } else {
            ++c.back();
        }
    }
    return c;
}

}  // namespace detail

// drop1 on a single word of H0 (empty or leading letter >= 2).
inline ZLin drop1(const ZWord& w) {
    if (!w.in_h0())
        throw std::domain_error("drop1 requires a word with leading letter >= 2, got " +
                                format_zword(w));
    if (w.empty()) return ZLin(ZWord());
    return detail::drop1_tuple_memo(detail::run_tuple(w));
}

inline ZLin drop1(const ZLin& x) {
    ZLin acc;
    for (auto& [w, c] : x.terms()) {
        ZLin part = drop1(w);
        part *= c;
        acc += part;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// der = -(drop1 o phi); phi preserves leading letter >= 2.

inline ZLin der(const ZLin& x) {
    for (auto& [w, c] : x.terms())
        if (!w.in_h0())
            throw std::domain_error("der requires words with leading letter >= 2, got " +
                                    format_zword(w));
    return -drop1(phi(x));
}
inline ZLin der(const ZWord& w) { return der(ZLin(w)); }

inline ZLin der_pow(const ZLin& x, int n) {
    ZLin r = x;
    for (int i = 0; i < n; ++i) r = der(r);
    return r;
}

}  // namespace mes
