#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rings.hpp"
#include "words.hpp"

namespace mes {

// A mould component key at depth r: per position i an exponent pair
// (u_i exponent, v_i exponent). Pure v-moulds keep every u exponent 0; the
// key for an index word (k_1..k_r) is v-exponents (k_1 - 1 .. k_r - 1).
struct MKey {
    std::vector<std::pair<int, int>> ef;

    int depth() const { return static_cast<int>(ef.size()); }
    int weight() const {
        int w = depth();
        for (auto& [e, f] : ef) w += e + f;
        return w;
    }
    bool pure_v() const {
        for (auto& [e, f] : ef)
            if (e != 0) return false;
        return true;
    }
    friend bool operator==(const MKey& a, const MKey& b) { return a.ef == b.ef; }
    friend bool operator<(const MKey& a, const MKey& b) { return a.ef < b.ef; }
};

inline MKey vkey(const ZWord& k) {
    MKey key;
    key.ef.reserve(k.depth());
    for (int x : k.k) key.ef.emplace_back(0, x - 1);
    return key;
}

// Truncated mould with coefficients in a commutative ring R. Components are
// stored per depth 0..depth_max; keys of weight > weight_max are discarded
// on insertion. Because key weights are nonnegative and add up under every
// operation defined here, the coefficients that are kept are exactly those
// of the untruncated object: truncation only limits how far the expansion
// is carried, never its correctness.
template <class R>
struct Mould {
    int depth_max = 0;
    int weight_max = 0;
    std::vector<std::map<MKey, R>> comp;

    Mould() : comp(1) {}
    Mould(int d, int w) : depth_max(d), weight_max(w), comp(static_cast<size_t>(d) + 1) {
        if (d < 0 || w < 0) throw std::invalid_argument("mould bounds must be nonnegative");
    }

    void add_term(const MKey& key, const R& val) {
        if (RingOps<R>::is_zero(val)) return;
        if (key.depth() > depth_max || key.weight() > weight_max) return;  // truncated away
        auto& m = comp[static_cast<size_t>(key.depth())];
        auto it = m.find(key);
        if (it == m.end()) {
            m.emplace(key, val);
            return;
        }
        it->second = it->second + val;
        if (RingOps<R>::is_zero(it->second)) m.erase(it);
    }

    // add a pure-v term given its per-position v exponents
    void add_vterm(const std::vector<int>& vexps, const R& val) {
        MKey key;
        key.ef.reserve(vexps.size());
        for (int f : vexps) key.ef.emplace_back(0, f);
        add_term(key, val);
    }

    bool pure_v() const {
        for (auto& m : comp)
            for (auto& [key, val] : m)
                if (!key.pure_v()) return false;
        return true;
    }

    friend bool operator==(const Mould& a, const Mould& b) {
        return a.depth_max == b.depth_max && a.weight_max == b.weight_max && a.comp == b.comp;
    }
    friend bool operator!=(const Mould& a, const Mould& b) { return !(a == b); }
};

namespace detail {

inline void check_same_bounds(int da, int wa, int db, int wb) {
    if (da != db || wa != wb)
        throw std::invalid_argument("mould operands have different truncation bounds: (" + std::to_string(da) + "," +
                                    std::to_string(wa) + ") vs (" + std::to_string(db) + "," + std::to_string(wb) +
                                    ")");
}

}  // namespace detail

// Unit for the mould product: 1 at the empty index, 0 elsewhere.
template <class R>
Mould<R> mould_unit(int depth_max, int weight_max) {
    Mould<R> m(depth_max, weight_max);
    m.add_term(MKey{}, RingOps<R>::one());
    return m;
}

// Build a pure v-mould from a function on index words (all letters >= 1).
template <class R, class F>
Mould<R> make_vmould(int depth_max, int weight_max, F&& fn) {
    Mould<R> m(depth_max, weight_max);
    m.add_term(MKey{}, fn(ZWord()));
    for (int r = 1; r <= depth_max; ++r)
        for (int wt = r; wt <= weight_max; ++wt)
            for (auto& parts : detail::compositions(wt, r, 1)) {
                ZWord k{parts};
                m.add_term(vkey(k), fn(k));
            }
    return m;
}

// Coefficient of a pure v-mould at an index word. Out-of-bounds lookups are
// an error: a truncated mould has no information there.
template <class R>
R vcoeff(const Mould<R>& m, const ZWord& k) {
    if (k.depth() > m.depth_max || k.weight() > m.weight_max)
        throw std::out_of_range("index " + format_zword(k) + " outside mould truncation bounds (depth<=" +
                                std::to_string(m.depth_max) + ", weight<=" + std::to_string(m.weight_max) + ")");
    auto& c = m.comp[static_cast<size_t>(k.depth())];
    auto it = c.find(vkey(k));
    return it == c.end() ? RingOps<R>::zero() : it->second;
}

// Mould product: (M x N)(w) = sum over w = u v of M(u) N(v), keys
// concatenated. Associative, unit mould_unit.
template <class R>
Mould<R> mould_mul(const Mould<R>& a, const Mould<R>& b) {
    detail::check_same_bounds(a.depth_max, a.weight_max, b.depth_max, b.weight_max);
    Mould<R> out(a.depth_max, a.weight_max);
    for (int i = 0; i <= a.depth_max; ++i)
        for (auto& [ka, va] : a.comp[static_cast<size_t>(i)]) {
            for (int j = 0; i + j <= a.depth_max; ++j)
                for (auto& [kb, vb] : b.comp[static_cast<size_t>(j)]) {
                    MKey k;
                    k.ef.reserve(ka.ef.size() + kb.ef.size());
                    k.ef.insert(k.ef.end(), ka.ef.begin(), ka.ef.end());
                    k.ef.insert(k.ef.end(), kb.ef.begin(), kb.ef.end());
                    out.add_term(k, va * vb);
                }
        }
    return out;
}

template <class R>
Mould<R> mould_add(const Mould<R>& a, const Mould<R>& b) {
    detail::check_same_bounds(a.depth_max, a.weight_max, b.depth_max, b.weight_max);
    Mould<R> out = a;
    for (auto& m : b.comp)
        for (auto& [k, v] : m) out.add_term(k, v);
    return out;
}

// Value sign flip by total exponent degree: neg(M)(w) = M(-w).
template <class R>
Mould<R> mould_neg_arg(const Mould<R>& a) {
    Mould<R> out(a.depth_max, a.weight_max);
    for (auto& m : a.comp)
        for (auto& [k, v] : m) {
            int deg = 0;
            for (auto& [e, f] : k.ef) deg += e + f;
            R val = v;
            if (deg % 2) val = -val;
            out.add_term(k, val);
        }
    return out;
}

// Reverse the index: anti(M)(w_1..w_r) = M(w_r..w_1).
template <class R>
Mould<R> mould_anti(const Mould<R>& a) {
    Mould<R> out(a.depth_max, a.weight_max);
    for (auto& m : a.comp)
        for (auto& [k, v] : m) {
            MKey rk;
            rk.ef.assign(k.ef.rbegin(), k.ef.rend());
            out.add_term(rk, v);
        }
    return out;
}

// Depth-parity sign: pari(M)(w) = (-1)^r M(w) at depth r.
template <class R>
Mould<R> mould_pari(const Mould<R>& a) {
    Mould<R> out(a.depth_max, a.weight_max);
    for (auto& m : a.comp)
        for (auto& [k, v] : m) {
            R val = v;
            if (k.depth() % 2) val = -val;
            out.add_term(k, val);
        }
    return out;
}

namespace detail {

// One linear form sum c_j * X_{s_j} over variable slots.
using LinForm = std::vector<std::pair<int, int>>;  // (slot, integer coeff)

// Expand prod_t L_t^{e_t} into monomials: cb(exponent-per-slot, integer coeff).
// Many small multinomials; exact integer arithmetic throughout.
template <class CB>
void expand_form_powers(const std::vector<std::pair<LinForm, int>>& powers, size_t nslots, CB&& cb) {
    std::vector<int> exps(nslots, 0);
    Int coeff(1);
    auto rec_form = [&](auto&& self_form, size_t fi) -> void {
        if (fi == powers.size()) {
            cb(exps, coeff);
            return;
        }
        const LinForm& form = powers[fi].first;
        int e = powers[fi].second;
        if (e == 0) {
            self_form(self_form, fi + 1);
            return;
        }
        if (form.empty()) return;  // 0^e = 0 for e > 0
        // distribute e among the terms of the form
        auto rec_term = [&](auto&& self_term, size_t ti, int left) -> void {
            if (ti + 1 == form.size()) {
                auto [slot, c] = form[ti];
                Int save = coeff;
                Int cp(c);
                mpz_pow_ui(cp.get_mpz_t(), cp.get_mpz_t(), static_cast<unsigned long>(left));
                coeff *= cp;
                exps[static_cast<size_t>(slot)] += left;
                self_form(self_form, fi + 1);
                exps[static_cast<size_t>(slot)] -= left;
                coeff = save;
                return;
            }
            auto [slot, c] = form[ti];
            for (int take = 0; take <= left; ++take) {
                Int save = coeff;
                Int cp(c);
                mpz_pow_ui(cp.get_mpz_t(), cp.get_mpz_t(), static_cast<unsigned long>(take));
                coeff *= binomial(left, take) * cp;
                exps[static_cast<size_t>(slot)] += take;
                self_term(self_term, ti + 1, left - take);
                exps[static_cast<size_t>(slot)] -= take;
                coeff = save;
            }
        };
        rec_term(rec_term, 0, e);
    };
    rec_form(rec_form, 0);
}

}  // namespace detail

// swap: substitute, inside each depth-r component,
//   u_i -> v_{r+1-i} - v_{r+2-i}   (the out-of-range v_{r+1} term is absent)
//   v_i -> u_1 + ... + u_{r+1-i}
// This substitution is a degree-preserving involution, so truncation bounds
// carry over unchanged.
template <class R>
Mould<R> mould_swap(const Mould<R>& a) {
    Mould<R> out(a.depth_max, a.weight_max);
    for (int r = 0; r <= a.depth_max; ++r) {
        // slots: 0..r-1 = u_1..u_r, r..2r-1 = v_1..v_r
        std::vector<detail::LinForm> usub(static_cast<size_t>(r)), vsub(static_cast<size_t>(r));
        for (int i = 1; i <= r; ++i) {
            detail::LinForm fu;
            fu.emplace_back(r + (r + 1 - i) - 1, 1);  // +v_{r+1-i}
            if (r + 2 - i <= r) fu.emplace_back(r + (r + 2 - i) - 1, -1);
            usub[static_cast<size_t>(i - 1)] = std::move(fu);
            detail::LinForm fv;
            for (int j = 1; j <= r + 1 - i; ++j) fv.emplace_back(j - 1, 1);
            vsub[static_cast<size_t>(i - 1)] = std::move(fv);
        }
        for (auto& [key, val] : a.comp[static_cast<size_t>(r)]) {
            std::vector<std::pair<detail::LinForm, int>> powers;
            for (int i = 0; i < r; ++i) {
                if (key.ef[static_cast<size_t>(i)].first > 0)
                    powers.emplace_back(usub[static_cast<size_t>(i)], key.ef[static_cast<size_t>(i)].first);
                if (key.ef[static_cast<size_t>(i)].second > 0)
                    powers.emplace_back(vsub[static_cast<size_t>(i)], key.ef[static_cast<size_t>(i)].second);
            }
            detail::expand_form_powers(powers, static_cast<size_t>(2 * r), [&](const std::vector<int>& exps, const Int& c) {
                MKey k;
                k.ef.reserve(static_cast<size_t>(r));
                for (int i = 0; i < r; ++i) k.ef.emplace_back(exps[static_cast<size_t>(i)], exps[static_cast<size_t>(r + i)]);
                R v = val;
                RingOps<R>::scale(v, Rat(c));
                out.add_term(k, v);
            });
        }
    }
    return out;
}

namespace detail {

// One segment of a gaxit decomposition: positions [as,bs) form the a-block,
// [bs,cs) the (nonempty) b-block, [cs,ce) the c-block.
struct GaxitSeg {
    int as, bs, cs, ce;
};

// Enumerate decompositions of positions 0..r-1 into a_1 b_1 c_1 ... a_s b_s c_s
// with every b-block nonempty and c_i a_{i+1} nonempty between consecutive
// b-blocks. r = 0 has exactly the empty decomposition.
template <class CB>
void enum_gaxit_decomps(int r, CB&& cb) {
    std::vector<GaxitSeg> segs;
    if (r == 0) {
        cb(segs);
        return;
    }
    auto rec = [&](auto&& self, int pos, int min_a) -> void {
        for (int a = min_a; pos + a + 1 <= r; ++a)
            for (int b = 1; pos + a + b <= r; ++b) {
                int after = pos + a + b;
                segs.push_back({pos, pos + a, after, r});  // final segment: c-block = rest
                cb(segs);
                segs.pop_back();
                for (int c = 0; after + c < r; ++c) {
                    segs.push_back({pos, pos + a, after, after + c});
                    self(self, after + c, c == 0 ? 1 : 0);
                    segs.pop_back();
                }
            }
    };
    rec(rec, 0, 0);
}

// Multiply acc (map from per-position v-exponent vectors to values) by the
// factor sum over F-components at depth hi-lo evaluated at the shifted
// arguments (v_p - v_anchor) for p in [lo,hi).
template <class R>
void gaxit_fold_factor(std::map<std::vector<int>, R>& acc, const Mould<R>& F, int lo, int hi, int anchor) {
    int d = hi - lo;
    std::map<std::vector<int>, R> out;
    for (auto& [key, val] : F.comp[static_cast<size_t>(d)]) {
        // expand prod_i (v_{lo+i} - v_anchor)^{f_i}
        auto rec = [&](auto&& self, int i, std::vector<int>& inc, Int c) -> void {
            if (i == d) {
                for (auto& [exps, v0] : acc) {
                    std::vector<int> e = exps;
                    for (size_t p = 0; p < e.size(); ++p) e[p] += inc[p];
                    R v = v0 * val;
                    RingOps<R>::scale(v, Rat(c));
                    if (RingOps<R>::is_zero(v)) continue;
                    auto it = out.find(e);
                    if (it == out.end())
                        out.emplace(std::move(e), std::move(v));
                    else {
                        it->second = it->second + v;
                        if (RingOps<R>::is_zero(it->second)) out.erase(it);
                    }
                }
                return;
            }
            int f = key.ef[static_cast<size_t>(i)].second;
            for (int t = 0; t <= f; ++t) {
                Int c2 = c * binomial(f, t);
                if ((f - t) % 2) c2 = -c2;
                inc[static_cast<size_t>(lo + i)] += t;
                inc[static_cast<size_t>(anchor)] += f - t;
                self(self, i + 1, inc, c2);
                inc[static_cast<size_t>(lo + i)] -= t;
                inc[static_cast<size_t>(anchor)] -= f - t;
            }
        };
        std::vector<int> inc(acc.empty() ? 0 : acc.begin()->first.size(), 0);
        if (!acc.empty()) rec(rec, 0, inc, Int(1));
    }
    acc.swap(out);
}

}  // namespace detail

// gaxit(A, B, C): sum over decompositions w = a_1 b_1 c_1 ... a_s b_s c_s of
//   A(b_1 ... b_s) * prod_j B(a_j at v - v_{first of b_j}) * prod_j C(c_j at v - v_{last of b_j}).
// Defined here for pure v-moulds only; u-components never enter any
// computation in this library, so mixed inputs are rejected rather than
// given a silent partial meaning.
template <class R>
Mould<R> gaxit(const Mould<R>& A, const Mould<R>& B, const Mould<R>& C) {
    detail::check_same_bounds(A.depth_max, A.weight_max, B.depth_max, B.weight_max);
    detail::check_same_bounds(A.depth_max, A.weight_max, C.depth_max, C.weight_max);
    if (!A.pure_v() || !B.pure_v() || !C.pure_v()) throw std::domain_error("gaxit requires pure v-moulds");
    Mould<R> out(A.depth_max, A.weight_max);
    for (int r = 0; r <= out.depth_max; ++r) {
        detail::enum_gaxit_decomps(r, [&](const std::vector<detail::GaxitSeg>& segs) {
            std::vector<int> bpos;
            for (auto& s : segs)
                for (int p = s.bs; p < s.cs; ++p) bpos.push_back(p);
            auto& acomp = A.comp[bpos.size()];
            for (auto& [keyA, valA] : acomp) {
                std::map<std::vector<int>, R> acc;
                std::vector<int> base(static_cast<size_t>(r), 0);
                for (size_t i = 0; i < bpos.size(); ++i) base[static_cast<size_t>(bpos[i])] = keyA.ef[i].second;
                acc.emplace(std::move(base), valA);
                for (auto& s : segs) {
                    detail::gaxit_fold_factor(acc, B, s.as, s.bs, s.bs);
                    if (acc.empty()) break;
                    detail::gaxit_fold_factor(acc, C, s.cs, s.ce, s.cs - 1);
                    if (acc.empty()) break;
                }
                for (auto& [exps, val] : acc) out.add_vterm(exps, val);
            }
        });
    }
    return out;
}

// The companion mould used on the c-blocks: B-minus = neg(anti(pari(B))).
template <class R>
Mould<R> mould_minus(const Mould<R>& b) {
    return mould_neg_arg(mould_anti(mould_pari(b)));
}

// gilat(A, B) = gaxit(A, B, B-minus).
template <class R>
Mould<R> gilat(const Mould<R>& a, const Mould<R>& b) {
    return gaxit(a, b, mould_minus(b));
}

// gila(A, B) = gilat(A, B) x B.
template <class R>
Mould<R> gila(const Mould<R>& a, const Mould<R>& b) {
    return mould_mul(gilat(a, b), b);
}

}  // namespace mes
