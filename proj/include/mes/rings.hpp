#pragma once

#include <algorithm>
#include <compare>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "products.hpp"

namespace mes {

// Coefficient rings usable as mould values. A ring type R must provide
// RingOps<R>: zero(), one(), is_zero(), scale-by-rational, plus the usual
// +, -, *, == on R itself. All rings here are commutative.

template <class R>
struct RingOps;

template <>
struct RingOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& r) { return r == 0; }
    static void scale(Rat& r, const Rat& c) { r *= c; }
};

// The span of words with the shuffle product as multiplication; the empty
// word is the unit. Wrapping LinComb keeps the two products (concatenation
// never appears here, harmonic lives elsewhere) from being mixed up by type.
struct ShuffleRing {
    ZLin v;

    ShuffleRing() = default;
    explicit ShuffleRing(ZLin x) : v(std::move(x)) {}
    explicit ShuffleRing(const ZWord& w) : v(ZLin(w)) {}

    bool is_zero() const { return v.is_zero(); }

    friend ShuffleRing operator+(const ShuffleRing& a, const ShuffleRing& b) { return ShuffleRing(a.v + b.v); }
    friend ShuffleRing operator-(const ShuffleRing& a, const ShuffleRing& b) { return ShuffleRing(a.v - b.v); }
    ShuffleRing operator-() const { return ShuffleRing(-v); }
    friend ShuffleRing operator*(const ShuffleRing& a, const ShuffleRing& b) { return ShuffleRing(shuffle(a.v, b.v)); }
    friend bool operator==(const ShuffleRing& a, const ShuffleRing& b) { return a.v == b.v; }
    friend bool operator!=(const ShuffleRing& a, const ShuffleRing& b) { return !(a.v == b.v); }
};

template <>
struct RingOps<ShuffleRing> {
    static ShuffleRing zero() { return ShuffleRing(); }
    static ShuffleRing one() { return ShuffleRing(ZWord()); }
    static bool is_zero(const ShuffleRing& r) { return r.is_zero(); }
    static void scale(ShuffleRing& r, const Rat& c) { r.v *= c; }
};

// A named commuting generator, e.g. a<2,3> or g<4>. Ordered so monomials
// have a canonical sorted form.
struct Gen {
    char tag = 'a';
    std::vector<int> idx;

    friend bool operator==(const Gen& a, const Gen& b) { return a.tag == b.tag && a.idx == b.idx; }
    friend bool operator<(const Gen& a, const Gen& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        return a.idx < b.idx;
    }
};

// Sorted-with-repetition list of generators.
using Monomial = std::vector<Gen>;

inline std::string to_string(const Gen& g) {
    std::string s(1, g.tag);
    s += '<';
    for (size_t i = 0; i < g.idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.idx[i]);
    }
    s += '>';
    return s;
}

inline std::string to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += '*';
        s += to_string(m[i]);
    }
    return s;
}

// Commutative polynomials in Gen symbols with scalar coefficients S.
template <class S>
class Poly {
  public:
    Poly() = default;
    explicit Poly(S s) {
        if (!RingOps<S>::is_zero(s)) t_.emplace(Monomial{}, std::move(s));
    }

    static Poly one() { return Poly(RingOps<S>::one()); }
    static Poly gen(char tag, std::vector<int> idx, S s = RingOps<S>::one()) {
        Poly p;
        if (!RingOps<S>::is_zero(s)) p.t_.emplace(Monomial{Gen{tag, std::move(idx)}}, std::move(s));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    // Ref-qualified: see LinComb::terms().
    const std::map<Monomial, S>& terms() const& { return t_; }
    std::map<Monomial, S> terms() && { return std::move(t_); }

    void add(Monomial m, const S& s) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!RingOps<S>::is_zero(s)) t_.emplace(std::move(m), s);
            return;
        }
        it->second = it->second + s;
        if (RingOps<S>::is_zero(it->second)) t_.erase(it);
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, s] : o.t_) add(m, s);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, s] : o.t_) add(m, -s);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (auto& [m, s] : t_) r.t_.emplace(m, -s);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, sa] : a.t_)
            for (auto& [mb, sb] : b.t_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                r.add(std::move(m), sa * sb);
            }
        return r;
    }
    void scale(const Rat& c) {
        if (c == 0) {
            t_.clear();
            return;
        }
        for (auto& [m, s] : t_) RingOps<S>::scale(s, c);
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.t_ == b.t_); }

  private:
    std::map<Monomial, S> t_;
};

template <class S>
struct RingOps<Poly<S>> {
    static Poly<S> zero() { return Poly<S>(); }
    static Poly<S> one() { return Poly<S>::one(); }
    static bool is_zero(const Poly<S>& p) { return p.is_zero(); }
    static void scale(Poly<S>& p, const Rat& c) { p.scale(c); }
};

// Formal symbols over the rationals (used for the symbolic mould identities).
using SymPoly = Poly<Rat>;
// Polynomials whose coefficients are shuffle-algebra elements (used for the
// expansion of the generating series into symbol * word pieces).
using WordPoly = Poly<ShuffleRing>;

inline std::string to_string(const SymPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (a != 1 || m.empty()) {
            out += rat_str(a);
            if (!m.empty()) out += '*';
        }
        if (!m.empty()) out += to_string(m);
    }
    return out;
}

}  // namespace mes
