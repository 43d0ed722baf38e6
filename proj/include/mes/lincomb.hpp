#pragma once

// Finite formal sums of words with exact rational coefficients, kept in
// canonical order with zero coefficients pruned eagerly, so equality and
// serialization are structural.

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "rational.hpp"
#include "words.hpp"

namespace mes {

template <class W>
class LinComb {
  public:
    using Terms = std::map<W, Rat, CanonicalLess<W>>;

    LinComb() = default;
    explicit LinComb(const W& w, const Rat& c = 1) { add_term(w, c); }

    static LinComb zero() { return LinComb(); }

    void add_term(const W& w, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    // Ref-qualified so `f(x).terms()` in a range-for hands out an owned map
    // instead of a reference into a destroyed temporary.
    const Terms& terms() const& { return t_; }
    Terms terms() && { return std::move(t_); }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    Rat coeff(const W& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Rat(0) : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (auto& [w, c] : o.t_) add_term(w, -c);
        return *this;
    }
    LinComb& operator*=(const Rat& c) {
        if (c == 0) {
            t_.clear();
        } else {
            for (auto& [w, v] : t_) v *= c;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rat& c) { return a *= c; }
    friend LinComb operator*(const Rat& c, LinComb a) { return a *= c; }
    LinComb operator-() const {
        LinComb r = *this;
        for (auto& [w, v] : r.t_) v = -v;
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.t_ == b.t_; }

    // Linear extension of a word-level map f : W -> LinComb<W2>.
    template <class F>
    auto map_words(F&& f) const {
        using Out = decltype(f(std::declval<const W&>()));
        Out acc;
        for (auto& [w, c] : t_) {
            Out part = f(w);
            part *= c;
            acc += part;
        }
        return acc;
    }

    // True when every word satisfies the predicate.
    template <class P>
    bool all_words(P&& p) const {
        for (auto& [w, c] : t_)
            if (!p(w)) return false;
        return true;
    }

  private:
    Terms t_;
};

using ZLin = LinComb<ZWord>;
using XYLin = LinComb<XYWord>;
using BLin = LinComb<BWord>;
using Tensor = LinComb<ZPair>;

// ---------------------------------------------------------------------------
// Plain-text rendering: "-(6) + 6*(3,3) - 3*(4,2)"; the empty word prints as 1.

namespace detail {
template <class W, class Fmt>
std::string render(const LinComb<W>& x, Fmt&& fmt) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, c] : x.terms()) {
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::string wtxt = fmt(w);
        if (wtxt.empty()) {
            s += rat_str(a);
        } else {
            if (a != 1) s += rat_str(a) + "*";
            s += wtxt;
        }
    }
    return s;
}
}  // namespace detail

inline std::string to_string(const ZLin& x) {
    return detail::render(x, [](const ZWord& w) {
        return w.empty() ? std::string() : format_zword(w);
    });
}
inline std::string to_string(const XYLin& x) {
    return detail::render(x, [](const XYWord& w) { return w.s; });
}
inline std::string to_string(const BLin& x) {
    return detail::render(x, [](const BWord& w) {
        return w.empty() ? std::string() : format_bword(w);
    });
}
inline std::string to_string(const Tensor& x) {
    return detail::render(x, [](const ZPair& p) {
        return format_zword(p.first) + " (x) " + format_zword(p.second);
    });
}

// xy-level <-> index-level transport of whole sums.
inline XYLin encode_xy(const ZLin& x) {
    XYLin r;
    for (auto& [w, c] : x.terms()) r.add_term(encode_xy(w), c);
    return r;
}
inline ZLin decode_xy(const XYLin& x) {
    ZLin r;
    for (auto& [w, c] : x.terms()) r.add_term(decode_xy(w), c);
    return r;
}
inline BLin to_bword(const ZLin& x) {
    BLin r;
    for (auto& [w, c] : x.terms()) r.add_term(to_bword(w), c);
    return r;
}
inline BLin tau(const BLin& x) {
    BLin r;
    for (auto& [w, c] : x.terms()) r.add_term(tau(w), c);
    return r;
}

}  // namespace mes
