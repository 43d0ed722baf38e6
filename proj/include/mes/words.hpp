#pragma once

// Word types of the three alphabets used throughout:
//   ZWord  -- index words z_{k1}...z_{kr}, letters k_i >= 1
//   XYWord -- words in the two-letter alphabet {x, y}
//   BWord  -- words b_{k1} b0^{m1} ... b_{kr} b0^{mr} in run-length form
// plus the subspace predicates, basis enumeration, and the canonical order
// (weight, then depth, then lexicographic) that every formal sum uses.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mes {

enum class Space { H1, H0, GE2, GE2ALM };

inline const char* space_name(Space s) {
    switch (s) {
        case Space::H1: return "H1";
        case Space::H0: return "H0";
        case Space::GE2: return "GE2";
        case Space::GE2ALM: return "GE2ALM";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ZWord

struct ZWord {
    std::vector<int> k;

    ZWord() = default;
    explicit ZWord(std::vector<int> letters) : k(std::move(letters)) {
        for (int v : k)
            if (v < 1) throw std::invalid_argument("index word letters must be >= 1");
    }
    static ZWord single(int kk) { return ZWord(std::vector<int>{kk}); }

    int weight() const {
        int w = 0;
        for (int v : k) w += v;
        return w;
    }
    int depth() const { return static_cast<int>(k.size()); }
    bool empty() const { return k.empty(); }

    bool in_h0() const { return k.empty() || k.front() >= 2; }
    bool in_ge2() const {
        return std::all_of(k.begin(), k.end(), [](int v) { return v >= 2; });
    }
    // At most one letter equal to 1 and not in the leading position.
    bool in_ge2alm() const {
        int ones = 0;
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 1) {
                if (i == 0) return false;
                if (++ones > 1) return false;
            }
        }
        return true;
    }
    bool in(Space s) const {
        switch (s) {
            case Space::H1: return true;
            case Space::H0: return in_h0();
            case Space::GE2: return in_ge2();
            case Space::GE2ALM: return in_ge2alm();
        }
        return false;
    }

    ZWord prepend(int letter) const {
        ZWord r;
        r.k.reserve(k.size() + 1);
        r.k.push_back(letter);
        r.k.insert(r.k.end(), k.begin(), k.end());
        return r;
    }
    ZWord append(const ZWord& w) const {
        ZWord r = *this;
        r.k.insert(r.k.end(), w.k.begin(), w.k.end());
        return r;
    }
    ZWord subword(size_t from, size_t len) const {
        ZWord r;
        r.k.assign(k.begin() + from, k.begin() + from + len);
        return r;
    }

    friend bool operator==(const ZWord& a, const ZWord& b) { return a.k == b.k; }
};

// Canonical order: weight, then depth, then lexicographic on letters.
inline bool canonical_less(const ZWord& a, const ZWord& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    if (a.k.size() != b.k.size()) return a.k.size() < b.k.size();
    return a.k < b.k;
}

// ---------------------------------------------------------------------------
// XYWord

struct XYWord {
    std::string s;  // letters 'x' and 'y' only

    XYWord() = default;
    explicit XYWord(std::string letters) : s(std::move(letters)) {
        for (char c : s)
            if (c != 'x' && c != 'y') throw std::invalid_argument("xy word letters must be x or y");
    }
    int weight() const { return static_cast<int>(s.size()); }
    int depth() const { return static_cast<int>(std::count(s.begin(), s.end(), 'y')); }
    bool empty() const { return s.empty(); }
    // Words that are empty or end in y.
    bool in_h1() const { return s.empty() || s.back() == 'y'; }

    friend bool operator==(const XYWord& a, const XYWord& b) { return a.s == b.s; }
};

inline bool canonical_less(const XYWord& a, const XYWord& b) {
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    int da = a.depth(), db = b.depth();
    if (da != db) return da < db;
    return a.s < b.s;
}

// z_{k1}...z_{kr}  ->  x^{k1-1} y ... x^{kr-1} y
inline XYWord encode_xy(const ZWord& w) {
    std::string s;
    s.reserve(static_cast<size_t>(w.weight()));
    for (int kk : w.k) {
        s.append(static_cast<size_t>(kk - 1), 'x');
        s.push_back('y');
    }
    return XYWord(std::move(s));
}

// Inverse of encode_xy; defined exactly on words that are empty or end in y.
inline ZWord decode_xy(const XYWord& w) {
    if (!w.in_h1())
        throw std::domain_error("cannot decode xy word ending in x: '" + w.s + "'");
    ZWord r;
    int run = 0;
    for (char c : w.s) {
        if (c == 'x') {
            ++run;
        } else {
            r.k.push_back(run + 1);
            run = 0;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// BWord

struct BWord {
    // (k_i, m_i) encodes the run b_{k_i} b_0^{m_i}; k_i >= 1, m_i >= 0.
    std::vector<std::pair<int, int>> runs;

    BWord() = default;
    explicit BWord(std::vector<std::pair<int, int>> r) : runs(std::move(r)) {
        for (auto& [kk, mm] : runs)
            if (kk < 1 || mm < 0) throw std::invalid_argument("bad balanced-word run");
    }

    int weight() const {
        int w = 0;
        for (auto& [kk, mm] : runs) w += kk + mm;
        return w;
    }
    int depth() const { return static_cast<int>(runs.size()); }
    bool empty() const { return runs.empty(); }

    // Flat letter sequence: k, then m zeros, per run.
    std::vector<int> flat() const {
        std::vector<int> f;
        for (auto& [kk, mm] : runs) {
            f.push_back(kk);
            f.insert(f.end(), static_cast<size_t>(mm), 0);
        }
        return f;
    }
    // Parses a flat letter sequence; must not start with b_0.
    static BWord from_flat(const std::vector<int>& f) {
        BWord w;
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0) throw std::invalid_argument("negative balanced letter");
            if (f[i] == 0) {
                if (w.runs.empty())
                    throw std::domain_error("balanced word must not start with b0");
                ++w.runs.back().second;
            } else {
                w.runs.emplace_back(f[i], 0);
            }
        }
        return w;
    }

    friend bool operator==(const BWord& a, const BWord& b) { return a.runs == b.runs; }
};

inline bool canonical_less(const BWord& a, const BWord& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    auto fa = a.flat(), fb = b.flat();
    if (fa.size() != fb.size()) return fa.size() < fb.size();
    return fa < fb;
}

// Embedding of index words: z_k -> b_k (all m_i = 0).
inline BWord to_bword(const ZWord& w) {
    BWord b;
    b.runs.reserve(w.k.size());
    for (int kk : w.k) b.runs.emplace_back(kk, 0);
    return b;
}

// The weight-preserving involution
//   b_{k1} b0^{m1} ... b_{kr} b0^{mr}  ->  b_{mr+1} b0^{kr-1} ... b_{m1+1} b0^{k1-1}
inline BWord tau(const BWord& w) {
    BWord r;
    r.runs.reserve(w.runs.size());
    for (auto it = w.runs.rbegin(); it != w.runs.rend(); ++it)
        r.runs.emplace_back(it->second + 1, it->first - 1);
    return r;
}

// ---------------------------------------------------------------------------
// Pair of index words (for tensors)

using ZPair = std::pair<ZWord, ZWord>;

inline bool canonical_less(const ZPair& a, const ZPair& b) {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return canonical_less(a.second, b.second);
}

template <class W>
struct CanonicalLess {
    bool operator()(const W& a, const W& b) const { return canonical_less(a, b); }
};

// ---------------------------------------------------------------------------
// Parsing / formatting (comma notation)

// "3,2" -> (3,2); "" -> empty word. Errors carry the offending position.
inline ZWord parse_zword(const std::string& text) {
    ZWord w;
    if (text.empty()) return w;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index letter '" + tok + "' at position " +
                                        std::to_string(pos) + " in '" + text + "'");
        }
        if (used != tok.size() || v < 1)
            throw std::invalid_argument("bad index letter '" + tok + "' at position " +
                                        std::to_string(pos) + " in '" + text + "'");
        w.k.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("trailing comma at position " + std::to_string(comma) +
                                        " in '" + text + "'");
    }
    return w;
}

// Flat balanced letters: "2,0,3" -> b2 b0 b3 (zeros allowed, not leading).
inline BWord parse_bword(const std::string& text) {
    if (text.empty()) return BWord();
    std::vector<int> f;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad balanced letter '" + tok + "' at position " +
                                        std::to_string(pos) + " in '" + text + "'");
        }
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("bad balanced letter '" + tok + "' at position " +
                                        std::to_string(pos) + " in '" + text + "'");
        f.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("trailing comma at position " + std::to_string(comma) +
                                        " in '" + text + "'");
    }
    return BWord::from_flat(f);
}

inline std::string format_zword(const ZWord& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.k.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.k[i]);
    }
    s += ')';
    return s;
}

inline std::string format_bword(const BWord& w) {
    auto f = w.flat();
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f[i]);
    }
    s += ']';
    return s;
}

// ---------------------------------------------------------------------------
// Basis enumeration

namespace detail {

inline void compositions_rec(int rest, int parts, int minpart, std::vector<int>& acc,
                             std::vector<ZWord>& out) {
    if (parts == 0) {
        if (rest == 0) out.push_back(ZWord(acc));
        return;
    }
    int maxfirst = rest - minpart * (parts - 1);
    for (int first = minpart; first <= maxfirst; ++first) {
        acc.push_back(first);
        compositions_rec(rest - first, parts - 1, minpart, acc, out);
        acc.pop_back();
    }
}

// All compositions of `weight` into `parts` parts, each >= minpart, in
// ascending lexicographic order.
inline std::vector<ZWord> compositions(int weight, int parts, int minpart) {
    std::vector<ZWord> out;
    std::vector<int> acc;
    compositions_rec(weight, parts, minpart, acc, out);
    return out;
}

}  // namespace detail

// Basis words of the given homogeneous weight, listed in canonical order.
inline std::vector<ZWord> enumerate_basis(int weight, Space space) {
    if (weight < 0) throw std::invalid_argument("negative weight");
    thread_local std::map<std::pair<int, int>, std::vector<ZWord>> cache;
    auto key = std::make_pair(weight, static_cast<int>(space));
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::vector<ZWord> out;
    if (weight == 0) {
        out.push_back(ZWord());
    } else {
        for (int d = 1; d <= weight; ++d) {
            std::vector<ZWord> layer;
            switch (space) {
                case Space::H1:
                    layer = detail::compositions(weight, d, 1);
                    break;
                case Space::H0:
                    for (auto& w : detail::compositions(weight, d, 1))
                        if (w.in_h0()) layer.push_back(w);
                    break;
                case Space::GE2:
                    layer = detail::compositions(weight, d, 2);
                    break;
                case Space::GE2ALM:
                    for (auto& w : detail::compositions(weight, d, 1))
                        if (w.in_ge2alm()) layer.push_back(w);
                    break;
            }
            out.insert(out.end(), layer.begin(), layer.end());
        }
    }
    cache.emplace(key, out);
    return out;
}

// Fibonacci numbers with F(1) = F(2) = 1 (F(0) = 0).
inline long fibonacci(int n) {
    long a = 0, b = 1;  // F(0), F(1)
    for (int i = 0; i < n; ++i) {
        long c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// Number of all-letters->=2 basis words at the given weight: F(k-1), with the
// weight-0 basis consisting of the empty word alone.
inline long generator_count(int weight) {
    if (weight == 0) return 1;
    return fibonacci(weight - 1);
}

}  // namespace mes
