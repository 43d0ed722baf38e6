#pragma once

// Exact sparse linear algebra over the rationals for homogeneous relation
// spaces, plus an opt-in multi-modular rank with a cross-prime consistency
// certificate.
//
// Elimination strategy: each incoming row is cleared of denominators and of
// integer content, then reduced against the stored echelon rows with integer
// cross-multiplication (fraction-free), re-reducing content after every
// combination. Pivots are chosen by smallest column, then sparsest row; the
// final reduced form is the canonical rref of the row space, so results do
// not depend on insertion order or thread count.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lincomb.hpp"

namespace mes {

// ---------------------------------------------------------------------------
// column indexing for homogeneous sums

struct ColumnIndex {
    int weight = 0;
    Space space = Space::GE2;
    std::vector<ZWord> words;  // canonical order

    static ColumnIndex make(int weight, Space space) {
        ColumnIndex ci;
        ci.weight = weight;
        ci.space = space;
        ci.words = enumerate_basis(weight, space);
        return ci;
    }
    size_t size() const { return words.size(); }

    // Index of a word; throws naming the offending term when the element is
    // inhomogeneous or outside the configured space.
    int index_of(const ZWord& w) const {
        auto it = std::lower_bound(words.begin(), words.end(), w,
                                   [](const ZWord& a, const ZWord& b) {
                                       return canonical_less(a, b);
                                   });
        if (it == words.end() || !(*it == w))
            throw std::invalid_argument("term " + format_zword(w) +
                                        " is not a weight-" + std::to_string(weight) +
                                        " basis word of " + space_name(space));
        return static_cast<int>(it - words.begin());
    }
};

namespace detail {

struct SparseRowZ {
    std::vector<std::pair<int, Int>> e;  // sorted by column
    bool empty() const { return e.empty(); }
    int lead() const { return e.front().first; }
};

// LinComb -> integer row: clear denominators (lcm), divide out content.
inline SparseRowZ clear_row(const ZLin& x, const ColumnIndex& ci) {
    SparseRowZ r;
    if (x.is_zero()) return r;
    Int den = 1;
    for (auto& [w, c] : x.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Int content = 0;
    for (auto& [w, c] : x.terms()) {
        Int v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        r.e.emplace_back(ci.index_of(w), v);
    }
    for (auto& [col, v] : r.e) v /= content;
    return r;
}

inline void reduce_content(SparseRowZ& r) {
    if (r.e.empty()) return;
    Int g = 0;
    for (auto& [c, v] : r.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : r.e) v /= g;
    if (r.e.front().second < 0)
        for (auto& [c, v] : r.e) v = -v;
}

// row := a*row - b*other, sparse merge.
inline SparseRowZ axpy(const Int& a, const SparseRowZ& row, const Int& b,
                       const SparseRowZ& other) {
    SparseRowZ out;
    out.e.reserve(row.e.size() + other.e.size());
    size_t i = 0, j = 0;
    while (i < row.e.size() || j < other.e.size()) {
        if (j == other.e.size() ||
            (i < row.e.size() && row.e[i].first < other.e[j].first)) {
            out.e.emplace_back(row.e[i].first, a * row.e[i].second);
            ++i;
        } else if (i == row.e.size() || other.e[j].first < row.e[i].first) {
            out.e.emplace_back(other.e[j].first, -b * other.e[j].second);
            ++j;
        } else {
            Int v = a * row.e[i].second - b * other.e[j].second;
            if (v != 0) out.e.emplace_back(row.e[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// incremental exact eliminator

class EchelonBasis {
  public:
    explicit EchelonBasis(ColumnIndex ci) : ci_(std::move(ci)) {}

    const ColumnIndex& columns() const { return ci_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces the row against the current pivots; keeps it when independent.
    // Returns true when the rank grew.
    bool insert(const ZLin& x) { return insert_row(detail::clear_row(x, ci_)); }

    bool insert_row(detail::SparseRowZ r) {
        detail::reduce_content(r);
        while (!r.empty()) {
            auto it = by_lead_.find(r.lead());
            if (it == by_lead_.end()) {
                // New pivot. "Sparsest row" tie-break: if the stored pivot row
                // at this column were denser, we would swap; with incremental
                // insertion each column holds the sparsest row seen so far.
                by_lead_.emplace(r.lead(), rows_.size());
                rows_.push_back(std::move(r));
                return true;
            }
            detail::SparseRowZ& p = rows_[it->second];
            if (p.e.size() > r.e.size()) std::swap(p, r);  // keep sparsest as pivot
            r = detail::axpy(p.e.front().second, r, r.e.front().second, p);
            detail::reduce_content(r);
        }
        return false;
    }

    // Canonical reduced basis: pivot coefficient 1, pivot columns eliminated
    // from all other rows, rows ordered by pivot column.
    std::vector<std::vector<std::pair<int, Rat>>> reduced_rows() const {
        // copy rows ordered by lead column
        std::vector<std::vector<std::pair<int, Rat>>> rr;
        rr.reserve(rows_.size());
        for (auto& [lead, idx] : by_lead_) {
            std::vector<std::pair<int, Rat>> row;
            const Int& l = rows_[idx].e.front().second;
            for (auto& [c, v] : rows_[idx].e) row.emplace_back(c, Rat(v) / Rat(l));
            rr.push_back(std::move(row));
        }
        // back-substitute from the last pivot upwards
        for (size_t i = rr.size(); i-- > 0;) {
            for (size_t j = 0; j < i; ++j) {
                // eliminate rr[i]'s pivot column from rr[j]
                int pc = rr[i].front().first;
                auto it = std::lower_bound(rr[j].begin(), rr[j].end(), pc,
                                           [](const std::pair<int, Rat>& a, int c) {
                                               return a.first < c;
                                           });
                if (it == rr[j].end() || it->first != pc) continue;
                Rat f = it->second;
                std::vector<std::pair<int, Rat>> merged;
                merged.reserve(rr[j].size() + rr[i].size());
                size_t a = 0, b = 0;
                while (a < rr[j].size() || b < rr[i].size()) {
                    if (b == rr[i].size() ||
                        (a < rr[j].size() && rr[j][a].first < rr[i][b].first)) {
                        merged.push_back(rr[j][a++]);
                    } else if (a == rr[j].size() || rr[i][b].first < rr[j][a].first) {
                        merged.emplace_back(rr[i][b].first, -f * rr[i][b].second);
                        ++b;
                    } else {
                        Rat v = rr[j][a].second - f * rr[i][b].second;
                        if (v != 0) merged.emplace_back(rr[j][a].first, std::move(v));
                        ++a;
                        ++b;
                    }
                }
                rr[j] = std::move(merged);
            }
        }
        return rr;
    }

  private:
    ColumnIndex ci_;
    std::vector<detail::SparseRowZ> rows_;
    std::map<int, size_t> by_lead_;  // pivot column -> row index
};

// ---------------------------------------------------------------------------
// RelationSpace: canonical reduced basis of a homogeneous row space.

struct RelationSpace {
    int weight = 0;
    Space space = Space::GE2;
    std::vector<ZWord> basis_words;          // the column labels
    std::vector<ZLin> basis;                 // rref rows, pivot coefficient 1
    std::vector<int> pivots;                 // pivot column of each basis row

    int rank() const { return static_cast<int>(basis.size()); }

    // Normal form of elem modulo the space, and whether it reduced to zero.
    std::pair<ZLin, bool> reduce(const ZLin& elem) const {
        for (auto& [w, c] : elem.terms())
            if (w.weight() != weight)
                throw std::invalid_argument(
                    "reduce: term " + format_zword(w) + " has weight " +
                    std::to_string(w.weight()) + ", space has weight " +
                    std::to_string(weight));
        ZLin nf = elem;
        for (size_t i = 0; i < basis.size(); ++i) {
            Rat c = nf.coeff(basis_words[pivots[i]]);
            if (c != 0) nf -= c * basis[i];
        }
        return {nf, nf.is_zero()};
    }
    bool contains(const ZLin& elem) const { return reduce(elem).second; }
};

inline RelationSpace make_relation_space(const EchelonBasis& eb) {
    RelationSpace rs;
    rs.weight = eb.columns().weight;
    rs.space = eb.columns().space;
    rs.basis_words = eb.columns().words;
    for (auto& row : eb.reduced_rows()) {
        ZLin x;
        for (auto& [c, v] : row) x.add_term(rs.basis_words[c], v);
        rs.pivots.push_back(row.front().first);
        rs.basis.push_back(std::move(x));
    }
    return rs;
}

// One-shot canonical reduction of a set of homogeneous rows.
inline RelationSpace rref_rank(const std::vector<ZLin>& rows, int weight,
                               Space space = Space::GE2) {
    EchelonBasis eb(ColumnIndex::make(weight, space));
    for (auto& r : rows) eb.insert(r);
    return make_relation_space(eb);
}

// ---------------------------------------------------------------------------
// multi-modular rank

// Deterministic candidate primes just above 2^30 (products of two residues
// stay below 2^62, so plain 64-bit arithmetic suffices).
inline std::vector<uint64_t> default_primes(size_t count, size_t skip = 0) {
    std::vector<uint64_t> ps;
    uint64_t n = (1ull << 30) + 1;
    while (ps.size() < count + skip) {
        bool prime = n > 1;
        for (uint64_t d = 2; d * d <= n && prime; ++d)
            if (n % d == 0) prime = false;
        if (prime) ps.push_back(n);
        ++n;
    }
    ps.erase(ps.begin(), ps.begin() + skip);
    return ps;
}

namespace detail {

inline uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Online Gaussian eliminator over Z/p with dense rows, pivots normalized to 1.
class ModularEliminator {
  public:
    ModularEliminator(uint64_t p, size_t cols) : p_(p), cols_(cols) {}

    uint64_t prime() const { return p_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Returns false when some denominator vanishes mod p (bad prime).
    bool insert(const ZLin& x, const ColumnIndex& ci) {
        std::vector<uint64_t> v(cols_, 0);
        const Int pz(static_cast<unsigned long>(p_));
        for (auto& [w, c] : x.terms()) {
            Int den = c.get_den() % pz;
            if (den == 0) return false;
            Int num = c.get_num() % pz;
            long n = num.get_si();
            uint64_t nv = n >= 0 ? static_cast<uint64_t>(n) % p_
                                 : p_ - static_cast<uint64_t>(-n) % p_;
            v[static_cast<size_t>(ci.index_of(w))] =
                nv % p_ * pow_mod(den.get_ui(), p_ - 2, p_) % p_;
        }
        insert_vec(std::move(v));
        return true;
    }

    void insert_vec(std::vector<uint64_t> v) {
        size_t lead = 0;
        while (true) {
            while (lead < cols_ && v[lead] == 0) ++lead;
            if (lead == cols_) return;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                uint64_t inv = pow_mod(v[lead], p_ - 2, p_);
                for (size_t c = lead; c < cols_; ++c)
                    if (v[c]) v[c] = v[c] * inv % p_;
                rows_.emplace(lead, std::move(v));
                return;
            }
            const std::vector<uint64_t>& row = it->second;
            uint64_t f = p_ - v[lead];  // v := v - v[lead]*row
            for (size_t c = lead; c < cols_; ++c)
                if (row[c]) v[c] = (v[c] + f * row[c]) % p_;
        }
    }

  private:
    uint64_t p_;
    size_t cols_;
    std::map<size_t, std::vector<uint64_t>> rows_;  // lead column -> row
};

}  // namespace detail

struct ModularRankResult {
    int rank = -1;
    std::vector<std::pair<uint64_t, int>> per_prime;  // (prime, rank) certificate
    bool agreed = false;
    bool exact_fallback = false;
};

// Rank via several primes > 2^30. Primes dividing any denominator are
// discarded and replaced (re-draw); disagreement between the surviving primes
// triggers the exact eliminator and is recorded in the certificate.
inline ModularRankResult modular_rank(const std::vector<ZLin>& rows, int weight,
                                      Space space = Space::GE2, size_t nprimes = 3) {
    ColumnIndex ci = ColumnIndex::make(weight, space);
    ModularRankResult res;
    size_t skip = 0;
    while (res.per_prime.size() < nprimes) {
        uint64_t p = default_primes(1, skip++)[0];
        detail::ModularEliminator elim(p, ci.size());
        bool good = true;
        for (auto& r : rows)
            if (!elim.insert(r, ci)) {
                good = false;  // bad prime: re-draw
                break;
            }
        if (good) res.per_prime.emplace_back(p, elim.rank());
    }
    res.agreed = std::all_of(res.per_prime.begin(), res.per_prime.end(),
                             [&](auto& pr) { return pr.second == res.per_prime[0].second; });
    if (res.agreed) {
        res.rank = res.per_prime[0].second;
    } else {
        res.exact_fallback = true;
        EchelonBasis eb(ci);
        for (auto& r : rows) eb.insert(r);
        res.rank = eb.rank();
    }
    return res;
}

}  // namespace mes
