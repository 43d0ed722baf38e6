#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "linalg.hpp"
#include "operators.hpp"
#include "util.hpp"

namespace mes {

// ---------------------------------------------------------------------------
// relation families

enum class Family { R, DR, Drop1Core };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::R: return "R";
        case Family::DR: return "DR";
        case Family::Drop1Core: return "drop1core";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "R" || s == "r") return Family::R;
    if (s == "DR" || s == "dr") return Family::DR;
    if (s == "drop1core" || s == "drop1") return Family::Drop1Core;
    throw std::invalid_argument("unknown relation family \"" + s + "\" (expected R, DR, or drop1core)");
}

// Column space the family's relations live in.
inline Space family_space(Family f) { return f == Family::Drop1Core ? Space::H0 : Space::GE2; }

namespace detail {

// Unordered pairs (u, v) of nonempty all->=2 words with wt u + wt v = wsum.
inline std::vector<std::pair<ZWord, ZWord>> ge2_pairs(int wsum) {
    std::vector<std::pair<ZWord, ZWord>> ps;
    for (int a = 2; 2 * a <= wsum; ++a) {
        int b = wsum - a;
        auto ua = enumerate_basis(a, Space::GE2);
        auto ub = enumerate_basis(b, Space::GE2);
        for (size_t i = 0; i < ua.size(); ++i) {
            size_t j0 = (a == b) ? i : 0;
            for (size_t j = j0; j < ub.size(); ++j) ps.emplace_back(ua[i], ub[j]);
        }
    }
    return ps;
}

}  // namespace detail

// Family generators of exact weight k.
//   R:         R(u, v) over unordered pairs of nonempty all->=2 words with
//              wt u + wt v = k - 2. The empty word is excluded: R(u, 1) = 0.
//   DR:        der^n R(u, v) with wt u + wt v + 2n = k - 2, n >= 0.
//   Drop1Core: drop1(u) - u over the weight-k basis of words with leading
//              letter >= 2 (zero on all->=2 words, where drop1 is the
//              identity).
inline std::vector<ZLin> family_generators(int k, Family fam, int threads = 1) {
    struct Task {
        ZWord u, v;
        int n = 0;
    };
    std::vector<Task> tasks;
    switch (fam) {
        case Family::R:
            for (auto& [u, v] : detail::ge2_pairs(k - 2)) tasks.push_back({u, v, 0});
            break;
        case Family::DR:
            for (int n = 0; 2 * n <= k - 6; ++n)
                for (auto& [u, v] : detail::ge2_pairs(k - 2 - 2 * n)) tasks.push_back({u, v, n});
            break;
        case Family::Drop1Core:
            for (auto& u : enumerate_basis(k, Space::H0)) tasks.push_back({u, ZWord(), 0});
            break;
    }
    std::vector<ZLin> gens(tasks.size());
    parallel_for(tasks.size(), threads, [&](size_t i) {
        const Task& t = tasks[i];
        if (fam == Family::Drop1Core)
            gens[i] = drop1(t.u) - ZLin(t.u);
        else
            gens[i] = der_pow(r_bracket(t.u, t.v), t.n);
    });
    return gens;
}

namespace detail {

// Stream every product g * w (family generator g of weight j, all->=2
// multiplier word w of weight k - j, the empty word included) into the sink,
// computing chunks in parallel but delivering in a fixed order. Memory stays
// bounded by the chunk size regardless of k.
template <class Sink>
void stream_ideal_rows(int k, Family fam, int threads, Sink&& sink) {
    const int jmin = fam == Family::Drop1Core ? 3 : 6;
    struct Task {
        const ZLin* g;
        const ZWord* w;
    };
    std::vector<std::vector<ZLin>> gens;
    std::vector<std::vector<ZWord>> mults;
    std::vector<Task> tasks;
    for (int j = jmin; j <= k; ++j) {
        gens.push_back(family_generators(j, fam, threads));
        mults.push_back(enumerate_basis(k - j, Space::GE2));
        // element addresses stay stable: growing the outer vectors moves the
        // inner vectors' headers, not their heap storage
        for (auto& g : gens.back())
            if (!g.is_zero())
                for (auto& w : mults.back()) tasks.push_back({&g, &w});
    }
    const size_t chunk = 128;
    std::vector<ZLin> buf;
    for (size_t start = 0; start < tasks.size(); start += chunk) {
        size_t n = std::min(chunk, tasks.size() - start);
        buf.assign(n, ZLin{});
        parallel_for(n, threads, [&](size_t i) {
            const Task& t = tasks[start + i];
            buf[i] = t.w->empty() ? *t.g : harmonic(*t.g, ZLin(*t.w));
        });
        for (size_t i = 0; i < n; ++i) sink(std::move(buf[i]));
    }
}

}  // namespace detail

// Exact span of the weight-k graded piece of the ideal generated by the
// family, as a relation space over the family's column space.
inline RelationSpace ideal_span(int k, Family fam, int threads = 1) {
    EchelonBasis eb(ColumnIndex::make(k, family_space(fam)));
    detail::stream_ideal_rows(k, fam, threads, [&](ZLin row) { eb.insert(row); });
    return make_relation_space(eb);
}

// Rank of the same span through reductions modulo large primes, with the
// cross-prime agreement certificate. Rows are streamed once per prime set;
// a prime that divides any denominator is discarded and replaced.
inline ModularRankResult ideal_rank_modular(int k, Family fam, size_t nprimes = 3, int threads = 1) {
    ModularRankResult res;
    ColumnIndex ci = ColumnIndex::make(k, family_space(fam));
    std::vector<uint64_t> primes = default_primes(nprimes, 0);
    size_t skip = nprimes;
    while (true) {
        std::vector<detail::ModularEliminator> elims;
        elims.reserve(primes.size());
        for (uint64_t p : primes) elims.emplace_back(p, ci.size());
        std::vector<char> bad(primes.size(), 0);
        detail::stream_ideal_rows(k, fam, threads, [&](ZLin row) {
            for (size_t i = 0; i < elims.size(); ++i)
                if (!bad[i] && !elims[i].insert(row, ci)) bad[i] = 1;
        });
        std::vector<uint64_t> good_primes;
        std::vector<int> good_ranks;
        for (size_t i = 0; i < primes.size(); ++i)
            if (!bad[i]) {
                good_primes.push_back(primes[i]);
                good_ranks.push_back(elims[i].rank());
            }
        if (good_primes.size() == primes.size()) {
            res.per_prime.clear();
            for (size_t i = 0; i < good_primes.size(); ++i) res.per_prime.emplace_back(good_primes[i], good_ranks[i]);
            res.agreed = std::all_of(good_ranks.begin(), good_ranks.end(),
                                     [&](int r) { return r == good_ranks.front(); });
            if (res.agreed) {
                res.rank = good_ranks.front();
                return res;
            }
            // Disagreement between primes: fall back to the exact elimination.
            res.exact_fallback = true;
            res.rank = static_cast<int>(ideal_span(k, fam, threads).rank());
            return res;
        }
        // replace the discarded primes and rerun
        std::vector<uint64_t> fresh = good_primes;
        while (fresh.size() < primes.size()) fresh.push_back(default_primes(1, skip++).front());
        primes = std::move(fresh);
    }
}

// ---------------------------------------------------------------------------
// dimension table

// Conjectural dimension of the weight-k graded quotient: the coefficient of
// x^k in (1 - x^2 - x^6) / (1 - x^2 - x^3 - x^4 - x^5 + x^8 + x^9 + x^10 + x^11 + x^12),
// equivalently d_k = d_{k-2}+d_{k-3}+d_{k-4}+d_{k-5}-d_{k-8}-d_{k-9}-d_{k-10}-d_{k-11}-d_{k-12}
// with d_0 = 1 and d_k = 0 for k < 0.
inline long conj_dim(int k) {
    if (k < 0) throw std::invalid_argument("negative weight");
    std::vector<long> d(static_cast<size_t>(k) + 1, 0);
    auto at = [&](int i) { return i < 0 ? 0L : d[static_cast<size_t>(i)]; };
    for (int i = 0; i <= k; ++i) {
        long v = (i == 0) ? 1 : 0;
        v += at(i - 2) + at(i - 3) + at(i - 4) + at(i - 5);
        v -= at(i - 8) + at(i - 9) + at(i - 10) + at(i - 11) + at(i - 12);
        d[static_cast<size_t>(i)] = v;
    }
    return d[static_cast<size_t>(k)];
}

enum class ArithMode { Exact, Modular };

struct TableRow {
    int weight = 0;
    long ambient = 0;                 // dim of the all->=2 graded piece
    long conjectured = 0;             // conj_dim(weight)
    std::optional<long> rank_r;       // rank of the R span
    std::optional<long> rank_dr;      // rank of the DR span
    std::optional<bool> certified_r;  // modular mode: primes agreed
    std::optional<bool> certified_dr;
};

inline TableRow table_row(int k, bool with_r, bool with_dr, ArithMode mode, int threads = 1, size_t nprimes = 3) {
    TableRow row;
    row.weight = k;
    row.ambient = generator_count(k);
    row.conjectured = conj_dim(k);
    auto one = [&](Family f, std::optional<long>& rank, std::optional<bool>& cert) {
        if (mode == ArithMode::Exact) {
            rank = static_cast<long>(ideal_span(k, f, threads).rank());
        } else {
            auto res = ideal_rank_modular(k, f, nprimes, threads);
            rank = static_cast<long>(res.rank);
            cert = res.agreed && !res.exact_fallback;
        }
    };
    if (with_r) one(Family::R, row.rank_r, row.certified_r);
    if (with_dr) one(Family::DR, row.rank_dr, row.certified_dr);
    return row;
}

// ---------------------------------------------------------------------------
// named verification sweeps

struct CheckReport {
    std::string id;
    int max_weight = 0;
    long instances = 0;
    std::vector<int> skipped_weights;  // weights over the instance budget
    bool pass = true;
    Json counterexample;  // null when pass
};

namespace detail {

struct CheckInstance {
    ZWord u, v;
    int i = 0;
};

struct CheckDef {
    int min_weight;
    // instances of total weight k
    std::function<std::vector<CheckInstance>(int)> instances;
    // zero iff the identity holds at this instance
    std::function<ZLin(const CheckInstance&)> defect;
};

inline std::vector<CheckInstance> single_words(int k, Space sp) {
    std::vector<CheckInstance> out;
    if (k >= 1)
        for (auto& w : enumerate_basis(k, sp))
            if (!w.empty()) out.push_back({w, ZWord(), 0});
    return out;
}

inline std::vector<CheckInstance> pair_instances(int k) {
    std::vector<CheckInstance> out;
    for (auto& [u, v] : ge2_pairs(k)) out.push_back({u, v, 0});
    return out;
}

inline const std::map<std::string, CheckDef>& check_defs() {
    static const std::map<std::string, CheckDef> defs = [] {
        std::map<std::string, CheckDef> m;
        const ZWord z1{{1}};
        // [delta, phi] = weight on words ending in a >=1 letter
        m["sl2_phi"] = CheckDef{1, [](int k) { return single_words(k, Space::H1); },
                                [](const CheckInstance& in) {
                                    ZLin w{in.u};
                                    return delta_z(phi(w)) - phi(delta_z(w)) - weight_op(w);
                                }};
        // [delta, der] = weight on all->=2 words
        m["sl2_der"] = CheckDef{2, [](int k) { return single_words(k, Space::GE2); },
                                [](const CheckInstance& in) {
                                    ZLin w{in.u};
                                    return delta_z(der(w)) - der(delta_z(w)) - weight_op(w);
                                }};
        // delta is a derivation for the double-product defect bracket
        m["delta_leibniz_R"] = CheckDef{4, pair_instances, [](const CheckInstance& in) {
                                            ZLin u{in.u}, v{in.v};
                                            return delta_z(r_bracket(u, v)) - r_bracket(delta_z(u), v) -
                                                   r_bracket(u, delta_z(v));
                                        }};
        // the bracket lands in the all->=2 span
        m["R_in_GE2"] = CheckDef{4, pair_instances, [](const CheckInstance& in) {
                                     ZLin r = r_bracket(ZLin(in.u), ZLin(in.v));
                                     ZLin outside;
                                     for (auto& [w, c] : r.terms())
                                         if (!w.in_ge2()) outside.add_term(w, c);
                                     return outside;
                                 }};
        // drop1 kills the harmonic-shuffle defect against z_1
        m["drop1_hoffman_kernel"] = CheckDef{2, [](int k) { return single_words(k, Space::H0); },
                                             [z1](const CheckInstance& in) {
                                                 return drop1(ds(ZLin(in.u), ZLin(z1)));
                                             }};
        // drop1(u * v) = drop1(u) * v for v all->=2
        m["drop1_star_compat"] = CheckDef{4,
                                          [](int k) {
                                              std::vector<CheckInstance> out;
                                              for (int a = 2; a <= k - 2; ++a)
                                                  for (auto& u : enumerate_basis(a, Space::H0))
                                                      for (auto& v : enumerate_basis(k - a, Space::GE2))
                                                          out.push_back({u, v, 0});
                                              return out;
                                          },
                                          [](const CheckInstance& in) {
                                              ZLin u{in.u}, v{in.v};
                                              return drop1(harmonic(u, v)) - harmonic(drop1(u), v);
                                          }};
        // der's deviation from being a harmonic derivation is -R
        m["der_defect"] = CheckDef{4, pair_instances, [](const CheckInstance& in) {
                                       ZLin u{in.u}, v{in.v};
                                       return der(harmonic(u, v)) - harmonic(der(u), v) - harmonic(u, der(v)) +
                                              r_bracket(u, v);
                                   }};
        // delta against iterated der:
        //   delta der^i = der^i delta + i W der^{i-1} - i(i-1) der^{i-1},
        // the unique closing coefficient consistent with [delta, der] = W and
        // [W, der] = 2 der (an equivalent display with -2i in place of
        // -i(i-1) circulates, but it matches only at i = 3 and contradicts
        // [delta, der] = W at i = 1; direct evaluation at (2), i = 2 rejects
        // it).
        m["delta_der_power"] = CheckDef{2,
                                        [](int k) {
                                            std::vector<CheckInstance> out;
                                            for (auto& w : enumerate_basis(k, Space::GE2))
                                                if (!w.empty())
                                                    for (int i = 1; i <= 3; ++i) out.push_back({w, ZWord(), i});
                                            return out;
                                        },
                                        [](const CheckInstance& in) {
                                            ZLin w{in.u};
                                            int i = in.i;
                                            ZLin prev = der_pow(w, i - 1);
                                            return delta_z(der_pow(w, i)) - der_pow(delta_z(w), i) -
                                                   weight_op(prev) * Rat(i) + prev * Rat(i * (i - 1));
                                        }};
        return m;
    }();
    return defs;
}

}  // namespace detail

inline std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (auto& [id, def] : detail::check_defs()) ids.push_back(id);
    return ids;
}

// Sweep one named identity over all instances up to max_weight. budget < 0
// means unlimited; otherwise weights with more instances than the budget are
// skipped and recorded. On the first failure (in instance order) the report
// carries a counterexample with the instance and the nonzero defect.
inline CheckReport run_check(const std::string& id, int max_weight, int threads = 1, long budget = -1) {
    auto& defs = detail::check_defs();
    auto it = defs.find(id);
    if (it == defs.end()) {
        std::string known;
        for (auto& [k, v] : defs) {
            if (!known.empty()) known += ", ";
            known += k;
        }
        throw std::invalid_argument("unknown check \"" + id + "\" (known: " + known + ")");
    }
    const detail::CheckDef& def = it->second;
    CheckReport rep;
    rep.id = id;
    rep.max_weight = max_weight;
    for (int k = def.min_weight; k <= max_weight; ++k) {
        auto inst = def.instances(k);
        if (inst.empty()) continue;
        if (budget >= 0 && static_cast<long>(inst.size()) > budget) {
            rep.skipped_weights.push_back(k);
            continue;
        }
        std::vector<char> ok(inst.size(), 1);
        parallel_for(inst.size(), threads, [&](size_t i) { ok[i] = def.defect(inst[i]).is_zero() ? 1 : 0; });
        rep.instances += static_cast<long>(inst.size());
        for (size_t i = 0; i < inst.size(); ++i)
            if (!ok[i]) {
                rep.pass = false;
                Json cx{{"check", id}, {"weight", k}};
                Json inj{{"u", inst[i].u.k}};
                if (!inst[i].v.empty() || id == "drop1_star_compat") inj["v"] = inst[i].v.k;
                if (inst[i].i) inj["i"] = inst[i].i;
                cx["instance"] = inj;
                cx["defect"] = lin_json(def.defect(inst[i]));
                rep.counterexample = cx;
                return rep;
            }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// diamond defects (reported as data, not asserted)

struct DiamondReport {
    ZLin defect;
    int weight = 0;
    bool in_dr_span = false;
    ZLin normal_form;  // residue of the defect modulo the DR span
};

// drop1(u * v) - drop1(u) * drop1(v) for words with leading letter >= 2,
// reduced against the DR span of the same weight.
inline DiamondReport diamond_defect(const ZWord& u, const ZWord& v, int threads = 1) {
    if (!u.in_h0() || !v.in_h0()) throw std::domain_error("diamond defect needs words with leading letter >= 2");
    DiamondReport rep;
    rep.defect = drop1(stuffle(u, v)) - harmonic(drop1(u), drop1(v));
    rep.weight = u.weight() + v.weight();
    if (rep.defect.is_zero()) {
        rep.in_dr_span = true;
        return rep;
    }
    auto span = ideal_span(rep.weight, Family::DR, threads);
    auto [nf, inside] = span.reduce(rep.defect);
    rep.normal_form = nf;
    rep.in_dr_span = inside;
    return rep;
}

// drop1(phi(drop1(w))) - drop1(phi(w)), likewise reduced against DR.
inline DiamondReport diamond_derivative_defect(const ZWord& w, int threads = 1) {
    if (!w.in_h0()) throw std::domain_error("diamond derivative defect needs a word with leading letter >= 2");
    DiamondReport rep;
    rep.defect = drop1(phi(drop1(w))) - drop1(phi(ZLin(w)));
    rep.weight = w.weight() + 2;
    if (rep.defect.is_zero()) {
        rep.in_dr_span = true;
        return rep;
    }
    auto span = ideal_span(rep.weight, Family::DR, threads);
    auto [nf, inside] = span.reduce(rep.defect);
    rep.normal_form = nf;
    rep.in_dr_span = inside;
    return rep;
}

// ---------------------------------------------------------------------------
// truncated-sum harness: exact finite analogues of the nested sums

// zeta_m(w): nested truncated power sum over m > n_1 > ... > n_r > 0.
inline Rat zeta_trunc(int m, const ZWord& w) {
    if (w.empty()) return Rat(1);
    if (m <= static_cast<int>(w.depth())) return Rat(0);
    Rat acc(0);
    ZWord rest;
    rest.k.assign(w.k.begin() + 1, w.k.end());
    for (int n = 1; n < m; ++n) {
        Int den(n);
        mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(w.k.front()));
        Rat term = Rat(Int(1), den) * zeta_trunc(n, rest);
        acc += term;
    }
    return acc;
}

// F_w(M): sum over splittings of w into consecutive nonempty blocks
// w_1 ... w_s and chains M > m_1 > ... > m_s > 0 of prod_i zeta_{m_i}(w_i).
inline Rat trunc_sum_F(const ZWord& w, int M) {
    std::function<Rat(size_t, int)> go = [&](size_t from, int bound) -> Rat {
        if (from == w.k.size()) return Rat(1);
        Rat acc(0);
        for (size_t to = from + 1; to <= w.k.size(); ++to) {
            ZWord block;
            block.k.assign(w.k.begin() + static_cast<long>(from), w.k.begin() + static_cast<long>(to));
            for (int m = 1; m < bound; ++m) {
                Rat z = zeta_trunc(m, block);
                if (z != 0) acc += z * go(to, m);
            }
        }
        return acc;
    };
    return go(0, M);
}

inline Rat trunc_sum_F(const ZLin& x, int M) {
    Rat acc(0);
    for (auto& [w, c] : x.terms()) acc += c * trunc_sum_F(w, M);
    return acc;
}

// coF_w(M): supported on w = z_1^r, where it is
// (-1)^r sum over M > m_1 >= ... >= m_r > 0 of (prod over distinct values v
// with multiplicity e of zeta_v(z_1)^e / e!).
inline Rat trunc_sum_coF(const ZWord& w, int M) {
    for (int k : w.k)
        if (k != 1) return Rat(0);
    const int r = w.depth();
    if (r == 0) return Rat(1);
    std::function<Rat(int, int)> go = [&](int left, int below) -> Rat {
        if (left == 0) return Rat(1);
        Rat acc(0);
        for (int val = 1; val < below; ++val) {
            Rat h = zeta_trunc(val, ZWord{{1}});
            Rat pw(1);
            for (int e = 1; e <= left; ++e) {
                pw *= h / Rat(e);  // accumulates zeta^e / e!
                acc += pw * go(left - e, val);
            }
        }
        return acc;
    };
    Rat total = go(r, M);
    return (r % 2) ? -total : total;
}

inline Rat trunc_sum_coF(const ZLin& x, int M) {
    Rat acc(0);
    for (auto& [w, c] : x.terms()) acc += c * trunc_sum_coF(w, M);
    return acc;
}

// F*_w(M): deconcatenation pairing of coF and F.
inline Rat trunc_sum_Fstar(const ZWord& w, int M) {
    Rat acc(0);
    for (size_t cut = 0; cut <= w.k.size(); ++cut) {
        ZWord a, b;
        a.k.assign(w.k.begin(), w.k.begin() + static_cast<long>(cut));
        b.k.assign(w.k.begin() + static_cast<long>(cut), w.k.end());
        Rat ca = trunc_sum_coF(a, M);
        if (ca != 0) acc += ca * trunc_sum_F(b, M);
    }
    return acc;
}

inline Rat trunc_sum_Fstar(const ZLin& x, int M) {
    Rat acc(0);
    for (auto& [w, c] : x.terms()) acc += c * trunc_sum_Fstar(w, M);
    return acc;
}

struct A2Report {
    int cutoff = 0;      // M
    int max_weight = 0;  // sweep bound
    long checks = 0;
    bool pass = true;
    Json counterexample;
};

// Exact sweep of the truncated-sum statements:
//   (a) F is multiplicative for the harmonic product,
//   (b) coF is multiplicative for the harmonic product,
//   (c) F*(z_1) = 0,
//   (d) F*(w) = F(reg0(w)) for every word (harmonic reg0).
inline A2Report a2_harness(int cutoff, int max_weight, int threads = 1) {
    A2Report rep;
    rep.cutoff = cutoff;
    rep.max_weight = max_weight;
    if (cutoff < 2 || max_weight < 1) throw std::invalid_argument("cutoff must be >= 2 and max weight >= 1");

    struct Case {
        const char* what;
        ZWord u, v;
    };
    std::vector<Case> cases;
    cases.push_back({"Fstar_z1", ZWord{{1}}, ZWord()});
    for (int k = 1; k <= max_weight; ++k)
        for (auto& w : enumerate_basis(k, Space::H1)) cases.push_back({"Fstar_reg0", w, ZWord()});
    for (int a = 1; a <= max_weight - 1; ++a)
        for (int b = a; b <= max_weight - a; ++b)
            for (auto& u : enumerate_basis(a, Space::H1))
                for (auto& v : enumerate_basis(b, Space::H1)) {
                    cases.push_back({"F_hom", u, v});
                    cases.push_back({"coF_hom", u, v});
                }

    const int M = cutoff;
    std::vector<char> ok(cases.size(), 1);
    parallel_for(cases.size(), threads, [&](size_t i) {
        const Case& c = cases[i];
        std::string what = c.what;
        bool good = true;
        if (what == "Fstar_z1") {
            good = trunc_sum_Fstar(c.u, M) == 0;
        } else if (what == "Fstar_reg0") {
            good = trunc_sum_Fstar(c.u, M) == trunc_sum_F(reg0(ZLin(c.u), ProductKind::Harmonic), M);
        } else if (what == "F_hom") {
            good = trunc_sum_F(stuffle(c.u, c.v), M) == trunc_sum_F(c.u, M) * trunc_sum_F(c.v, M);
        } else {  // coF_hom
            good = trunc_sum_coF(stuffle(c.u, c.v), M) == trunc_sum_coF(c.u, M) * trunc_sum_coF(c.v, M);
        }
        ok[i] = good ? 1 : 0;
    });
    rep.checks = static_cast<long>(cases.size());
    for (size_t i = 0; i < cases.size(); ++i)
        if (!ok[i]) {
            rep.pass = false;
            rep.counterexample = Json{{"statement", cases[i].what}, {"u", cases[i].u.k}, {"v", cases[i].v.k},
                                      {"cutoff", M}};
            break;
        }
    return rep;
}

}  // namespace mes
