// Shared test utilities: deterministic hand-rolled generators for property
// tests.  Every property test prints its seed so a failure is reproducible
// with MES_TEST_SEED=<seed>.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <iostream>
#include <string>

#include <mes/mes.hpp>

namespace mestest {

inline std::uint64_t test_seed() {
    if (const char* s = std::getenv("MES_TEST_SEED")) return std::strtoull(s, nullptr, 0);
    return 0x9e3779b97f4a7c15ull;
}

// splitmix64: tiny, reproducible, good enough for fuzzing word shapes.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    mes::ZWord zword(int max_depth, int min_letter, int max_letter) {
        mes::ZWord w;
        int d = uniform(0, max_depth);
        for (int i = 0; i < d; ++i) w.k.push_back(uniform(min_letter, max_letter));
        return w;
    }
    mes::BWord bword(int max_depth, int max_letter, int max_zero_run) {
        std::vector<std::pair<int, int>> runs;
        int d = uniform(0, max_depth);
        for (int i = 0; i < d; ++i)
            runs.emplace_back(uniform(1, max_letter), uniform(0, max_zero_run));
        return mes::BWord(std::move(runs));
    }
    mes::Rat rat(int max_abs) {
        int num = uniform(-max_abs, max_abs);
        int den = uniform(1, max_abs);
        mes::Rat q(num, 1);
        return q / mes::Rat(den, 1);
    }
};

inline void announce_seed(const char* what, std::uint64_t seed) {
    std::cout << "[prop] " << what << " seed=" << seed << "\n";
}

inline mes::ZWord rep2(int n) {
    mes::ZWord w;
    for (int i = 0; i < n; ++i) w.k.push_back(2);
    return w;
}

inline mes::ZWord cat(std::initializer_list<mes::ZWord> ws) {
    mes::ZWord o;
    for (auto& w : ws) o.k.insert(o.k.end(), w.k.begin(), w.k.end());
    return o;
}

inline mes::ZLin parse_lin(const char* word_text) {
    return mes::ZLin(mes::parse_zword(word_text));
}

}  // namespace mestest
