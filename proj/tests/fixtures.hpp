#pragma once

#include "filtadm/model.hpp"

#include <initializer_list>
#include <random>
#include <tuple>

namespace fixtures {

using filtadm::ModuleSpec;
using filtadm::Rat;
using filtadm::WeightProfile;

inline ModuleSpec single_family(std::initializer_list<std::pair<long, long>> lb, long p = 2, long h = 1) {
    ModuleSpec s;
    s.config = {p, 1, 1, 1, 1};
    s.families = {{"F", h, Rat(0)}};
    for (auto [l, b] : lb) s.summands.push_back({"F", l, b});
    return s;
}

inline ModuleSpec ex1a() { return single_family({{0, 1}, {0, 2}}); }
inline ModuleSpec ex1b() { return single_family({{0, 2}, {1, 1}}); }
inline ModuleSpec ex2() { return single_family({{0, 2}, {1, 2}}); }
inline ModuleSpec ex3() { return single_family({{0, 3}, {1, 1}}); }

inline WeightProfile weights(std::initializer_list<long> w) { return {{std::vector<long>(w)}}; }

struct RandomShape {
    long max_dim = 6;
    long max_summands = 3;
    long max_families = 2;
    bool allow_h2 = false;
};

// Random valid spec: d+1 <= max_dim, tBase with denominators up to 4.
inline ModuleSpec random_spec(std::mt19937_64& rng, const RandomShape& shape = {}) {
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    static const long primes[] = {2, 3, 5};
    while (true) {
        ModuleSpec s;
        const long degL = pick(1, 2), degKL = pick(1, 2);
        s.config = {primes[pick(0, 2)], degL * degKL, degL, degKL, 1};
        const long nfam = pick(1, shape.max_families);
        for (long f = 0; f < nfam; ++f) {
            const long h = shape.allow_h2 && pick(0, 3) == 0 ? 2 : 1;
            s.families.push_back({std::string(1, static_cast<char>('A' + f)), h, filtadm::make_rat(pick(-6, 6), pick(1, 4))});
        }
        const long ns = pick(1, shape.max_summands);
        for (long i = 0; i < ns; ++i) {
            const auto& fam = s.families[static_cast<std::size_t>(pick(0, nfam - 1))];
            s.summands.push_back({fam.id, pick(0, 2), pick(1, 3)});
        }
        const long d = s.dim();
        if (d < 2 || d > shape.max_dim) continue;
        // Drop families that ended up unused.
        std::vector<filtadm::Family> used;
        for (const auto& f : s.families)
            for (const auto& m : s.summands)
                if (m.family == f.id) {
                    used.push_back(f);
                    break;
                }
        s.families = used;
        return s;
    }
}

// Strictly increasing integer weights per embedding with free total.
inline WeightProfile random_profile(std::mt19937_64& rng, const ModuleSpec& spec) {
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    WeightProfile w;
    for (long s = 0; s < spec.config.degLQp; ++s) {
        std::vector<long> row;
        long x = pick(-5, 2);
        for (long j = 0; j < spec.dim(); ++j) {
            row.push_back(x);
            x += pick(1, 3);
        }
        w.weights.push_back(row);
    }
    return w;
}

// As random_profile, but shifted so that [K:L] * (sum of all weights) = t_N(D).
// Returns false when t_N(D)/[K:L] is not an integer.
inline bool engineered_profile(std::mt19937_64& rng, const ModuleSpec& spec, WeightProfile& out) {
    const Rat target = filtadm::tN(spec) / Rat(spec.config.degKL);
    if (target.get_den() != 1) return false;
    out = random_profile(rng, spec);
    long sum = 0;
    for (const auto& row : out.weights)
        for (long v : row) sum += v;
    const long n = spec.dim() * spec.config.degLQp;
    const long gap = target.get_num().get_si() - sum;
    // Shift every weight by q and put the remainder on the top weight of the last embedding.
    const long q = gap >= 0 ? gap / n : -((-gap + n - 1) / n);
    const long r = gap - q * n;
    for (auto& row : out.weights)
        for (auto& v : row) v += q;
    out.weights.back().back() += r;
    return true;
}

}  // namespace fixtures
