#include "filtadm/special_pairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace filtadm {

SpecialCheck is_special(const SpecialPair& p) {
    const std::size_t k = p.k();
    if (p.a.size() != k + 2) return {false, "shape", "expected len(a) = len(c) + 2"};
    // (i)
    if (p.a[0] <= 0) return {false, "(i)", "a_0 must be positive"};
    if (p.a[k + 1] < 0) return {false, "(i)", "a_{k+1} must be nonnegative"};
    for (std::size_t i = 1; i <= k; ++i)
        if (!(p.c[i - 1] > 0 && p.c[i - 1] <= p.a[i]))
            return {false, "(i)", "need 0 < c_" + std::to_string(i) + " <= a_" + std::to_string(i)};
    // (ii), including i = 0 (c_0 = a_0) and i = k (c_{k+1} = 0).
    auto ratio = [&](std::size_t i) -> Rat {
        if (i == 0) return 1;
        if (i == k + 1) return 0;
        return p.c[i - 1] / p.a[i];
    };
    for (std::size_t i = 0; i <= k; ++i)
        if (ratio(i) < ratio(i + 1))
            return {false, "(ii)", "c_i/a_i increases at i=" + std::to_string(i)};
    // (iii)
    for (std::size_t i = 1; i <= k; ++i) {
        if (p.a[0] < p.c[i - 1]) return {false, "(iii)", "a_0 < c_" + std::to_string(i)};
        if (p.a[k + 1] < p.a[i] - p.c[i - 1])
            return {false, "(iii)", "a_{k+1} < a_" + std::to_string(i) + " - c_" + std::to_string(i)};
    }
    return {};
}

SolvedT solve_t(const SpecialPair& p) {
    if (auto chk = is_special(p); !chk.ok) throw std::invalid_argument("solve_t: pair is not special " + chk.clause);
    const std::size_t k = p.k();
    SolvedT out;
    if (k == 0) return out;
    const Rat& a0 = p.a[0];
    Rat t1;
    bool first = true;
    Rat gap = 0;    // sum_{i<=l} (a_i - c_i)
    Rat csum = 0;   // sum_{i<=l-1} c_i
    for (std::size_t l = 1; l <= k; ++l) {
        gap += p.a[l] - p.c[l - 1];
        Rat cand = gap / (1 + csum / a0);
        if (first || cand > t1) t1 = cand;
        first = false;
        csum += p.c[l - 1];
    }
    out.r = t1 / a0;
    for (std::size_t i = 1; i <= k; ++i) out.t.push_back(i == 1 ? t1 : t1 * p.c[i - 2] / a0);
    return out;
}

std::string solved_conditions_failure(const SpecialPair& p, const SolvedT& s) {
    const std::size_t k = p.k();
    if (s.t.size() != k) return "shape";
    if (k == 0) return "";
    for (std::size_t i = 1; i <= k; ++i) {
        const Rat& denom = i == 1 ? p.a[0] : p.c[i - 2];
        if (s.t[i - 1] != s.r * denom) return "(i)'";
    }
    Rat tsum = 0, gap = 0;
    for (std::size_t l = 1; l <= k; ++l) {
        tsum += s.t[l - 1];
        gap += p.a[l] - p.c[l - 1];
        if (tsum < gap) return "(ii)'";
    }
    if (tsum - gap + s.r * p.c[k - 1] > p.a[k + 1]) return "(iii)'";
    return "";
}

std::vector<long> omega_of(const SpecialPair& p) {
    auto as_long = [](const Rat& q) {
        if (q.get_den() != 1) throw std::invalid_argument("omega_of: non-integral entry");
        return q.get_num().get_si();
    };
    std::vector<long> out;
    long end = 0;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        end += as_long(p.a[i]);
        long ci = i == 0 ? as_long(p.a[0]) : (i <= p.k() ? as_long(p.c[i - 1]) : 0);
        for (long j = end - ci + 1; j <= end; ++j) out.push_back(j);
    }
    return out;
}

const char* to_string(WeightedStatus s) {
    switch (s) {
        case WeightedStatus::holds: return "holds";
        case WeightedStatus::fails: return "fails";
        case WeightedStatus::hypothesis_violation: return "hypothesis_violation";
    }
    return "?";
}

WeightedCheck check_weighted_inequality(std::span<const long> omega, std::span<const Rat> m, std::span<const Rat> n) {
    WeightedCheck out;
    if (m.size() != n.size()) {
        out.status = WeightedStatus::hypothesis_violation;
        out.hypothesis = "length";
        return out;
    }
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        if (m[i] > m[i + 1] || n[i] > n[i + 1]) {
            out.status = WeightedStatus::hypothesis_violation;
            out.hypothesis = "(a)";
            return out;
        }
        if (m[i + 1] - m[i] < n[i + 1] - n[i]) {
            out.status = WeightedStatus::hypothesis_violation;
            out.hypothesis = "(b)";
            return out;
        }
    }
    Rat sm = 0, sn = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        sm += m[i];
        sn += n[i];
    }
    if (sm > sn) {
        out.status = WeightedStatus::hypothesis_violation;
        out.hypothesis = "(c)";
        return out;
    }
    for (long j : omega) {
        if (j < 1 || static_cast<std::size_t>(j) > m.size()) throw std::out_of_range("omega index out of range");
        out.lhs += m[j - 1];
        out.rhs += n[j - 1];
    }
    out.status = out.lhs <= out.rhs ? WeightedStatus::holds : WeightedStatus::fails;
    return out;
}

namespace {

std::vector<long> concatenate(const std::vector<AssemblyPart>& parts) {
    std::vector<long> out;
    std::set<long> seen;
    long shift = 0;
    for (const auto& part : parts) {
        for (long j : part.omega) {
            if (j < 1 || j > part.dim) throw std::logic_error("assemble_global: omega entry outside its block");
            if (!seen.insert(shift + j).second) throw std::logic_error("assemble_global: overlapping offsets");
            out.push_back(shift + j);
        }
        shift += part.dim;
    }
    return out;
}

}  // namespace

std::vector<long> assemble_global(std::vector<AssemblyPart> parts) {
    std::stable_sort(parts.begin(), parts.end(), [](const AssemblyPart& x, const AssemblyPart& y) { return x.r > y.r; });
    return concatenate(parts);
}

std::vector<long> assemble_by_density(std::vector<AssemblyPart> parts) {
    auto density = [](const AssemblyPart& p) {
        return p.dim == 0 ? Rat(0) : Rat(static_cast<long>(p.omega.size())) / Rat(p.dim);
    };
    std::stable_sort(parts.begin(), parts.end(),
                     [&](const AssemblyPart& x, const AssemblyPart& y) { return density(x) > density(y); });
    return concatenate(parts);
}

bool front_loaded(std::span<const long> omega, long n) {
    std::vector<long> hits(static_cast<std::size_t>(n) + 1, 0);
    for (long j : omega) {
        if (j < 1 || j > n) return false;
        ++hits[j];
    }
    const long total = static_cast<long>(omega.size());
    long count = 0;
    for (long t = 1; t <= n; ++t) {
        count += hits[t];
        if (count * n < total * t) return false;
    }
    return true;
}


SpecialPair random_special_pair(std::mt19937_64& rng, std::size_t max_k, long max_entry) {
    std::uniform_int_distribution<std::size_t> kd(0, max_k);
    std::uniform_int_distribution<long> pos(1, max_entry), nonneg(0, max_entry);
    while (true) {
        SpecialPair p;
        const std::size_t k = kd(rng);
        p.a.push_back(Rat(pos(rng)));
        for (std::size_t i = 0; i < k; ++i) {
            const long ai = pos(rng);
            std::uniform_int_distribution<long> cd(1, ai);
            p.a.push_back(Rat(ai));
            p.c.push_back(Rat(cd(rng)));
        }
        p.a.push_back(Rat(nonneg(rng)));
        if (is_special(p).ok) return p;
    }
}

std::pair<std::vector<Rat>, std::vector<Rat>> random_hypothesis_mn(std::mt19937_64& rng, std::size_t length) {
    std::uniform_int_distribution<long> den(1, 4), start(-8, 8), step(0, 3), coin(0, 2);
    std::vector<Rat> m(length), n(length);
    const long dn = den(rng);
    n[0] = make_rat(start(rng), dn);
    m[0] = 0;
    for (std::size_t i = 1; i < length; ++i) {
        const Rat dnext = make_rat(step(rng), dn);
        n[i] = n[i - 1] + dnext;
        // Extra increment is zero a third of the time to hit boundary cases.
        const Rat extra = coin(rng) == 0 ? Rat(0) : make_rat(step(rng), den(rng));
        m[i] = m[i - 1] + dnext + extra;
    }
    Rat sm = 0, sn = 0;
    for (std::size_t i = 0; i < length; ++i) {
        sm += m[i];
        sn += n[i];
    }
    // Shift m so that sum(m) <= sum(n), with equality two times in three.
    Rat shift = (sn - sm) / Rat(static_cast<long>(length));
    if (coin(rng) == 0) shift -= make_rat(step(rng), den(rng));
    for (auto& x : m) x += shift;
    return {m, n};
}

SpecialFuzzReport fuzz_special(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SpecialFuzzReport rep;
    auto fail = [&](const std::string& what) {
        ++rep.failures;
        if (rep.first_failure.empty()) rep.first_failure = what;
    };
    auto describe = [](const SpecialPair& p) {
        std::string s = "a=(";
        for (std::size_t i = 0; i < p.a.size(); ++i) s += (i ? "," : "") + to_string(p.a[i]);
        s += ") c=(";
        for (std::size_t i = 0; i < p.c.size(); ++i) s += (i ? "," : "") + to_string(p.c[i]);
        return s + ")";
    };
    for (std::size_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const SpecialPair p = random_special_pair(rng);
        const SolvedT sol = solve_t(p);
        if (auto f = solved_conditions_failure(p, sol); !f.empty()) fail("solve_t " + f + " on " + describe(p));
        const auto omega = omega_of(p);
        long total = 0;
        for (const auto& x : p.a) total += x.get_num().get_si();
        auto [m, n] = random_hypothesis_mn(rng, static_cast<std::size_t>(total));
        const auto chk = check_weighted_inequality(omega, m, n);
        if (chk.status != WeightedStatus::holds) fail(std::string("weighted inequality ") + to_string(chk.status) + " on " + describe(p));

        if (t % 4 != 0) continue;
        ++rep.global_trials;
        std::uniform_int_distribution<int> parts_d(2, 3);
        std::vector<AssemblyPart> parts;
        long big = 0;
        for (int i = parts_d(rng); i > 0; --i) {
            AssemblyPart part;
            part.pair = random_special_pair(rng, 3, 4);
            part.r = solve_t(part.pair).r;
            part.omega = omega_of(part.pair);
            for (const auto& x : part.pair.a) part.dim += x.get_num().get_si();
            big += part.dim;
            parts.push_back(std::move(part));
        }
        auto [gm, gn] = random_hypothesis_mn(rng, static_cast<std::size_t>(big));
        const auto by_r = check_weighted_inequality(assemble_global(parts), gm, gn);
        const auto by_density = check_weighted_inequality(assemble_by_density(parts), gm, gn);
        if (by_r.status != WeightedStatus::holds) {
            ++rep.global_failures;
            if (rep.first_global_failure.empty()) {
                std::string s;
                for (const auto& part : parts) s += (s.empty() ? "" : " | ") + describe(part.pair) + " r=" + to_string(part.r);
                rep.first_global_failure = s;
            }
        }
        if (by_density.status != WeightedStatus::holds) ++rep.density_global_failures;
    }
    return rep;
}

}  // namespace filtadm
