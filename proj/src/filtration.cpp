#include "filtadm/filtration.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace filtadm {

std::vector<Subspace> Filtration::steps(std::size_t sigma) const {
    const auto& basis = bases.at(sigma);
    const std::size_t n = basis.size();
    std::vector<Subspace> out(n + 1, Subspace(n));
    for (std::size_t j = n; j-- > 0;) {
        std::vector<Vec> vs = out[j + 1].basis();
        vs.push_back(basis[j]);
        out[j] = Subspace::span(n, std::move(vs));
    }
    return out;
}

std::optional<GoodSubobject> transversality_failure(const ModuleSpec& spec, const std::vector<GoodSubobject>& goods,
                                                    const Filtration& fil) {
    std::vector<std::vector<Subspace>> steps;
    for (std::size_t s = 0; s < fil.bases.size(); ++s) steps.push_back(fil.steps(s));
    const long n = spec.dim();
    for (const auto& g : goods) {
        const Subspace E = good_subspace(spec, g);
        const long m = static_cast<long>(E.dim());
        for (const auto& st : steps) {
            if (st.front().dim() != static_cast<std::size_t>(n)) return g;
            for (long j = 1; j <= n; ++j) {
                const long expect = std::max(0L, m - j + 1);
                if (static_cast<long>(intersection_dim(E, st[j - 1])) != expect) return g;
            }
        }
    }
    return std::nullopt;
}

Filtration build_transverse_filtration(const ModuleSpec& spec, const WeightProfile& profile,
                                       const std::vector<ModificationEdge>& edges, std::uint64_t seed, int budget,
                                       long magnitude) {
    require_valid(spec, profile);
    const std::size_t n = static_cast<std::size_t>(spec.dim());
    const auto goods = enumerate_good_subobjects(spec, edges);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-magnitude, magnitude);
    Filtration fil;
    fil.profile = profile;
    fil.seed = seed;
    std::optional<GoodSubobject> last_failure;
    for (int attempt = 1; attempt <= budget; ++attempt) {
        fil.attempts = attempt;
        fil.bases.assign(profile.weights.size(), {});
        for (auto& basis : fil.bases)
            for (std::size_t j = 0; j < n; ++j) {
                Vec v(n);
                for (auto& x : v) x = coord(rng);
                basis.push_back(std::move(v));
            }
        last_failure = transversality_failure(spec, goods, fil);
        if (!last_failure) return fil;
    }
    throw FiltrationError("no transverse filtration within " + std::to_string(budget) + " attempts", *last_failure);
}

Rat tH(const Filtration& fil, const Subspace& Dprime, const Config& config) {
    Rat total = 0;
    for (std::size_t s = 0; s < fil.bases.size(); ++s) {
        const auto steps = fil.steps(s);
        const auto& w = fil.profile.weights[s];
        for (std::size_t j = 0; j < w.size(); ++j) {
            const long jump = static_cast<long>(intersection_dim(Dprime, steps[j])) -
                              static_cast<long>(intersection_dim(Dprime, steps[j + 1]));
            total += Rat(w[j] * jump);
        }
    }
    return total * Rat(config.degKL);
}

Rat tN_concrete(const ModuleSpec& spec, const ConcreteRealization& real, const Subspace& Dprime) {
    if (Dprime.dim() == 0) return 0;
    const Rat det = determinant(restrict_to(real.phi, Dprime));
    const long rank = static_cast<long>(Dprime.dim());
    Rat total = 0;
    long seed_val = 0;
    if (spec.families.size() == 1) {
        total += spec.families[0].tBase * Rat(rank);
        seed_val = rank * valuation(real.seeds[0], real.p);
    } else {
        for (std::size_t f = 0; f < spec.families.size(); ++f) {
            const long mult = valuation(det, real.seeds[f].get_num().get_si());
            total += spec.families[f].tBase * Rat(mult);
            seed_val += mult * valuation(real.seeds[f], real.p);
        }
    }
    return total + Rat((valuation(det, real.p) - seed_val) * spec.config.degKQp);
}

std::vector<Subspace> admissibility_candidates(const ModuleSpec&, const ConcreteRealization& real,
                                               const Filtration& fil, const std::vector<Subspace>& base) {
    const std::vector<Matrix> ops{real.phi, real.nmat};
    std::set<Subspace> all(base.begin(), base.end());
    std::set<Subspace> derived;
    for (std::size_t s = 0; s < fil.bases.size(); ++s) {
        const auto steps = fil.steps(s);
        for (const auto& S : base)
            for (std::size_t j = 1; j + 1 < steps.size(); ++j) {
                const Subspace X = intersect(S, steps[j]);
                if (X.dim() == 0) continue;
                for (auto cand : {stable_closure(X, ops), stable_interior(X, ops)})
                    if (!all.count(cand)) derived.insert(std::move(cand));
            }
    }
    for (const auto& x : derived) {
        all.insert(x);
        for (const auto& b : base) all.insert(b + x);
    }
    return {all.begin(), all.end()};
}

AdmissibilityVerdict check_admissible(const ModuleSpec& spec, const ConcreteRealization& real, const Filtration& fil,
                                      std::size_t cap, std::uint64_t seed) {
    const auto enumeration = enumerate_concrete_subobjects(real, spec, cap, seed);
    const auto candidates = admissibility_candidates(spec, real, fil, enumeration.subobjects);
    AdmissibilityVerdict v;
    v.pattern_count = enumeration.subobjects.size();
    v.filtration_derived = candidates.size() - enumeration.subobjects.size();
    v.cross_check_ok = enumeration.cross_check_ok;
    Rat worst;
    for (const auto& S : candidates) {
        AdmissibilityRow row{S, tH(fil, S, spec.config), tN_concrete(spec, real, S)};
        const bool is_top = S.dim() == real.dim;
        if (is_top && row.tH != row.tN) {
            v.top_equality = false;
            v.admissible = false;
            v.witness = v.rows.size();
        } else if (row.tH > row.tN && v.top_equality) {
            // Report the largest excess; ties keep the earliest (smallest) subspace.
            Rat excess = row.tH - row.tN;
            if (!v.witness || excess > worst) {
                v.witness = v.rows.size();
                worst = excess;
            }
            v.admissible = false;
        }
        v.rows.push_back(std::move(row));
    }
    return v;
}

}  // namespace filtadm
