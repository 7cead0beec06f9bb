#include "filtadm/subobjects.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace filtadm {

std::vector<GoodSubobject> enumerate_good_subobjects(const ModuleSpec& spec) {
    std::vector<GoodSubobject> out;
    GoodSubobject cur{std::vector<long>(spec.summands.size(), 0)};
    while (true) {
        out.push_back(cur);
        // Odometer with the last summand varying fastest gives lexicographic order.
        std::size_t i = cur.c.size();
        while (i > 0 && cur.c[i - 1] == spec.summands[i - 1].b) cur.c[--i] = 0;
        if (i == 0) break;
        ++cur.c[i - 1];
    }
    return out;
}

bool stable_under_edges(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges, const GoodSubobject& g) {
    for (const auto& e : edges) {
        // Top included block of k1 is c-1; it reaches block c-1-l of k2.
        const long need = std::min(g.c[e.from] - e.alignment, spec.summands[e.to].b);
        if (need > g.c[e.to]) return false;
    }
    return true;
}

std::vector<GoodSubobject> enumerate_good_subobjects(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges) {
    auto all = enumerate_good_subobjects(spec);
    std::erase_if(all, [&](const GoodSubobject& g) { return !stable_under_edges(spec, edges, g); });
    return all;
}

Subspace good_subspace(const ModuleSpec& spec, const GoodSubobject& g) {
    const std::size_t n = static_cast<std::size_t>(spec.dim());
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
        const long h = spec.family_of(spec.summands[i]).h;
        const long off = spec.offset(i);
        for (long t = 0; t < g.c[i] * h; ++t) vs.push_back(unit_vector(n, static_cast<std::size_t>(off + t)));
    }
    return Subspace::span(n, std::move(vs));
}

Rat alpha_ratio(const ModuleSpec& spec, const GoodSubobject& E, const GoodSubobject& Eprime, const Subspace& Dprime) {
    const long dE = dim(spec, E), dEp = dim(spec, Eprime);
    if (dE == dEp) throw std::invalid_argument("alpha_ratio: dimensions agree");
    const long mE = static_cast<long>(intersection_dim(good_subspace(spec, E), Dprime));
    const long mEp = static_cast<long>(intersection_dim(good_subspace(spec, Eprime), Dprime));
    return make_rat(mEp - mE, dEp - dE);
}

std::size_t GoodLattice::index_of(const GoodSubobject& g) const {
    auto it = std::find(members.begin(), members.end(), g);
    if (it == members.end()) throw std::out_of_range("not a member of the good lattice");
    return static_cast<std::size_t>(it - members.begin());
}

GoodLattice good_lattice(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges, const Subspace& Dprime) {
    GoodLattice L;
    L.members = enumerate_good_subobjects(spec, edges);
    for (const auto& g : L.members) {
        L.dims.push_back(dim(spec, g));
        L.meets.push_back(static_cast<long>(intersection_dim(good_subspace(spec, g), Dprime)));
    }
    return L;
}

std::vector<long> GoodFlag::interior_dims() const {
    if (dims.size() < 2) return {};
    return {dims.begin() + 1, dims.end() - 1};
}

GoodFlag greedy_flag(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges, const Subspace& Dprime,
                     std::mt19937_64* tie_rng) {
    const GoodLattice L = good_lattice(spec, edges, Dprime);
    const GoodSubobject top = whole(spec);
    std::size_t cur = L.index_of(GoodSubobject{std::vector<long>(spec.summands.size(), 0)});
    GoodFlag flag;
    flag.chain.push_back(L.members[cur]);
    flag.dims.push_back(L.dims[cur]);
    flag.meets.push_back(L.meets[cur]);
    while (L.members[cur] != top) {
        std::vector<std::size_t> ties;
        Rat best_alpha;
        long best_dim = 0;
        for (std::size_t j = 0; j < L.members.size(); ++j) {
            if (j == cur || !contains(L.members[j], L.members[cur])) continue;
            Rat a(L.meets[j] - L.meets[cur], L.dims[j] - L.dims[cur]);
            a.canonicalize();
            if (ties.empty() || a > best_alpha || (a == best_alpha && L.dims[j] < best_dim)) {
                ties.assign(1, j);
                best_alpha = a;
                best_dim = L.dims[j];
            } else if (a == best_alpha && L.dims[j] == best_dim) {
                ties.push_back(j);
            }
        }
        std::size_t pick = ties.front();
        if (tie_rng && ties.size() > 1) {
            std::uniform_int_distribution<std::size_t> d(0, ties.size() - 1);
            pick = ties[d(*tie_rng)];
        }
        flag.alphas.push_back(best_alpha);
        cur = pick;
        flag.chain.push_back(L.members[cur]);
        flag.dims.push_back(L.dims[cur]);
        flag.meets.push_back(L.meets[cur]);
    }
    return flag;
}

std::vector<long> omega_from_flag(const GoodFlag& flag) {
    std::vector<long> out;
    for (std::size_t i = 1; i < flag.chain.size(); ++i) {
        const long end = flag.dims[i];
        const long c = flag.meets[i] - flag.meets[i - 1];
        for (long j = end - c + 1; j <= end; ++j) out.push_back(j);
    }
    return out;
}

FlagPair special_pair_from_flag(const GoodFlag& flag, long total_dim, long dprime_dim) {
    FlagPair out;
    if (dprime_dim == 0) {
        out.vacuous = true;
        return out;
    }
    // F1: largest chain member inside D'. F2: smallest chain member containing D'.
    for (std::size_t i = 0; i < flag.chain.size(); ++i)
        if (flag.meets[i] == flag.dims[i]) out.f1_index = i;
    out.f2_index = flag.chain.size() - 1;
    for (std::size_t i = 0; i < flag.chain.size(); ++i)
        if (flag.meets[i] == dprime_dim) {
            out.f2_index = i;
            break;
        }
    auto& p = out.pair;
    p.a.push_back(Rat(flag.dims[out.f1_index]));
    for (std::size_t i = out.f1_index + 1; i <= out.f2_index; ++i) {
        p.a.push_back(Rat(flag.dims[i] - flag.dims[i - 1]));
        p.c.push_back(Rat(flag.meets[i] - flag.meets[i - 1]));
    }
    p.a.push_back(Rat(total_dim - flag.dims[out.f2_index]));
    if (auto chk = is_special(p); !chk.ok)
        throw std::logic_error("internal consistency: flag pair is not special, clause " + chk.clause + " (" +
                               chk.detail + ")");
    return out;
}

FlagConditions check_flag_conditions(const ModuleSpec& spec, const ConcreteRealization& real, const GoodFlag& flag) {
    FlagConditions out;
    const std::size_t steps = flag.alphas.size();
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        const Rat& x = flag.alphas[i];
        const Rat& y = flag.alphas[i + 1];
        const long jx = flag.dims[i + 1] - flag.dims[i];
        const long jy = flag.dims[i + 2] - flag.dims[i + 1];
        if (y > x || (y == x && jy < jx)) {
            out.a = false;
            out.detail += "(a) fails at step " + std::to_string(i + 2) + "; ";
        }
    }
    long top_level = 0;
    for (const auto& lab : real.labels) top_level = std::max(top_level, lab.level);
    for (std::size_t i = 1; i < flag.chain.size(); ++i) {
        const Subspace Ei = good_subspace(spec, flag.chain[i]);
        const Subspace Eprev = good_subspace(spec, flag.chain[i - 1]);
        if (!Eprev.contains(Ei.image(real.nmat))) {
            out.b = false;
            out.detail += "(b) fails at E_" + std::to_string(i) + "; ";
        }
        bool found = false;
        for (std::size_t f = 0; f < real.seeds.size() && !found; ++f) {
            Int pw = 1;
            for (long j = 0; j <= top_level && !found; ++j, pw *= real.p) {
                Matrix shifted = real.phi - Matrix::identity(real.dim).scaled(real.seeds[f] * Rat(pw));
                found = Eprev.contains(Ei.image(shifted));
            }
        }
        if (!found) {
            out.c = false;
            out.detail += "(c) fails at E_" + std::to_string(i) + "; ";
        }
    }
    return out;
}

std::size_t default_subobject_cap() {
    if (const char* env = std::getenv("FILTADM_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 8;
}

std::vector<std::vector<std::size_t>> eigen_classes(const ConcreteRealization& real) {
    std::map<std::pair<std::size_t, long>, std::vector<std::size_t>> m;
    for (std::size_t i = 0; i < real.labels.size(); ++i) m[{real.labels[i].family, real.labels[i].level}].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, idx] : m) out.push_back(std::move(idx));
    return out;
}

std::vector<Subspace> sum_closure(std::vector<Subspace> generators, std::size_t ambient, std::size_t limit) {
    std::set<Subspace> all(generators.begin(), generators.end());
    all.insert(Subspace(ambient));
    std::vector<Subspace> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const auto& a : frontier)
            for (const auto& g : generators) {
                Subspace s = a + g;
                if (all.insert(s).second) next.push_back(std::move(s));
            }
        if (all.size() > limit) throw CapExceeded("subobject lattice exceeds " + std::to_string(limit) + " members");
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

namespace {

using Signature = std::vector<long>;

Signature signature_of(const Subspace& s, const std::vector<Subspace>& probes) {
    Signature sig{static_cast<long>(s.dim())};
    for (const auto& p : probes) sig.push_back(static_cast<long>(intersection_dim(s, p)));
    return sig;
}

std::vector<Subspace> generated(const ConcreteRealization& real, const std::vector<std::vector<std::size_t>>& classes,
                                const std::vector<Matrix>& ops, std::mt19937_64* rng) {
    std::set<Subspace> gens;
    for (const auto& cls : classes) {
        const std::size_t m = cls.size();
        for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
            Vec v(real.dim);
            for (std::size_t t = 0; t < m; ++t) {
                if (!(mask & (1UL << t))) continue;
                if (rng) {
                    std::uniform_int_distribution<long> num(1, 9), den(1, 4), sign(0, 1);
                    v[cls[t]] = make_rat(sign(*rng) ? num(*rng) : -num(*rng), den(*rng));
                } else {
                    v[cls[t]] = 1;
                }
            }
            gens.insert(stable_closure(Subspace::span(real.dim, {v}), ops));
        }
    }
    return {gens.begin(), gens.end()};
}

}  // namespace

ConcreteEnumeration enumerate_concrete_subobjects(const ConcreteRealization& real, const ModuleSpec& spec,
                                                  std::size_t cap, std::uint64_t seed, int rounds) {
    if (real.dim > cap)
        throw CapExceeded("concrete enumeration capped at d+1=" + std::to_string(cap) + ", got " +
                          std::to_string(real.dim));
    const std::vector<Matrix> ops{real.phi, real.nmat};
    const auto classes = eigen_classes(real);

    ConcreteEnumeration out;
    auto gens = generated(real, classes, ops, nullptr);
    for (const auto& c : classes) out.pattern_vectors += (1UL << c.size()) - 1;
    out.subobjects = sum_closure(gens, real.dim);

    // Probes for the relative-position class: all coordinate good subspaces and eigenspaces.
    std::vector<Subspace> probes;
    for (const auto& g : enumerate_good_subobjects(spec)) probes.push_back(good_subspace(spec, g));
    for (const auto& cls : classes) {
        std::vector<Vec> vs;
        for (auto i : cls) vs.push_back(unit_vector(real.dim, i));
        probes.push_back(Subspace::span(real.dim, std::move(vs)));
    }
    std::set<Signature> known;
    for (const auto& s : out.subobjects) known.insert(signature_of(s, probes));

    std::mt19937_64 rng(seed);
    for (int r = 0; r < rounds; ++r) {
        auto rgens = generated(real, classes, ops, &rng);
        for (const auto& s : sum_closure(rgens, real.dim))
            if (!known.count(signature_of(s, probes))) {
                out.cross_check_ok = false;
                out.cross_check_detail = "round " + std::to_string(r + 1) + " produced an unseen class of dim " +
                                         std::to_string(s.dim());
            }
        ++out.random_rounds;
    }
    return out;
}

}  // namespace filtadm
