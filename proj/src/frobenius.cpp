#include "filtadm/frobenius.hpp"

#include <set>

namespace filtadm {

long hom_dim(const Summand& s1, const Summand& s2) {
    if (s1.family != s2.family) return 0;
    const long l = s2.l - s1.l;
    if (l < 0) return 0;
    const long r1 = s1.b - 1, r2 = s2.b - 1;
    return (l <= r1 && r1 <= l + r2) ? 1 : 0;
}

std::vector<ModificationEdge> build_modified_frobenius(const ModuleSpec& spec) {
    std::vector<ModificationEdge> edges;
    const auto& s = spec.summands;
    for (std::size_t k1 = 0; k1 < s.size(); ++k1)
        for (std::size_t k2 = k1 + 1; k2 < s.size(); ++k2) {
            if (s[k2].family != s[k1].family || hom_dim(s[k1], s[k2]) != 1) continue;
            const long l = s[k2].l - s[k1].l;
            if (l == 0 || s[k1].b - 1 == l + s[k2].b - 1) {
                edges.push_back({k1, k2, l});
                break;
            }
        }
    return edges;
}

std::vector<LevelLink> as_links(const std::vector<ModificationEdge>& edges) {
    std::vector<LevelLink> out;
    for (const auto& e : edges) out.push_back({e.from, e.to, e.alignment});
    return out;
}

namespace {

std::vector<Rat> family_seeds(const ModuleSpec& spec) {
    std::vector<Rat> seeds;
    if (spec.families.size() == 1) return {Rat(1)};
    long q = 2;
    for (std::size_t f = 0; f < spec.families.size(); ++f) {
        do ++q;
        while (!is_prime(q) || q == spec.config.p);
        seeds.push_back(Rat(q));
    }
    return seeds;
}

}  // namespace

ConcreteRealization realize_matrices(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges) {
    require_valid(spec);
    for (const auto& f : spec.families)
        if (f.h != 1) throw RealizationError("concrete layer requires h=1");

    ConcreteRealization r;
    r.p = spec.config.p;
    r.dim = static_cast<std::size_t>(spec.dim());
    r.seeds = family_seeds(spec);
    for (std::size_t i = 0; i < spec.summands.size(); ++i) {
        const auto& s = spec.summands[i];
        for (long k = 0; k < s.b; ++k) r.labels.push_back({i, k, spec.family_index(s.family), s.l + k});
    }
    r.phi = Matrix(r.dim, r.dim);
    r.nmat = Matrix(r.dim, r.dim);
    Int pw;
    for (std::size_t col = 0; col < r.dim; ++col) {
        const auto& lab = r.labels[col];
        mpz_pow_ui(pw.get_mpz_t(), Int(r.p).get_mpz_t(), static_cast<unsigned long>(lab.level));
        r.phi(col, col) = r.seeds[lab.family] * Rat(pw);
        if (lab.block > 0) r.nmat(col - 1, col) = 1;
    }
    for (const auto& e : edges) {
        const long off1 = spec.offset(e.from), off2 = spec.offset(e.to);
        for (long k = e.alignment; k < spec.summands[e.from].b; ++k) {
            const long tk = k - e.alignment;
            if (tk >= spec.summands[e.to].b) continue;
            // phi of the aligned image block; it carries the same eigenvalue.
            const std::size_t src = static_cast<std::size_t>(off1 + k), dst = static_cast<std::size_t>(off2 + tk);
            r.phi(dst, src) += r.phi(dst, dst);
        }
    }
    return r;
}

}  // namespace filtadm
