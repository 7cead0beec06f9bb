#include "filtadm/slope_conditions.hpp"

#include "filtadm/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace filtadm {

const char* to_string(ChainStatus s) {
    switch (s) {
        case ChainStatus::pass: return "pass";
        case ChainStatus::fail_prefix: return "fail_prefix";
        case ChainStatus::fail_equality: return "fail_equality";
    }
    return "?";
}

namespace {

struct Block {
    long dim;
    Rat tN;
};

std::vector<Block> blocks_of(const ModuleSpec& spec) {
    std::vector<Block> out;
    for (const auto& s : spec.summands) {
        const auto& f = spec.family_of(s);
        for (long k = 0; k < s.b; ++k) out.push_back({f.h, block_tN(spec, f, s.l + k)});
    }
    return out;
}

// Evaluates the chain for one sequence of (dim, t_N) pieces.
ChainVerdict evaluate(const std::vector<Block>& pieces, const std::vector<Rat>& hodge) {
    ChainVerdict v;
    long dim = 0;
    Rat newton = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        dim += pieces[k].dim;
        newton += pieces[k].tN;
        if (k + 1 == pieces.size()) break;
        PrefixSlack ps{k + 1, dim, hodge[dim], newton};
        if (ps.hodge > ps.newton && !v.failed_prefix) v.failed_prefix = k + 1;
        v.prefixes.push_back(std::move(ps));
    }
    v.hodge_total = hodge.back();
    v.newton_total = newton;
    if (v.failed_prefix) v.status = ChainStatus::fail_prefix;
    else if (v.hodge_total != v.newton_total) v.status = ChainStatus::fail_equality;
    return v;
}

}  // namespace

ChainVerdict check_condition_iii(const ModuleSpec& input, const WeightProfile& profile) {
    require_valid(input, profile);
    const ModuleSpec spec = canonical(input);
    const auto hodge = hodge_prefix(spec, profile);
    std::vector<Block> pieces;
    for (std::size_t i = 0; i < spec.summands.size(); ++i) pieces.push_back({spec.summand_dim(i), summand_tN(spec, i)});
    return evaluate(pieces, hodge);
}

ChainVerdict check_all_block_permutations_exhaustive(const ModuleSpec& input, const WeightProfile& profile) {
    require_valid(input, profile);
    const ModuleSpec spec = canonical(input);
    const auto hodge = hodge_prefix(spec, profile);
    const auto blocks = blocks_of(spec);
    std::vector<std::size_t> perm(blocks.size());
    std::iota(perm.begin(), perm.end(), 0);
    ChainVerdict first;
    bool have_first = false;
    do {
        std::vector<Block> seq;
        for (auto i : perm) seq.push_back(blocks[i]);
        auto v = evaluate(seq, hodge);
        if (!have_first) {
            first = v;
            have_first = true;
        }
        if (!v.passed()) return v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return first;
}

ChainVerdict check_all_block_permutations_bound(const ModuleSpec& input, const WeightProfile& profile) {
    require_valid(input, profile);
    const ModuleSpec spec = canonical(input);
    const auto hodge = hodge_prefix(spec, profile);
    const auto blocks = blocks_of(spec);
    const long total = spec.dim();
    // Every block subset is a prefix of some ordering, so the binding value at
    // each dimension is the minimal t_N over subsets of that dimension.
    std::vector<std::optional<Rat>> best(total + 1);
    best[0] = Rat(0);
    for (const auto& b : blocks)
        for (long m = total; m >= b.dim; --m)
            if (best[m - b.dim]) {
                Rat cand = *best[m - b.dim] + b.tN;
                if (!best[m] || cand < *best[m]) best[m] = cand;
            }
    ChainVerdict v;
    for (long m = 1; m < total; ++m) {
        if (!best[m]) continue;
        PrefixSlack ps{v.prefixes.size() + 1, m, hodge[m], *best[m]};
        if (ps.hodge > ps.newton && !v.failed_prefix) v.failed_prefix = ps.prefix;
        v.prefixes.push_back(std::move(ps));
    }
    v.hodge_total = hodge.back();
    v.newton_total = tN(spec);
    if (v.failed_prefix) v.status = ChainStatus::fail_prefix;
    else if (v.hodge_total != v.newton_total) v.status = ChainStatus::fail_equality;
    return v;
}

ChainVerdict check_all_block_permutations(const ModuleSpec& spec, const WeightProfile& profile) {
    if (spec.block_count() <= 8) return check_all_block_permutations_exhaustive(spec, profile);
    return check_all_block_permutations_bound(spec, profile);
}

}  // namespace filtadm
