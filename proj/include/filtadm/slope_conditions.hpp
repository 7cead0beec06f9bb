#pragma once

#include "filtadm/model.hpp"

#include <optional>

namespace filtadm {

struct PrefixSlack {
    std::size_t prefix = 0;  // number of summands (or blocks) taken
    long dim = 0;
    Rat hodge;   // [K:L] * sum of the lowest dim weights over all sigma
    Rat newton;  // t_N of the prefix
    Rat slack() const { return newton - hodge; }
};

enum class ChainStatus { pass, fail_prefix, fail_equality };

struct ChainVerdict {
    ChainStatus status = ChainStatus::pass;
    std::optional<std::size_t> failed_prefix;
    std::vector<PrefixSlack> prefixes;  // proper prefixes
    Rat hodge_total;
    Rat newton_total;
    bool passed() const { return status == ChainStatus::pass; }
};

const char* to_string(ChainStatus s);

// Inequality chain over the canonical summand order (recomputed internally).
ChainVerdict check_condition_iii(const ModuleSpec& spec, const WeightProfile& profile);

// Same chain over every ordering of the individual blocks. Enumerates orderings
// when there are at most 8 blocks, otherwise uses the minimal-subset bound.
ChainVerdict check_all_block_permutations(const ModuleSpec& spec, const WeightProfile& profile);
ChainVerdict check_all_block_permutations_exhaustive(const ModuleSpec& spec, const WeightProfile& profile);
ChainVerdict check_all_block_permutations_bound(const ModuleSpec& spec, const WeightProfile& profile);

}  // namespace filtadm
