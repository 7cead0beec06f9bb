#pragma once

#include "filtadm/model.hpp"

#include <optional>

namespace filtadm {

struct GammaBlock {
    std::size_t summand = 0;  // index in canonical order
    long twist_index = 0;     // j; block D_{i,0}(b_i - 1 - j)
    long size = 0;
    Rat valuation;            // t_N of the block divided by [K:L]
};

struct Candidate {
    std::vector<std::size_t> order;  // indices into the gamma block list
    std::vector<std::size_t> group_ends;  // exclusive end positions in order
    std::vector<long> beta;           // group dimensions
    std::vector<Rat> A;               // group valuation sums
};

// Blocks in canonical summand order; within a summand, by descending twist.
std::vector<GammaBlock> gamma_blocks(const ModuleSpec& canonical_spec);

// Shuffles preserving within-summand order, times contiguous cuts.
// Throws std::length_error when there are more than max_blocks blocks.
std::vector<Candidate> enumerate_candidates(const ModuleSpec& spec, bool dedup = true, long max_blocks = 10);

enum class EmertonStatus { pass, fail_unitarity, fail_prefix };

struct EmertonVerdict {
    EmertonStatus status = EmertonStatus::pass;
    std::optional<std::size_t> candidate;  // index of the first failing candidate
    std::optional<std::size_t> prefix;     // number of groups in the failing prefix
    Rat hodge_total;                       // [K:L] * sum of all weights
    Rat newton_total;
    std::size_t candidates_checked = 0;
    std::vector<Rat> min_slack;  // per candidate, minimal prefix slack (in valuation units)
    bool passed() const { return status == EmertonStatus::pass; }
};

const char* to_string(EmertonStatus s);

EmertonVerdict check_condition_iv(const ModuleSpec& spec, const WeightProfile& profile);

}  // namespace filtadm
