#pragma once

#include "filtadm/model.hpp"

#include <optional>
#include <utility>

namespace filtadm {

struct TypeGroup {
    std::string family;
    std::vector<std::size_t> members;  // original summand indices, in canonical order
    long dim = 0;
    Rat tN;
    Rat avg_slope;
};

struct Ordering {
    std::vector<TypeGroup> groups;
    std::vector<std::size_t> permutation;  // permutation[k] = original index of the k-th canonical summand
};

Ordering group_and_order(const ModuleSpec& spec);

// Spec with summands rearranged into canonical order.
ModuleSpec canonical(const ModuleSpec& spec);
ModuleSpec reorder(const ModuleSpec& spec, const std::vector<std::size_t>& permutation);

struct PrecedeCheck {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // 1-based positions (i, j), i < j
};

// Fails iff some i < j in one family satisfy l_i = l_j + (t + b_j - b_i) for a t > 0 with t + b_j > b_i.
PrecedeCheck check_not_precede(const ModuleSpec& spec);

}  // namespace filtadm
