#include "filtadm/ordering.hpp"

#include <algorithm>
#include <map>

namespace filtadm {

Ordering group_and_order(const ModuleSpec& spec) {
    std::map<std::string, std::vector<std::size_t>> by_family;
    for (std::size_t i = 0; i < spec.summands.size(); ++i) by_family[spec.summands[i].family].push_back(i);

    std::vector<TypeGroup> groups;
    for (auto& [fam, idx] : by_family) {
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const auto& x = spec.summands[a];
            const auto& y = spec.summands[b];
            return std::pair(x.l, x.b) < std::pair(y.l, y.b);
        });
        TypeGroup g{fam, idx, 0, 0, 0};
        for (auto i : idx) {
            g.dim += spec.summand_dim(i);
            g.tN += summand_tN(spec, i);
        }
        g.avg_slope = g.tN / Rat(g.dim);
        groups.push_back(std::move(g));
    }
    // by_family iterates in id order, so a stable sort breaks slope ties by family id.
    std::stable_sort(groups.begin(), groups.end(),
                     [](const TypeGroup& a, const TypeGroup& b) { return a.avg_slope < b.avg_slope; });

    Ordering out;
    for (const auto& g : groups) out.permutation.insert(out.permutation.end(), g.members.begin(), g.members.end());
    out.groups = std::move(groups);
    return out;
}

ModuleSpec reorder(const ModuleSpec& spec, const std::vector<std::size_t>& permutation) {
    ModuleSpec out = spec;
    out.summands.clear();
    for (auto i : permutation) out.summands.push_back(spec.summands.at(i));
    return out;
}

ModuleSpec canonical(const ModuleSpec& spec) { return reorder(spec, group_and_order(spec).permutation); }

PrecedeCheck check_not_precede(const ModuleSpec& spec) {
    const auto& s = spec.summands;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i].family != s[j].family) continue;
            // t = l_i - l_j - b_j + b_i is forced; it must be positive with t + b_j > b_i.
            long t = s[i].l - s[j].l - s[j].b + s[i].b;
            if (t > 0 && t + s[j].b > s[i].b) return {false, std::pair(i + 1, j + 1)};
        }
    return {};
}

}  // namespace filtadm
