#include "filtadm/emerton.hpp"

#include "filtadm/ordering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace filtadm {

const char* to_string(EmertonStatus s) {
    switch (s) {
        case EmertonStatus::pass: return "pass";
        case EmertonStatus::fail_unitarity: return "fail_unitarity";
        case EmertonStatus::fail_prefix: return "fail_prefix";
    }
    return "?";
}

std::vector<GammaBlock> gamma_blocks(const ModuleSpec& spec) {
    std::vector<GammaBlock> out;
    const Rat kl(spec.config.degKL);
    for (std::size_t i = 0; i < spec.summands.size(); ++i) {
        const auto& s = spec.summands[i];
        const auto& f = spec.family_of(s);
        for (long j = 0; j < s.b; ++j)
            out.push_back({i, j, f.h, block_tN(spec, f, s.l + s.b - 1 - j) / kl});
    }
    return out;
}

namespace {

void shuffles(const std::vector<std::vector<std::size_t>>& chains, std::vector<std::size_t>& pos,
              std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    bool done = true;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        if (pos[c] == chains[c].size()) continue;
        done = false;
        cur.push_back(chains[c][pos[c]++]);
        shuffles(chains, pos, cur, out);
        --pos[c];
        cur.pop_back();
    }
    if (done) out.push_back(cur);
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const ModuleSpec& input, bool dedup, long max_blocks) {
    const ModuleSpec spec = canonical(input);
    const auto blocks = gamma_blocks(spec);
    if (static_cast<long>(blocks.size()) > max_blocks)
        throw std::length_error("candidate enumeration capped at " + std::to_string(max_blocks) + " blocks, got " +
                                std::to_string(blocks.size()));
    std::vector<std::vector<std::size_t>> chains(spec.summands.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) chains[blocks[k].summand].push_back(k);

    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> pos(chains.size(), 0), cur;
    shuffles(chains, pos, cur, orders);

    const std::size_t n = blocks.size();
    std::vector<Candidate> out;
    std::set<std::vector<std::vector<std::size_t>>> seen;
    for (const auto& order : orders)
        for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
            Candidate c;
            c.order = order;
            for (std::size_t g = 0; g + 1 < n; ++g)
                if (mask & (1UL << g)) c.group_ends.push_back(g + 1);
            c.group_ends.push_back(n);
            std::vector<std::vector<std::size_t>> key;
            std::size_t start = 0;
            for (auto end : c.group_ends) {
                long m = 0;
                Rat a = 0;
                std::vector<std::size_t> members(order.begin() + start, order.begin() + end);
                for (auto k : members) {
                    m += blocks[k].size;
                    a += blocks[k].valuation;
                }
                std::sort(members.begin(), members.end());
                key.push_back(std::move(members));
                c.beta.push_back(m);
                c.A.push_back(a);
                start = end;
            }
            if (dedup && !seen.insert(key).second) continue;
            out.push_back(std::move(c));
        }
    return out;
}

EmertonVerdict check_condition_iv(const ModuleSpec& input, const WeightProfile& profile) {
    require_valid(input, profile);
    const ModuleSpec spec = canonical(input);
    EmertonVerdict v;
    // Column sums over sigma, without the [K:L] factor.
    const std::size_t n = static_cast<std::size_t>(spec.dim());
    std::vector<Rat> w(n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& row : profile.weights) w[j] += Rat(row[j]);
    Rat wsum = 0;
    for (const auto& x : w) wsum += x;
    v.hodge_total = wsum * Rat(spec.config.degKL);
    v.newton_total = tN(spec);
    if (v.hodge_total != v.newton_total) {
        v.status = EmertonStatus::fail_unitarity;
        return v;
    }
    const auto candidates = enumerate_candidates(spec);
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const auto& c = candidates[ci];
        Rat acc = 0;
        std::size_t idx = 0;
        std::optional<Rat> lowest;
        for (std::size_t g = 0; g + 1 < c.beta.size(); ++g) {
            Rat wg = 0;
            for (long t = 0; t < c.beta[g]; ++t) wg += w[idx++];
            acc += c.A[g] - wg;
            if (!lowest || acc < *lowest) lowest = acc;
            if (acc < 0 && !v.candidate) {
                v.status = EmertonStatus::fail_prefix;
                v.candidate = ci;
                v.prefix = g + 1;
            }
        }
        v.min_slack.push_back(lowest.value_or(Rat(0)));
        ++v.candidates_checked;
    }
    return v;
}

}  // namespace filtadm
