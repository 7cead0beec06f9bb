#include "filtadm/ordering.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace filtadm;
using namespace fixtures;

namespace {

// Brute force over positive twists instead of solving for l.
bool precede_violated_oracle(const ModuleSpec& s) {
    for (std::size_t i = 0; i < s.summands.size(); ++i)
        for (std::size_t j = i + 1; j < s.summands.size(); ++j) {
            const auto &a = s.summands[i], &b = s.summands[j];
            if (a.family != b.family) continue;
            for (long l = 1; l <= 20; ++l)
                if (l + b.b > a.b && a.l == b.l + (l + b.b - a.b)) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("canonical order on the fixtures") {
    const auto swapped = single_family({{0, 2}, {0, 1}});
    const auto ord = group_and_order(swapped);
    CHECK(ord.permutation == std::vector<std::size_t>{1, 0});
    CHECK(canonical(swapped).summands == ex1a().summands);

    ModuleSpec two;
    two.config = {2, 1, 1, 1, 1};
    two.families = {{"A", 1, Rat(1)}, {"B", 1, Rat(0)}};
    two.summands = {{"A", 0, 1}, {"B", 0, 1}};
    const auto o2 = group_and_order(two);
    REQUIRE(o2.groups.size() == 2);
    CHECK(o2.groups[0].family == "B");
    CHECK(o2.groups[0].avg_slope == 0);
    CHECK(o2.groups[1].avg_slope == 1);
    CHECK(o2.permutation == std::vector<std::size_t>{1, 0});

    const auto one = single_family({{0, 2}});
    CHECK(group_and_order(one).permutation == std::vector<std::size_t>{0});
}

TEST_CASE("slope ties between groups fall back to the family id") {
    ModuleSpec s;
    s.config = {2, 1, 1, 1, 1};
    s.families = {{"Z", 1, Rat(0)}, {"A", 1, Rat(0)}};
    s.summands = {{"Z", 0, 1}, {"A", 0, 1}};
    const auto ord = group_and_order(s);
    CHECK(ord.groups[0].family == "A");
}

TEST_CASE("not-precede check") {
    CHECK(check_not_precede(ex1b()).ok);
    const auto reversed = single_family({{1, 1}, {0, 2}});
    CHECK(check_not_precede(reversed).ok);
    CHECK_FALSE(precede_violated_oracle(reversed));

    const auto bad = single_family({{1, 2}, {0, 2}});
    const auto chk = check_not_precede(bad);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.witness);
    CHECK(*chk.witness == std::pair<std::size_t, std::size_t>{1, 2});

    ModuleSpec mixed;
    mixed.config = {2, 1, 1, 1, 1};
    mixed.families = {{"A", 1, Rat(0)}, {"B", 1, Rat(0)}};
    mixed.summands = {{"A", 3, 1}, {"B", 0, 2}};
    CHECK(check_not_precede(mixed).ok);
}

TEST_CASE("not-precede agrees with brute force and holds after ordering") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 500; ++t) {
        auto s = random_spec(rng, {10, 4, 2, false});
        std::vector<std::size_t> perm(s.summands.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto shuffled = reorder(s, perm);
        CHECK(check_not_precede(shuffled).ok == !precede_violated_oracle(shuffled));
        const auto canon = canonical(shuffled);
        CHECK(check_not_precede(canon).ok);
        // Canonical output does not depend on the input order.
        CHECK(canon.summands == canonical(s).summands);
        CHECK(group_and_order(shuffled).permutation.size() == s.summands.size());
    }
}

TEST_CASE("within a group the order is by (l, b) and groups by average slope") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 300; ++t) {
        const auto s = random_spec(rng, {10, 4, 3, true});
        const auto ord = group_and_order(s);
        std::vector<bool> seen(s.summands.size(), false);
        std::size_t pos = 0;
        for (std::size_t g = 0; g < ord.groups.size(); ++g) {
            const auto& grp = ord.groups[g];
            if (g > 0) CHECK(ord.groups[g - 1].avg_slope <= grp.avg_slope);
            CHECK(grp.avg_slope == grp.tN / Rat(grp.dim));
            for (std::size_t k = 0; k < grp.members.size(); ++k) {
                const auto& m = s.summands[grp.members[k]];
                CHECK(m.family == grp.family);
                CHECK(ord.permutation[pos++] == grp.members[k]);
                CHECK_FALSE(seen[grp.members[k]]);
                seen[grp.members[k]] = true;
                if (k > 0) {
                    const auto& prev = s.summands[grp.members[k - 1]];
                    CHECK(std::make_pair(prev.l, prev.b) <= std::make_pair(m.l, m.b));
                }
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
}
