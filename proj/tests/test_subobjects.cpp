#include "filtadm/frobenius.hpp"
#include "filtadm/ordering.hpp"
#include "filtadm/special_pairs.hpp"
#include "filtadm/subobjects.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace filtadm;
using namespace fixtures;

namespace {

Subspace span_of(std::size_t n, std::vector<Vec> vs) { return Subspace::span(n, std::move(vs)); }

GoodSubobject c_of(std::vector<long> c) { return GoodSubobject{std::move(c)}; }

// A random stable subspace: the hull of a few random vectors, sometimes inside one eigenspace.
Subspace random_stable(std::mt19937_64& rng, const ConcreteRealization& real) {
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> count(0, 2), mode(0, 2);
    const auto classes = eigen_classes(real);
    std::vector<Vec> vs;
    for (int k = count(rng); k > 0; --k) {
        Vec v(real.dim);
        if (mode(rng) == 0) {
            for (auto& x : v) x = coef(rng);
        } else {
            const auto& cls = classes[std::uniform_int_distribution<std::size_t>(0, classes.size() - 1)(rng)];
            for (auto i : cls) v[i] = coef(rng);
        }
        vs.push_back(v);
    }
    const std::vector<Matrix> ops{real.phi, real.nmat};
    return stable_closure(Subspace::span(real.dim, vs), ops);
}

}  // namespace

TEST_CASE("good subobject counts") {
    CHECK(enumerate_good_subobjects(ex1a()).size() == 6);
    CHECK(enumerate_good_subobjects(ex2()).size() == 9);
    CHECK(enumerate_good_subobjects(single_family({{0, 1}}, 2, 2)).size() == 2);
    // Under the modified Frobenius Ke1 is no longer a subobject.
    const auto stable = enumerate_good_subobjects(ex1a(), build_modified_frobenius(ex1a()));
    CHECK(stable.size() == 5);
    CHECK(std::find(stable.begin(), stable.end(), c_of({1, 0})) == stable.end());
}

TEST_CASE("edge-aware good subobjects are exactly the stable ones") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 150; ++t) {
        const auto s = canonical(random_spec(rng, {7, 4, 2, false}));
        const auto edges = build_modified_frobenius(s);
        const auto real = realize_matrices(s, edges);
        const std::vector<Matrix> ops{real.phi, real.nmat};
        const auto stable = enumerate_good_subobjects(s, edges);
        for (const auto& g : enumerate_good_subobjects(s)) {
            const bool listed = std::find(stable.begin(), stable.end(), g) != stable.end();
            CHECK(listed == is_stable(good_subspace(s, g), ops));
        }
    }
}

TEST_CASE("alpha ratios") {
    const auto s = ex2();
    const Subspace D = span_of(4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    CHECK(alpha_ratio(s, c_of({0, 0}), c_of({1, 0}), D) == 1);
    CHECK(alpha_ratio(s, c_of({1, 0}), c_of({2, 0}), D) == 0);
    CHECK(alpha_ratio(s, c_of({1, 0}), c_of({2, 1}), D) == make_rat(1, 2));
    const Subspace zero(4);
    for (const auto& g : enumerate_good_subobjects(s))
        if (dim(s, g) > 0) CHECK(alpha_ratio(s, c_of({0, 0}), g, zero) == 0);
    CHECK_THROWS_AS(alpha_ratio(s, c_of({1, 0}), c_of({0, 1}), D), std::invalid_argument);
}

TEST_CASE("greedy flag on the fixtures") {
    const auto s = ex2();
    const Subspace D = span_of(4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    const auto flag = greedy_flag(s, {}, D);
    CHECK(flag.interior_dims() == std::vector<long>{1, 3});
    REQUIRE(flag.chain.size() == 4);
    CHECK(flag.chain[1] == c_of({1, 0}));
    CHECK(flag.chain[2] == c_of({2, 1}));
    CHECK(flag.alphas == std::vector<Rat>{1, make_rat(1, 2), 0});
    CHECK(omega_from_flag(flag) == std::vector<long>{1, 3});
    const auto fp = special_pair_from_flag(flag, 4, 2);
    CHECK_FALSE(fp.vacuous);
    CHECK(fp.pair.a == std::vector<Rat>{1, 2, 1});
    CHECK(fp.pair.c == std::vector<Rat>{1});

    const auto s1 = ex1a();
    const auto edges = build_modified_frobenius(s1);
    const auto f1 = greedy_flag(s1, edges, span_of(3, {{0, 1, 0}}));
    CHECK(f1.interior_dims() == std::vector<long>{1, 2});
    CHECK(f1.chain[1] == c_of({0, 1}));

    // D' = 0 and D' = D.
    const auto empty = greedy_flag(s, {}, Subspace(4));
    CHECK(omega_from_flag(empty).empty());
    CHECK(special_pair_from_flag(empty, 4, 0).vacuous);
    const auto full = greedy_flag(s, {}, Subspace::whole(4));
    CHECK(omega_from_flag(full) == std::vector<long>{1, 2, 3, 4});
    const auto real = realize_matrices(s, {});
    CHECK(check_flag_conditions(s, real, full).all());

    // A good D' gives k = 0 and the pair (dim D', dim D - dim D').
    const auto good = greedy_flag(s, {}, good_subspace(s, c_of({1, 1})));
    const auto gp = special_pair_from_flag(good, 4, 2);
    CHECK(gp.pair.k() == 0);
    CHECK(gp.pair.a == std::vector<Rat>{2, 2});
}

TEST_CASE("greedy flag invariants on random inputs") {
    std::mt19937_64 rng(62);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
        const auto s = canonical(random_spec(rng, {6, 3, 2, false}));
        const auto edges = build_modified_frobenius(s);
        const auto real = realize_matrices(s, edges);
        const Subspace D = random_stable(rng, real);
        const auto flag = greedy_flag(s, edges, D);
        const auto cond = check_flag_conditions(s, real, flag);
        CAPTURE(cond.detail);
        CHECK(cond.all());
        const auto om = omega_from_flag(flag);
        CHECK(static_cast<long>(om.size()) == static_cast<long>(D.dim()));
        for (long j : om) CHECK((j >= 1 && j <= s.dim()));
        // The bound against every good L, placed by dimension along the flag.
        for (const auto& L : enumerate_good_subobjects(s, edges)) {
            const long dl = dim(s, L);
            if (dl == 0) continue;
            std::size_t i = 0;
            while (!(flag.dims[i] < dl && dl <= flag.dims[i + 1])) ++i;
            const Rat aL = alpha_ratio(s, flag.chain[i], L, D);
            CHECK(aL <= flag.alphas[i]);
            if (dl == flag.dims[i + 1])
                CHECK(intersection_dim(good_subspace(s, L), D) <= static_cast<std::size_t>(flag.meets[i + 1]));
        }
        // Random tie-breaks leave the numerical invariants alone.
        for (int k = 0; k < 4; ++k) {
            std::mt19937_64 tie(static_cast<std::uint64_t>(t * 10 + k));
            const auto other = greedy_flag(s, edges, D, &tie);
            CHECK(other.dims == flag.dims);
            CHECK(other.alphas == flag.alphas);
        }
        if (D.dim() > 0) {
            const auto fp = special_pair_from_flag(flag, s.dim(), static_cast<long>(D.dim()));
            CHECK(is_special(fp.pair).ok);
        }
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("concrete subobjects") {
    const auto s1 = ex1a();
    const auto real1 = realize_matrices(s1, build_modified_frobenius(s1));
    const auto en1 = enumerate_concrete_subobjects(real1, s1);
    const std::vector<Subspace> expected{Subspace(3),
                                         span_of(3, {{0, 1, 0}}),
                                         span_of(3, {{0, 1, 0}, {0, 0, 1}}),
                                         span_of(3, {{1, 0, 0}, {0, 1, 0}}),
                                         Subspace::whole(3)};
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end());
    CHECK(en1.subobjects == sorted);
    CHECK(en1.cross_check_ok);

    const auto s2 = ex2();
    const auto real2 = realize_matrices(s2, {});
    const auto en2 = enumerate_concrete_subobjects(real2, s2);
    const Subspace rep = span_of(4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    CHECK(std::find(en2.subobjects.begin(), en2.subobjects.end(), rep) != en2.subobjects.end());
    CHECK(en2.cross_check_ok);
    const std::vector<Matrix> ops{real2.phi, real2.nmat};
    for (const auto& S : en2.subobjects) {
        CHECK(is_stable(S, ops));
        CHECK(stable_closure(S, ops) == S);
    }

    ModuleSpec diag;
    diag.config = {2, 1, 1, 1, 1};
    diag.families = {{"X", 1, Rat(0)}, {"Y", 1, Rat(0)}, {"Z", 1, Rat(0)}};
    diag.summands = {{"X", 0, 1}, {"Y", 0, 1}, {"Z", 0, 1}};
    const auto realD = realize_matrices(diag, {});
    const auto enD = enumerate_concrete_subobjects(realD, diag);
    CHECK(enD.subobjects.size() == 8);
    for (const auto& S : enD.subobjects)
        for (const auto& row : S.basis()) CHECK(std::count(row.begin(), row.end(), Rat(0)) == 2);

    CHECK_THROWS_AS(enumerate_concrete_subobjects(real2, s2, 3), CapExceeded);
}
