// One line per acceptance criterion; exit status 1 if any fails.

#include "filtadm/commands.hpp"
#include "filtadm/emerton.hpp"
#include "filtadm/filtration.hpp"
#include "filtadm/ordering.hpp"
#include "filtadm/slope_conditions.hpp"
#include "filtadm/special_pairs.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace filtadm;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) out.require(false, "runtime limit exceeded");
    if (!out.ok) ++failures;
    std::printf("criterion %d %-34s %s  (%.2fs)%s%s\n", id, name.c_str(), out.ok ? "PASS" : "FAIL", secs,
                out.note.empty() ? "" : "  ", out.note.c_str());
    std::fflush(stdout);
}

Subspace span_of(std::size_t n, std::vector<Vec> vs) { return Subspace::span(n, std::move(vs)); }

// Filtration from explicit bases, one embedding.
Filtration explicit_filtration(const WeightProfile& w, std::vector<Vec> basis) {
    Filtration f;
    f.profile = w;
    f.bases = {std::move(basis)};
    return f;
}

Outcome example_one() {
    Outcome out;
    const auto s = ex1a();
    const auto plane = span_of(3, {{1, 0, 0}, {0, 1, 0}});
    const auto edges = build_modified_frobenius(s);
    out.require(!edges.empty(), "no modification edge for ex1a");
    const auto plain = realize_matrices(s, {});
    const auto modified = realize_matrices(s, edges);
    for (const auto& triple : std::vector<std::vector<long>>{{-2, 1, 2}, {-3, 1, 3}, {-4, 2, 3}, {-6, 3, 4}}) {
        const auto w = weights({triple[0], triple[1], triple[2]});
        const long i2 = triple[1];
        const std::string tag = "weights (" + std::to_string(triple[0]) + "," + std::to_string(i2) + "," +
                                std::to_string(triple[2]) + "): ";

        // Transverse filtration, unmodified Frobenius.
        const auto fil = build_transverse_filtration(s, w, {}, 7);
        const auto bad = check_admissible(s, plain, fil);
        out.require(!bad.admissible && bad.witness.has_value(), tag + "unmodified transverse run passed");
        if (bad.witness) {
            const auto& row = bad.rows[*bad.witness];
            out.require(row.tN == 0 && row.tH >= i2, tag + "transverse witness has wrong invariants");
            out.require(plane.contains(row.sub), tag + "transverse witness not inside Ke1+Ke2");
        }

        // Fil at the middle weight equal to Ke1+Ke2 gives the plane itself as the violator.
        const auto deg = explicit_filtration(w, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
        const auto dv = check_admissible(s, plain, deg);
        out.require(!dv.admissible && dv.witness.has_value(), tag + "degenerate filtration passed");
        if (dv.witness) {
            const auto& row = dv.rows[*dv.witness];
            out.require(row.sub.dim() == 2 && row.sub == plane, tag + "degenerate witness is not Ke1+Ke2");
            out.require(row.tN == 0 && row.tH >= i2 && row.tH > 0, tag + "degenerate witness invariants");
        }

        // Modified Frobenius with a transverse filtration.
        const auto fil_mod = build_transverse_filtration(s, w, edges, 7);
        const auto good = check_admissible(s, modified, fil_mod);
        out.require(good.admissible && good.top_equality, tag + "modified run not admissible");
    }
    return out;
}

Outcome example_two() {
    Outcome out;
    const auto s = ex2();
    const auto real = realize_matrices(s, {});
    const auto en = enumerate_concrete_subobjects(real, s);
    auto e = [](std::vector<int> idx) {
        std::vector<Vec> vs;
        for (int i : idx) vs.push_back(unit_vector(4, static_cast<std::size_t>(i - 1)));
        return span_of(4, vs);
    };
    const auto rep = span_of(4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    std::vector<Subspace> expected{Subspace(4), e({1}), e({3}), e({1, 2}), e({1, 3}), e({3, 4}),
                                   e({1, 2, 3}), e({1, 3, 4}), Subspace::whole(4), rep};
    std::sort(expected.begin(), expected.end());
    out.require(en.subobjects == expected, "subobject list differs from the expected ten");
    out.require(en.cross_check_ok, "random-coefficient cross-check failed");

    const auto flag = greedy_flag(s, {}, rep);
    out.require(omega_from_flag(flag) == std::vector<long>{1, 3}, "omega for span(e1, e2+e3) is not {1,3}");

    // Weight tuples i1 < i2 < i3 < i4 summing to 4.
    std::vector<std::vector<long>> tuples;
    for (long a = -6; a <= 1 && tuples.size() < 30; ++a)
        for (long b = a + 1; b <= 3 && tuples.size() < 30; ++b)
            for (long c = b + 1; c <= 5 && tuples.size() < 30; ++c) {
                const long d = 4 - a - b - c;
                if (d > c) tuples.push_back({a, b, c, d});
            }
    out.require(tuples.size() >= 20, "fewer than 20 weight tuples");
    const auto edges = build_modified_frobenius(s);
    const auto real_mod = realize_matrices(s, edges);
    std::uint64_t seed = 1;
    for (const auto& t : tuples) {
        const auto w = weights({t[0], t[1], t[2], t[3]});
        const std::string tag = "tuple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + "," + std::to_string(t[3]) + "): ";
        const auto fil = build_transverse_filtration(s, w, {}, seed);
        const auto v = check_admissible(s, real, fil);
        out.require(v.admissible, tag + "filtration not admissible");
        out.require(tH(fil, rep, s.config) <= Rat(t[0] + t[2]), tag + "t_H(span(e1, e2+e3)) > i1 + i3");
        const auto fil_mod = build_transverse_filtration(s, w, edges, seed);
        out.require(check_admissible(s, real_mod, fil_mod).admissible, tag + "modified run not admissible");
        ++seed;
    }
    return out;
}

Outcome example_three() {
    Outcome out;
    out.require(build_modified_frobenius(canonical(ex3())).empty(), "edge set is not empty");
    return out;
}

struct Instance {
    ModuleSpec spec;
    WeightProfile profile;
    bool engineered = false;
};

// Random specs with one free profile each, plus engineered profiles on
// specs whose t_N/[K:L] is integral.
std::vector<Instance> random_instances() {
    std::mt19937_64 rng(20240601);
    std::vector<Instance> out;
    const RandomShape shape{6, 3, 2, false};
    for (int i = 0; i < 250; ++i) {
        const auto s = random_spec(rng, shape);
        out.push_back({s, random_profile(rng, s), false});
        WeightProfile w;
        if (engineered_profile(rng, s, w)) out.push_back({s, w, true});
    }
    int extra = 0;
    while (extra < 150) {
        const auto s = random_spec(rng, shape);
        WeightProfile w;
        if (!engineered_profile(rng, s, w)) continue;
        out.push_back({s, w, true});
        ++extra;
    }
    return out;
}

const std::vector<Instance>& instances() {
    static const auto all = random_instances();
    return all;
}

std::string describe(const Instance& in) {
    std::ostringstream os;
    os << to_json(in.spec).dump() << " weights " << to_json(in.profile).dump();
    return os.str();
}

Outcome equivalence() {
    Outcome out;
    std::set<std::string> specs;
    std::size_t engineered = 0, passes = 0;
    for (const auto& in : instances()) {
        specs.insert(to_json(in.spec).dump());
        engineered += in.engineered;
        const bool iii = check_condition_iii(in.spec, in.profile).passed();
        const bool iv = check_condition_iv(in.spec, in.profile).passed();
        passes += iii;
        out.require(iii == iv, "disagreement on " + describe(in));
    }
    out.require(specs.size() >= 200, "fewer than 200 distinct specs");
    out.require(engineered > 0 && passes > 0, "no engineered or passing instances");
    if (out.ok)
        out.note = std::to_string(instances().size()) + " instances, " + std::to_string(specs.size()) + " specs, " +
                   std::to_string(engineered) + " engineered, " + std::to_string(passes) + " pass";
    return out;
}

Outcome constructive() {
    Outcome out;
    std::size_t ran = 0, admissible = 0, prefix_failures = 0;
    std::uint64_t seed = 0;
    for (const auto& in : instances()) {
        bool h1 = true;
        for (const auto& f : in.spec.families) h1 = h1 && f.h == 1;
        if (!h1) continue;
        ++ran;
        const auto chain = check_condition_iii(in.spec, in.profile);
        const bool iii = chain.passed();
        prefix_failures += chain.status == ChainStatus::fail_prefix;
        CommandOptions o;
        o.command = "verify-admissible";
        o.spec_text = to_json(in.spec).dump();
        o.weights_text = to_json(in.profile).dump();
        o.seed = seed++;
        const auto res = run_command(o);
        if (res.exit == exit_code::input_error) {
            out.require(false, "pipeline error " + res.report.value("error", std::string()) + " on " + describe(in));
            continue;
        }
        const bool adm = res.exit == exit_code::pass;
        admissible += adm;
        if (iii) {
            out.require(adm, "(iii) passes but verify-admissible fails on " + describe(in));
            const auto& table = res.report["table"];
            out.require(!table.empty() && table.back()["dim"] == in.spec.dim() &&
                            table.back()["tH"] == table.back()["tN"],
                        "t_H(D) != t_N(D) on " + describe(in));
        } else {
            out.require(!adm, "(iii) fails but verify-admissible passes on " + describe(in));
        }
    }
    if (out.ok) out.note = std::to_string(ran) + " instances, " + std::to_string(admissible) + " admissible, " +
                   std::to_string(prefix_failures) + " fail at a proper prefix";
    return out;
}

Outcome special_pairs() {
    Outcome out;
    std::mt19937_64 rng(42);
    std::size_t pairs = 0;
    for (; pairs < 10000; ++pairs) {
        const auto p = random_special_pair(rng);
        out.require(is_special(p).ok, "generator produced a non-special pair");
        const auto sol = solve_t(p);
        const auto bad = solved_conditions_failure(p, sol);
        out.require(bad.empty(), "solve_t violates " + bad);
        const auto omega = omega_of(p);
        long total = 0;
        for (const auto& x : p.a) total += x.get_num().get_si();
        for (int k = 0; k < 3; ++k) {
            auto [m, n] = random_hypothesis_mn(rng, static_cast<std::size_t>(total));
            out.require(check_weighted_inequality(omega, m, n).status == WeightedStatus::holds,
                        "weighted inequality fails");
        }
    }
    const std::vector<long> omega{3};
    const std::vector<Rat> m{0, 0, 3}, n{1, 1, 1};
    out.require(check_weighted_inequality(omega, m, n).status == WeightedStatus::fails,
                "counterexample does not fail");
    return out;
}

Subspace random_stable(std::mt19937_64& rng, const ConcreteRealization& real) {
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> count(1, 3), mode(0, 2);
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

Outcome greedy_flags() {
    Outcome out;
    std::mt19937_64 rng(7);
    int pairs = 0;
    for (int t = 0; t < 150; ++t) {
        const auto s = canonical(random_spec(rng, {6, 3, 2, false}));
        const auto edges = build_modified_frobenius(s);
        const auto real = realize_matrices(s, edges);
        const auto D = random_stable(rng, real);
        const auto flag = greedy_flag(s, edges, D);
        const auto cond = check_flag_conditions(s, real, flag);
        out.require(cond.all(), "flag conditions: " + cond.detail);
        for (int k = 0; k < 3; ++k) {
            std::mt19937_64 tie(static_cast<std::uint64_t>(t * 3 + k));
            const auto other = greedy_flag(s, edges, D, &tie);
            out.require(other.dims == flag.dims && other.alphas == flag.alphas, "tie-break changed the flag");
        }
        for (const auto& L : enumerate_good_subobjects(s, edges)) {
            const long dl = dim(s, L);
            if (dl == 0) continue;
            std::size_t i = 0;
            while (!(flag.dims[i] < dl && dl <= flag.dims[i + 1])) ++i;
            out.require(alpha_ratio(s, flag.chain[i], L, D) <= flag.alphas[i], "alpha bound fails");
        }
        ++pairs;
    }
    out.require(pairs >= 100, "fewer than 100 pairs");
    return out;
}

Outcome determinism() {
    Outcome out;
    auto opts = [](std::string cmd, const ModuleSpec& s, const WeightProfile& w, std::uint64_t seed) {
        CommandOptions o;
        o.command = std::move(cmd);
        o.spec_text = to_json(s).dump();
        o.weights_text = to_json(w).dump();
        o.seed = seed;
        o.trials = 500;
        return o;
    };
    const std::vector<CommandOptions> runs{
        opts("verify-admissible", ex2(), weights({-1, 0, 2, 3}), 5),
        opts("verify-admissible", ex1a(), weights({-2, 1, 2}), 7),
        opts("build-filtration", ex1a(), weights({-2, 1, 2}), 11),
        opts("subobjects", ex2(), weights({0, 1, 1, 2}), 3),
        opts("equivalence", ex3(), weights({-1, 0, 2, 3}), 0),
        opts("build-phi", ex1b(), weights({0, 1, 2}), 0),
        opts("fuzz-special", ex1a(), weights({0, 1, 2}), 9),
    };
    for (const auto& o : runs) {
        const auto a = render_report(without_timing(run_command(o).report));
        const auto b = render_report(without_timing(run_command(o).report));
        out.require(a == b, o.command + " reports differ between runs");
    }
    return out;
}

}  // namespace

int main() {
    report(1, "ex1a regression", 1.0, example_one);
    report(2, "ex2 regression", 5.0, example_two);
    report(3, "ex3 regression", 0, example_three);
    report(4, "(iii) <=> (iv) equivalence", 60.0, equivalence);
    report(5, "constructive (iii) => admissible", 120.0, constructive);
    report(6, "special-pair suite", 30.0, special_pairs);
    report(7, "greedy-flag invariants", 0, greedy_flags);
    report(8, "determinism", 0, determinism);
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria PASS" : "acceptance: FAIL");
    return failures == 0 ? 0 : 1;
}
