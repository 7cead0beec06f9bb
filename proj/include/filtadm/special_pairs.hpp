#pragma once

#include "filtadm/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace filtadm {

// a = (a_0, ..., a_{k+1}), c = (c_1, ..., c_k); c_0 = a_0 and c_{k+1} = 0 are implied.
struct SpecialPair {
    std::vector<Rat> a;
    std::vector<Rat> c;
    std::size_t k() const { return c.size(); }
};

struct SpecialCheck {
    bool ok = true;
    std::string clause;  // "", "shape", "(i)", "(ii)" or "(iii)"
    std::string detail;
};

SpecialCheck is_special(const SpecialPair& pair);

struct SolvedT {
    std::vector<Rat> t;  // t_1..t_k
    Rat r;
};

// Throws std::invalid_argument on a non-special pair.
SolvedT solve_t(const SpecialPair& pair);

// Conditions (i)'-(iii)' for a solution; returns the first failing one or "".
std::string solved_conditions_failure(const SpecialPair& pair, const SolvedT& solved);

// Trailing intervals: all of I_0, then the last c_i positions of each I_i.
// Requires integral a and c.
std::vector<long> omega_of(const SpecialPair& pair);

enum class WeightedStatus { holds, fails, hypothesis_violation };

struct WeightedCheck {
    WeightedStatus status = WeightedStatus::holds;
    Rat lhs;  // sum of m over omega
    Rat rhs;  // sum of n over omega
    std::string hypothesis;  // which of (a)-(c) failed
};

const char* to_string(WeightedStatus s);

// omega holds 1-based positions into m and n.
WeightedCheck check_weighted_inequality(std::span<const long> omega, std::span<const Rat> m, std::span<const Rat> n);

struct AssemblyPart {
    SpecialPair pair;
    Rat r;
    long dim = 0;
    std::vector<long> omega;  // within 1..dim
};

// Stable sort by r descending, then shift each omega by the preceding dimensions.
std::vector<long> assemble_global(std::vector<AssemblyPart> parts);

// Same offsets, but parts sorted by |omega|/dim descending (stable). The
// assembled set then keeps every prefix at least proportionally filled.
std::vector<long> assemble_by_density(std::vector<AssemblyPart> parts);

// True iff sum over omega of x <= 0 for every nondecreasing x on 1..n with sum(x) <= 0,
// i.e. |omega ∩ [1,t]| * n >= |omega| * t for all t.
bool front_loaded(std::span<const long> omega, long n);

// Rejection-sampled special pair with integral entries (used by fuzz-special).
SpecialPair random_special_pair(std::mt19937_64& rng, std::size_t max_k = 4, long max_entry = 6);

// Random (m, n) satisfying hypotheses (a)-(c), denominators at most 4.
std::pair<std::vector<Rat>, std::vector<Rat>> random_hypothesis_mn(std::mt19937_64& rng, std::size_t length);

struct SpecialFuzzReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t global_trials = 0;
    std::string first_failure;  // empty when none
    // Assembly checks, counted apart from the single-pair checks.
    std::size_t global_failures = 0;          // r-descending order
    std::size_t density_global_failures = 0;  // density order
    std::string first_global_failure;
};

// Each trial draws a special pair, solves for t, and checks the weighted
// inequality on random (m, n); every fourth trial also assembles two or three
// pairs and checks both assembled sets.
SpecialFuzzReport fuzz_special(std::size_t trials, std::uint64_t seed);

}  // namespace filtadm
