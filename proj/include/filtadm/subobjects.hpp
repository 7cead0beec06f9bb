#pragma once

#include "filtadm/frobenius.hpp"
#include "filtadm/linalg.hpp"
#include "filtadm/model.hpp"
#include "filtadm/special_pairs.hpp"

#include <cstdint>
#include <random>

namespace filtadm {

// All c-vectors with 0 <= c_i <= b_i, in lexicographic order.
std::vector<GoodSubobject> enumerate_good_subobjects(const ModuleSpec& spec);
// Only those that stay stable under the Frobenius modified along the edges.
std::vector<GoodSubobject> enumerate_good_subobjects(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges);
bool stable_under_edges(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges, const GoodSubobject& g);

// Coordinate subspace spanned by the included blocks (block k of summand i
// occupies h consecutive coordinates).
Subspace good_subspace(const ModuleSpec& spec, const GoodSubobject& g);

// (dim E' meet D' - dim E meet D') / (dim E' - dim E). Throws when the dimensions agree.
Rat alpha_ratio(const ModuleSpec& spec, const GoodSubobject& E, const GoodSubobject& Eprime, const Subspace& Dprime);

// Good subobjects with their dimensions and intersection dimensions against D'.
struct GoodLattice {
    std::vector<GoodSubobject> members;
    std::vector<long> dims;
    std::vector<long> meets;
    std::size_t index_of(const GoodSubobject& g) const;
};

GoodLattice good_lattice(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges, const Subspace& Dprime);

struct GoodFlag {
    std::vector<GoodSubobject> chain;  // E_0 = 0, E_1, ..., E_m, E_{m+1} = D
    std::vector<long> dims;            // per chain member
    std::vector<long> meets;           // dim(E_i meet D') per chain member
    std::vector<Rat> alphas;           // alpha(E_i / E_{i-1}) for i = 1..m+1
    std::vector<long> interior_dims() const;  // dims of E_1..E_m
};

// Greedy choice: largest alpha, then smallest dimension, then the
// lexicographically smallest c-vector, or a uniformly random tied member when
// tie_rng is given.
GoodFlag greedy_flag(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges, const Subspace& Dprime,
                     std::mt19937_64* tie_rng = nullptr);

// Union of the trailing intervals [S_i - c_i + 1, S_i] along the chain.
std::vector<long> omega_from_flag(const GoodFlag& flag);

struct FlagPair {
    bool vacuous = false;  // D' = 0
    SpecialPair pair;
    std::size_t f1_index = 0;  // chain position of F1
    std::size_t f2_index = 0;  // chain position of F2
};

// Throws std::logic_error when the pair fails to be special.
FlagPair special_pair_from_flag(const GoodFlag& flag, long total_dim, long dprime_dim);

struct FlagConditions {
    bool a = true;  // alpha nonincreasing; equal alpha implies nondecreasing jumps
    bool b = true;  // N(E_i) in E_{i-1}
    bool c = true;  // (phi - a_F p^j) E_i in E_{i-1} for some family F and level j
    std::string detail;
    bool all() const { return a && b && c; }
};

FlagConditions check_flag_conditions(const ModuleSpec& spec, const ConcreteRealization& real, const GoodFlag& flag);

std::size_t default_subobject_cap();  // FILTADM_CAP or 8

struct ConcreteEnumeration {
    std::vector<Subspace> subobjects;  // includes 0 and the whole space, sorted
    std::size_t pattern_vectors = 0;
    std::size_t random_rounds = 0;
    bool cross_check_ok = true;
    std::string cross_check_detail;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Phi- and N-stable subspaces generated by {0,1} patterns inside each
// generalized eigenspace, closed under sums, plus random-coefficient rounds
// checked against the pattern classes.
ConcreteEnumeration enumerate_concrete_subobjects(const ConcreteRealization& real, const ModuleSpec& spec,
                                                  std::size_t cap = default_subobject_cap(), std::uint64_t seed = 0,
                                                  int rounds = 5);

// Closes a set of stable subspaces under sums; input must already be stable.
std::vector<Subspace> sum_closure(std::vector<Subspace> generators, std::size_t ambient, std::size_t limit = 20000);

// Generalized eigenspaces of phi in the realization: one per (family, level).
std::vector<std::vector<std::size_t>> eigen_classes(const ConcreteRealization& real);

}  // namespace filtadm
