#pragma once

#include "filtadm/linalg.hpp"
#include "filtadm/model.hpp"

#include <map>

namespace filtadm {

struct ModificationEdge {
    std::size_t from = 0;  // summand index k1 (canonical order)
    std::size_t to = 0;    // summand index k2
    long alignment = 0;    // l_{k2} - l_{k1}
    bool operator==(const ModificationEdge&) const = default;
};

long hom_dim(const Summand& s1, const Summand& s2);

// One edge per k1 at most, to the nearest later summand of its family that
// admits a nonzero morphism and satisfies (l = 0 or r1 = l + r2).
std::vector<ModificationEdge> build_modified_frobenius(const ModuleSpec& canonical_spec);

struct BasisLabel {
    std::size_t summand = 0;
    long block = 0;
    std::size_t family = 0;  // index into spec.families
    long level = 0;          // l + block
};

struct ConcreteRealization {
    long p = 2;
    std::size_t dim = 0;
    std::vector<BasisLabel> labels;
    std::vector<Rat> seeds;  // per family index: the scalar a_F
    Matrix phi;
    Matrix nmat;
};

class RealizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requires h = 1. Throws RealizationError("concrete layer requires h=1") otherwise.
ConcreteRealization realize_matrices(const ModuleSpec& spec, const std::vector<ModificationEdge>& edges);

std::vector<LevelLink> as_links(const std::vector<ModificationEdge>& edges);

}  // namespace filtadm
