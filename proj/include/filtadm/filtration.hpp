#pragma once

#include "filtadm/frobenius.hpp"
#include "filtadm/linalg.hpp"
#include "filtadm/model.hpp"
#include "filtadm/subobjects.hpp"

#include <cstdint>
#include <optional>

namespace filtadm {

// Per embedding: ordered basis v_1..v_{d+1}; Fil^{i_j} = span(v_j, ..., v_{d+1}).
struct Filtration {
    std::vector<std::vector<Vec>> bases;
    WeightProfile profile;
    std::uint64_t seed = 0;
    int attempts = 0;

    // steps(s)[j] = span(v_{j+1}, ..., v_{d+1}); steps(s)[d+1] = 0.
    std::vector<Subspace> steps(std::size_t sigma) const;
};

class FiltrationError : public std::runtime_error {
public:
    FiltrationError(const std::string& what, GoodSubobject witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const GoodSubobject& witness() const { return witness_; }

private:
    GoodSubobject witness_;
};

// First good subobject on which the induced jumps are not the lowest weights.
std::optional<GoodSubobject> transversality_failure(const ModuleSpec& spec, const std::vector<GoodSubobject>& goods,
                                                    const Filtration& fil);

// Samples integer bases with entries in [-magnitude, magnitude] until the
// filtration is transverse to every good subobject.
Filtration build_transverse_filtration(const ModuleSpec& spec, const WeightProfile& profile,
                                       const std::vector<ModificationEdge>& edges, std::uint64_t seed,
                                       int budget = 64, long magnitude = 1000000);

Rat tH(const Filtration& fil, const Subspace& Dprime, const Config& config);

// Newton number of a phi-stable subspace, normalized to match the family tBase values.
Rat tN_concrete(const ModuleSpec& spec, const ConcreteRealization& real, const Subspace& Dprime);

struct AdmissibilityRow {
    Subspace sub;
    Rat tH;
    Rat tN;
};

struct AdmissibilityVerdict {
    bool admissible = true;
    bool top_equality = true;
    std::vector<AdmissibilityRow> rows;  // sorted subspaces
    std::optional<std::size_t> witness;  // index into rows
    std::size_t pattern_count = 0;
    std::size_t filtration_derived = 0;
    bool cross_check_ok = true;
};

// Candidates: the pattern enumeration plus stable hulls and cores of every
// intersection with a filtration step, closed under sums.
std::vector<Subspace> admissibility_candidates(const ModuleSpec& spec, const ConcreteRealization& real,
                                               const Filtration& fil, const std::vector<Subspace>& base);

AdmissibilityVerdict check_admissible(const ModuleSpec& spec, const ConcreteRealization& real, const Filtration& fil,
                                      std::size_t cap = default_subobject_cap(), std::uint64_t seed = 0);

}  // namespace filtadm
