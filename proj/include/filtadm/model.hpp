#pragma once

#include "filtadm/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace filtadm {

struct Config {
    long p = 2;
    long degKQp = 1;  // [K:Qp]
    long degLQp = 1;  // [L:Qp], also the number of embeddings
    long degKL = 1;   // [K:L]
    long fPrime = 1;
};

struct Family {
    std::string id;
    long h = 1;
    Rat tBase;  // t_N of the untwisted bottom object
};

// Chain D0(l) + D0(l+1) + ... + D0(l+b-1); N lowers the block index.
struct Summand {
    std::string family;
    long l = 0;
    long b = 1;
    bool operator==(const Summand&) const = default;
};

struct ModuleSpec {
    Config config;
    std::vector<Family> families;
    std::vector<Summand> summands;

    const Family& family_of(const Summand& s) const;
    std::size_t family_index(const std::string& id) const;
    long dim() const;
    long summand_dim(std::size_t i) const;
    long block_count() const;
    // Offset of summand i's first basis vector.
    long offset(std::size_t i) const;
};

// weights[sigma][j] = i_{j+1,sigma}
struct WeightProfile {
    std::vector<std::vector<long>> weights;
};

// Counts of bottom-aligned blocks taken from each summand.
struct GoodSubobject {
    std::vector<long> c;
    bool operator==(const GoodSubobject&) const = default;
    auto operator<=>(const GoodSubobject&) const = default;
};

struct Violation {
    std::string path;
    std::string message;
};

class SpecError : public std::runtime_error {
public:
    explicit SpecError(std::vector<Violation> v);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

std::vector<Violation> validate_spec(const ModuleSpec& spec);
std::vector<Violation> validate_spec(const ModuleSpec& spec, const WeightProfile& profile);
// Throws SpecError when validation fails.
void require_valid(const ModuleSpec& spec);
void require_valid(const ModuleSpec& spec, const WeightProfile& profile);

// t_N of block D0(twist) of a family.
Rat block_tN(const ModuleSpec& spec, const Family& f, long twist);
Rat summand_tN(const ModuleSpec& spec, std::size_t i);
Rat tN(const ModuleSpec& spec);
Rat tN(const ModuleSpec& spec, const GoodSubobject& part);
long dim(const ModuleSpec& spec, const GoodSubobject& part);

GoodSubobject whole(const ModuleSpec& spec);
bool contains(const GoodSubobject& big, const GoodSubobject& small);

// Prefix sums of [K:L] * sum_sigma i_{j,sigma}; entry m covers j <= m.
std::vector<Rat> hodge_prefix(const ModuleSpec& spec, const WeightProfile& profile);

struct LevelDecomposition {
    std::string family;
    std::vector<long> level_dims;                 // index j = level
    std::vector<std::vector<long>> depth_dims;    // depth_dims[j][i-1] = dim D_{=j,i}
};

// Depth-one links: block (from, k) is sent into block (to, k - alignment)
// by phi' - q'^j a. Empty for the unmodified Frobenius.
struct LevelLink {
    std::size_t from;
    std::size_t to;
    long alignment;
};

std::vector<LevelDecomposition> level_decomposition(const ModuleSpec& spec,
                                                    const std::vector<LevelLink>& links = {});

}  // namespace filtadm
