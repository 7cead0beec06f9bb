#include "filtadm/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace filtadm {

namespace {
std::string join(const std::vector<Violation>& v) {
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) out += "; ";
        out += x.path + ": " + x.message;
    }
    return out;
}
}  // namespace

SpecError::SpecError(std::vector<Violation> v) : std::runtime_error(join(v)), violations_(std::move(v)) {}

const Family& ModuleSpec::family_of(const Summand& s) const { return families.at(family_index(s.family)); }

std::size_t ModuleSpec::family_index(const std::string& id) const {
    for (std::size_t i = 0; i < families.size(); ++i)
        if (families[i].id == id) return i;
    throw std::out_of_range("unknown family '" + id + "'");
}

long ModuleSpec::summand_dim(std::size_t i) const { return summands[i].b * family_of(summands[i]).h; }

long ModuleSpec::dim() const {
    long d = 0;
    for (std::size_t i = 0; i < summands.size(); ++i) d += summand_dim(i);
    return d;
}

long ModuleSpec::block_count() const {
    long n = 0;
    for (const auto& s : summands) n += s.b;
    return n;
}

long ModuleSpec::offset(std::size_t i) const {
    long off = 0;
    for (std::size_t k = 0; k < i; ++k) off += summand_dim(k);
    return off;
}

std::vector<Violation> validate_spec(const ModuleSpec& spec) {
    std::vector<Violation> out;
    const auto& c = spec.config;
    if (!is_prime(c.p)) out.push_back({"config.p", "p=" + std::to_string(c.p) + " is not prime"});
    if (c.degKQp < 1 || c.degLQp < 1 || c.degKL < 1 || c.fPrime < 1)
        out.push_back({"config", "all degrees must be >= 1"});
    if (c.degKQp != c.degKL * c.degLQp)
        out.push_back({"config.degKQp", "degree identity violated: degKQp=" + std::to_string(c.degKQp) +
                                            " != degKL*degLQp=" + std::to_string(c.degKL * c.degLQp)});
    std::set<std::string> ids;
    for (std::size_t i = 0; i < spec.families.size(); ++i) {
        const auto& f = spec.families[i];
        std::string path = "families[" + std::to_string(i) + "]";
        if (!ids.insert(f.id).second) out.push_back({path + ".id", "duplicate family id '" + f.id + "'"});
        if (f.h < 1) out.push_back({path + ".h", "h must be >= 1"});
    }
    bool families_ok = true;
    for (std::size_t i = 0; i < spec.summands.size(); ++i) {
        const auto& s = spec.summands[i];
        std::string path = "summands[" + std::to_string(i) + "]";
        if (!ids.count(s.family)) {
            out.push_back({path + ".family", "unknown family '" + s.family + "'"});
            families_ok = false;
        }
        if (s.l < 0) out.push_back({path + ".l", "twist offset must be >= 0"});
        if (s.b < 1) out.push_back({path + ".b", "chain length b=" + std::to_string(s.b) + " must be >= 1"});
    }
    if (spec.summands.empty()) out.push_back({"summands", "at least one summand required"});
    if (families_ok && out.empty() && spec.dim() < 2)
        out.push_back({"summands", "total dimension must be >= 2"});
    return out;
}

std::vector<Violation> validate_spec(const ModuleSpec& spec, const WeightProfile& profile) {
    auto out = validate_spec(spec);
    if (static_cast<long>(profile.weights.size()) != spec.config.degLQp)
        out.push_back({"weights", "expected " + std::to_string(spec.config.degLQp) + " embeddings, got " +
                                      std::to_string(profile.weights.size())});
    long d1 = -1;
    if (out.empty() || std::none_of(out.begin(), out.end(), [](const Violation& v) {
            return v.path.rfind("summands", 0) == 0 || v.path.rfind("families", 0) == 0;
        }))
        d1 = spec.dim();
    for (std::size_t s = 0; s < profile.weights.size(); ++s) {
        const auto& w = profile.weights[s];
        std::string path = "weights[" + std::to_string(s) + "]";
        if (d1 >= 0 && static_cast<long>(w.size()) != d1)
            out.push_back({path, "profile length " + std::to_string(w.size()) + " != d+1=" + std::to_string(d1)});
        for (std::size_t j = 1; j < w.size(); ++j)
            if (w[j] <= w[j - 1]) {
                out.push_back({path, "weights not strictly increasing at σ=" + std::to_string(s + 1)});
                break;
            }
    }
    return out;
}

void require_valid(const ModuleSpec& spec) {
    auto v = validate_spec(spec);
    if (!v.empty()) throw SpecError(std::move(v));
}

void require_valid(const ModuleSpec& spec, const WeightProfile& profile) {
    auto v = validate_spec(spec, profile);
    if (!v.empty()) throw SpecError(std::move(v));
}

Rat block_tN(const ModuleSpec& spec, const Family& f, long twist) {
    return f.tBase + Rat(twist * spec.config.degKQp);
}

Rat summand_tN(const ModuleSpec& spec, std::size_t i) {
    const auto& s = spec.summands[i];
    GoodSubobject g{std::vector<long>(spec.summands.size(), 0)};
    g.c[i] = s.b;
    return tN(spec, g);
}

Rat tN(const ModuleSpec& spec) { return tN(spec, whole(spec)); }

Rat tN(const ModuleSpec& spec, const GoodSubobject& part) {
    if (part.c.size() != spec.summands.size()) throw std::invalid_argument("c-vector length mismatch");
    Rat total = 0;
    for (std::size_t i = 0; i < part.c.size(); ++i) {
        const auto& s = spec.summands[i];
        if (part.c[i] < 0 || part.c[i] > s.b)
            throw std::out_of_range("c[" + std::to_string(i) + "]=" + std::to_string(part.c[i]) + " out of range");
        const auto& f = spec.family_of(s);
        for (long k = 0; k < part.c[i]; ++k) total += block_tN(spec, f, s.l + k);
    }
    return total;
}

long dim(const ModuleSpec& spec, const GoodSubobject& part) {
    long d = 0;
    for (std::size_t i = 0; i < part.c.size(); ++i) d += part.c[i] * spec.family_of(spec.summands[i]).h;
    return d;
}

GoodSubobject whole(const ModuleSpec& spec) {
    GoodSubobject g;
    for (const auto& s : spec.summands) g.c.push_back(s.b);
    return g;
}

bool contains(const GoodSubobject& big, const GoodSubobject& small) {
    for (std::size_t i = 0; i < big.c.size(); ++i)
        if (small.c[i] > big.c[i]) return false;
    return true;
}

std::vector<Rat> hodge_prefix(const ModuleSpec& spec, const WeightProfile& profile) {
    const std::size_t n = static_cast<std::size_t>(spec.dim());
    std::vector<Rat> out(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        long col = 0;
        for (const auto& w : profile.weights) col += w.at(j);
        out[j + 1] = out[j] + Rat(col * spec.config.degKL);
    }
    return out;
}

std::vector<LevelDecomposition> level_decomposition(const ModuleSpec& spec, const std::vector<LevelLink>& links) {
    std::vector<LevelDecomposition> out;
    std::map<std::string, std::vector<std::size_t>> by_family;
    for (std::size_t i = 0; i < spec.summands.size(); ++i) by_family[spec.summands[i].family].push_back(i);

    // Depth of a block: 1 + depth of its link target at the same level.
    std::map<std::pair<std::size_t, long>, long> depth;
    auto depth_of = [&](auto&& self, std::size_t i, long k) -> long {
        auto key = std::make_pair(i, k);
        if (auto it = depth.find(key); it != depth.end()) return it->second;
        long d = 1;
        for (const auto& e : links) {
            if (e.from != i) continue;
            long tk = k - e.alignment;
            if (tk >= 0 && tk < spec.summands[e.to].b) d = std::max(d, 1 + self(self, e.to, tk));
        }
        depth[key] = d;
        return d;
    };

    for (const auto& [fam, idx] : by_family) {
        const long h = spec.family_of(spec.summands[idx.front()]).h;
        long top = 0;
        for (auto i : idx) top = std::max(top, spec.summands[i].l + spec.summands[i].b - 1);
        LevelDecomposition ld{fam, std::vector<long>(top + 1, 0), std::vector<std::vector<long>>(top + 1)};
        std::vector<std::vector<long>> per_depth(top + 1);
        for (auto i : idx) {
            const auto& s = spec.summands[i];
            for (long k = 0; k < s.b; ++k) {
                long lvl = s.l + k;
                ld.level_dims[lvl] += h;
                long d = depth_of(depth_of, i, k);
                auto& pd = per_depth[lvl];
                if (static_cast<long>(pd.size()) < d) pd.resize(d, 0);
                pd[d - 1] += h;
            }
        }
        for (long j = 0; j <= top; ++j) {
            long acc = 0;
            for (long x : per_depth[j]) ld.depth_dims[j].push_back(acc += x);
        }
        out.push_back(std::move(ld));
    }
    return out;
}

}  // namespace filtadm
