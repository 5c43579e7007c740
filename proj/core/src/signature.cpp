#include "thincoalg/signature.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

namespace thincoalg {

std::size_t default_arity_cap() {
    const char* env = std::getenv("THINCOALG_ARITY_CAP");
    if (env == nullptr || *env == '\0') return kDefaultArityCap;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') {
        throw Error(ErrorKind::invalid_argument,
                    std::string("THINCOALG_ARITY_CAP is not a natural number: '") + env + "'");
    }
    return static_cast<std::size_t>(v);
}

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

bool is_permutation(std::span<const std::uint32_t> p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::uint32_t v : p) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[b[k]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[p[k]] = static_cast<std::uint32_t>(k);
    return out;
}

PermGroup::PermGroup(std::size_t arity)
    : arity_(arity), elements_{identity_permutation(arity)}, symmetric_(arity <= 1) {}

PermGroup PermGroup::generate(std::size_t arity, std::span<const Permutation> generators,
                              std::size_t arity_cap) {
    if (arity > arity_cap) {
        throw Error(ErrorKind::arity_cap_exceeded, "arity " + std::to_string(arity) +
                                                       " exceeds the arity cap " +
                                                       std::to_string(arity_cap));
    }
    for (const Permutation& g : generators) {
        if (!is_permutation(g, arity)) {
            std::string text = "[";
            for (std::size_t k = 0; k < g.size(); ++k) text += (k ? "," : "") + std::to_string(g[k]);
            throw Error(ErrorKind::malformed_permutation,
                        "generator " + text + "] is not a permutation of 0.." +
                            std::to_string(arity == 0 ? 0 : arity - 1));
        }
    }
    // Closure under right multiplication by generators reaches the whole
    // generated group, since in a finite group inverses are positive powers.
    std::set<Permutation> seen{identity_permutation(arity)};
    std::vector<Permutation> frontier{identity_permutation(arity)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& e : frontier) {
            for (const Permutation& g : generators) {
                Permutation p = compose(e, g);
                if (seen.insert(p).second) next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    PermGroup group(arity);
    group.elements_.assign(seen.begin(), seen.end());
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= arity; ++k) factorial *= k;
    group.symmetric_ = group.elements_.size() == factorial;
    return group;
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

Signature::Signature(SignatureSpec spec, std::size_t arity_cap) : spec_(std::move(spec)) {
    std::unordered_set<std::string> ids;
    groups_.reserve(spec_.ops.size());
    for (const OperationSymbol& op : spec_.ops) {
        if (op.id.empty()) throw Error(ErrorKind::parse, "operation id must be non-empty");
        if (!ids.insert(op.id).second)
            throw Error(ErrorKind::duplicate_op, "duplicate operation id '" + op.id + "'");
        try {
            groups_.push_back(PermGroup::generate(op.arity, op.generators, arity_cap));
        } catch (const Error& e) {
            throw Error(e.kind(), "operation '" + op.id + "': " + e.what());
        }
        max_arity_ = std::max(max_arity_, op.arity);
    }
}

std::optional<OpIndex> Signature::find(std::string_view id) const {
    for (std::size_t i = 0; i < spec_.ops.size(); ++i)
        if (spec_.ops[i].id == id) return static_cast<OpIndex>(i);
    return std::nullopt;
}

OpIndex Signature::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw Error(ErrorKind::unknown_op, "unknown operation id '" + std::string(id) + "'");
}

bool Signature::is_polynomial() const {
    return std::all_of(groups_.begin(), groups_.end(),
                       [](const PermGroup& g) { return g.is_trivial(); });
}

bool operator==(const Signature& a, const Signature& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.spec_.ops[i].id != b.spec_.ops[i].id || a.spec_.ops[i].arity != b.spec_.ops[i].arity ||
            !(a.groups_[i] == b.groups_[i]))
            return false;
    }
    return true;
}

SignaturePtr make_signature(SignatureSpec spec, std::size_t arity_cap) {
    return std::make_shared<const Signature>(std::move(spec), arity_cap);
}

namespace stock {

SignaturePtr polynomial012() {
    return make_signature({{{"op0", 0, {}}, {"op1", 1, {}}, {"op2", 2, {}}}});
}

SignaturePtr bag(std::size_t max_size) {
    SignatureSpec spec;
    for (std::size_t n = 0; n <= max_size; ++n) {
        OperationSymbol op{"bag" + std::to_string(n), n, {}};
        if (n >= 2) {
            Permutation swap = identity_permutation(n);
            std::swap(swap[0], swap[1]);
            Permutation cycle(n);
            for (std::size_t k = 0; k < n; ++k) cycle[k] = static_cast<std::uint32_t>((k + 1) % n);
            op.generators = {swap, cycle};
        }
        spec.ops.push_back(std::move(op));
    }
    return make_signature(std::move(spec));
}

SignaturePtr server() {
    return make_signature({{{"halt", 0, {}}, {"step", 1, {}}, {"spawn", 3, {{0, 2, 1}}}}});
}

SignaturePtr cyclic(std::size_t max_len) {
    SignatureSpec spec;
    for (std::size_t n = 1; n <= max_len; ++n) {
        Permutation rot(n);
        for (std::size_t k = 0; k < n; ++k) rot[k] = static_cast<std::uint32_t>((k + 1) % n);
        spec.ops.push_back({"cyc" + std::to_string(n), n, {rot}});
    }
    return make_signature(std::move(spec));
}

SignaturePtr polynomial(std::span<const std::size_t> arities) {
    SignatureSpec spec;
    for (std::size_t a : arities) spec.ops.push_back({"p" + std::to_string(a), a, {}});
    return make_signature(std::move(spec));
}

} // namespace stock

} // namespace thincoalg
