#pragma once

// Analytic-functor signatures: operation symbols with finite arities and
// permutation groups acting on argument positions, together with orbit
// canonicalisation for tuples (elements of FX) and one-hole contexts
// (elements of the derivative F'X).

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thincoalg/error.hpp"

namespace thincoalg {

using OpIndex = std::uint32_t;

/// Image array: a permutation p of {0,...,n-1} maps position k to p[k].
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultArityCap = 8;

/// Arity cap used when none is given explicitly. THINCOALG_ARITY_CAP overrides it.
std::size_t default_arity_cap();

Permutation identity_permutation(std::size_t n);
bool is_permutation(std::span<const std::uint32_t> p, std::size_t n);
/// (a ∘ b)[k] = a[b[k]]
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/**
 * A permutation group given by explicit enumeration of its elements.
 *
 * Elements are stored in lexicographic order, so the identity always comes first.
 */
class PermGroup {
public:
    PermGroup() : PermGroup(0) {}
    explicit PermGroup(std::size_t arity);  // trivial group

    /// Least subgroup of Sym(arity) containing `generators`.
    static PermGroup generate(std::size_t arity, std::span<const Permutation> generators,
                              std::size_t arity_cap = default_arity_cap());

    std::size_t arity() const { return arity_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& p) const;
    bool is_trivial() const { return elements_.size() == 1; }
    bool is_symmetric() const { return symmetric_; }

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.arity_ == b.arity_ && a.elements_ == b.elements_;
    }

private:
    std::size_t arity_ = 0;
    std::vector<Permutation> elements_;
    bool symmetric_ = true;
};

struct OperationSymbol {
    std::string id;
    std::size_t arity = 0;
    std::vector<Permutation> generators;

    friend bool operator==(const OperationSymbol&, const OperationSymbol&) = default;
};

struct SignatureSpec {
    std::vector<OperationSymbol> ops;

    friend bool operator==(const SignatureSpec&, const SignatureSpec&) = default;
};

/**
 * A validated signature F = ⊔ᵢ X^{Uᵢ}/Hᵢ with every Hᵢ enumerated.
 *
 * Operation indices follow declaration order; the structural order on terms
 * compares operations by index.
 */
class Signature {
public:
    explicit Signature(SignatureSpec spec, std::size_t arity_cap = default_arity_cap());

    const SignatureSpec& spec() const { return spec_; }
    std::size_t size() const { return spec_.ops.size(); }
    const OperationSymbol& op(OpIndex i) const { return spec_.ops.at(i); }
    const std::string& name(OpIndex i) const { return op(i).id; }
    std::size_t arity(OpIndex i) const { return op(i).arity; }
    const PermGroup& group(OpIndex i) const { return groups_.at(i); }
    std::size_t max_arity() const { return max_arity_; }

    std::optional<OpIndex> find(std::string_view id) const;
    /// Throws Error(unknown_op) when `id` is not declared.
    OpIndex index_of(std::string_view id) const;

    /// True iff every group is trivial.
    bool is_polynomial() const;

    /// Same op ids, arities and groups, in the same order.
    friend bool operator==(const Signature& a, const Signature& b);

private:
    SignatureSpec spec_;
    std::vector<PermGroup> groups_;
    std::size_t max_arity_ = 0;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(SignatureSpec spec, std::size_t arity_cap = default_arity_cap());

/// Stock signatures used by fixtures, generators and tests.
namespace stock {
/// F X = 1 + X + X²: ops "op0", "op1", "op2", all groups trivial.
SignaturePtr polynomial012();
/// Bags of size 0..max_size: ops "bag0".."bagN", group Sym(n).
SignaturePtr bag(std::size_t max_size = 2);
/// F X = 1 + X + X³/H with H swapping positions 1 and 2: ops "halt", "step", "spawn".
SignaturePtr server();
/// Cyclic lists of lengths 1..max_len: ops "cyc1".."cycN", group generated by k ↦ k+1 mod n.
SignaturePtr cyclic(std::size_t max_len = 3);
/// Polynomial signature with one op "p<k>" per arity k in `arities`.
SignaturePtr polynomial(std::span<const std::size_t> arities);
} // namespace stock

// ---------------------------------------------------------------------------
// Elements of FX and F'X
// ---------------------------------------------------------------------------

template <class E>
concept ElementDomain = std::copyable<E> && std::three_way_comparable<E, std::strong_ordering>;

/// An element (op, [φ]_H) of FX, stored as the lexicographically least tuple of its orbit.
template <class E>
struct FElem {
    OpIndex op = 0;
    std::vector<E> tuple;

    friend bool operator==(const FElem&, const FElem&) = default;
    friend std::strong_ordering operator<=>(const FElem& a, const FElem& b) {
        if (auto c = a.op <=> b.op; c != 0) return c;
        return std::lexicographical_compare_three_way(a.tuple.begin(), a.tuple.end(),
                                                      b.tuple.begin(), b.tuple.end());
    }
};

/**
 * A one-hole context (op, [u, φ]_H) of F'X.
 *
 * `sides` lists the non-hole positions in position order. The stored
 * representative is the least full-length sequence of its orbit, with the hole
 * ordered below every element.
 */
template <class E>
struct ContextElem {
    OpIndex op = 0;
    std::uint32_t hole = 0;
    std::vector<E> sides;

    std::size_t arity() const { return sides.size() + 1; }

    /// Element at full position k, or nullptr at the hole.
    const E* slot(std::size_t k) const {
        if (k == hole) return nullptr;
        return &sides[k < hole ? k : k - 1];
    }

    friend bool operator==(const ContextElem&, const ContextElem&) = default;
    friend std::strong_ordering operator<=>(const ContextElem& a, const ContextElem& b) {
        if (auto c = a.op <=> b.op; c != 0) return c;
        const std::size_t n = std::min(a.arity(), b.arity());
        for (std::size_t k = 0; k < n; ++k) {
            const E* x = a.slot(k);
            const E* y = b.slot(k);
            if (x == nullptr || y == nullptr) {
                if (x == nullptr && y == nullptr) continue;
                return x == nullptr ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            if (auto c = *x <=> *y; c != 0) return c;
        }
        return a.arity() <=> b.arity();
    }
};

namespace detail {

inline void check_op(const Signature& sig, OpIndex op) {
    if (op >= sig.size())
        throw Error(ErrorKind::unknown_op, "operation index " + std::to_string(op) + " out of range");
}

// Three-way comparison of slots where nullptr is the hole (least).
template <class E>
std::strong_ordering compare_slot(const E* x, const E* y) {
    if (x == nullptr || y == nullptr) {
        if (x == y) return std::strong_ordering::equal;
        return x == nullptr ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return *x <=> *y;
}

} // namespace detail

/// Canonical orbit representative of (op, raw).
template <ElementDomain E>
FElem<E> canonical_tuple(const Signature& sig, OpIndex op, std::vector<E> raw) {
    detail::check_op(sig, op);
    const std::size_t n = sig.arity(op);
    if (raw.size() != n) {
        throw Error(ErrorKind::length_mismatch, "operation '" + sig.name(op) + "' expects " +
                                                    std::to_string(n) + " arguments, got " +
                                                    std::to_string(raw.size()));
    }
    const PermGroup& group = sig.group(op);
    if (group.is_trivial()) return {op, std::move(raw)};
    if (group.is_symmetric()) {
        std::sort(raw.begin(), raw.end());
        return {op, std::move(raw)};
    }
    // The orbit of φ is {φ ∘ σ : σ ∈ H}; pick the lexicographically least.
    const Permutation* best = &group.elements().front();
    for (const Permutation& sigma : group.elements()) {
        for (std::size_t k = 0; k < n; ++k) {
            auto c = raw[sigma[k]] <=> raw[(*best)[k]];
            if (c < 0) {
                best = &sigma;
                break;
            }
            if (c > 0) break;
        }
    }
    std::vector<E> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(raw[(*best)[k]]);
    return {op, std::move(out)};
}

template <ElementDomain E>
FElem<E> canonical_tuple(const Signature& sig, std::string_view op, std::vector<E> raw) {
    return canonical_tuple(sig, sig.index_of(op), std::move(raw));
}

/// Canonical representative of the context (op, hole, sides) under σ·(u,φ) = (σ(u), φ∘σ⁻¹).
template <ElementDomain E>
ContextElem<E> canonical_context(const Signature& sig, OpIndex op, std::uint32_t hole,
                                 std::vector<E> sides) {
    detail::check_op(sig, op);
    const std::size_t n = sig.arity(op);
    if (hole >= n) {
        throw Error(ErrorKind::index_out_of_range,
                    "hole " + std::to_string(hole) + " out of range for operation '" + sig.name(op) +
                        "' of arity " + std::to_string(n));
    }
    if (sides.size() + 1 != n) {
        throw Error(ErrorKind::length_mismatch, "context for '" + sig.name(op) + "' needs " +
                                                    std::to_string(n - 1) + " sides, got " +
                                                    std::to_string(sides.size()));
    }
    const PermGroup& group = sig.group(op);
    if (group.is_trivial()) return {op, hole, std::move(sides)};
    if (group.is_symmetric()) {
        std::sort(sides.begin(), sides.end());
        return {op, 0, std::move(sides)};
    }
    ContextElem<E> raw{op, hole, std::move(sides)};
    const Permutation* best = &group.elements().front();
    for (const Permutation& sigma : group.elements()) {
        for (std::size_t k = 0; k < n; ++k) {
            auto c = detail::compare_slot(raw.slot(sigma[k]), raw.slot((*best)[k]));
            if (c < 0) {
                best = &sigma;
                break;
            }
            if (c > 0) break;
        }
    }
    ContextElem<E> out{op, 0, {}};
    out.sides.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const E* v = raw.slot((*best)[k]);
        if (v == nullptr)
            out.hole = static_cast<std::uint32_t>(k);
        else
            out.sides.push_back(*v);
    }
    return out;
}

template <ElementDomain E>
ContextElem<E> canonical_context(const Signature& sig, std::string_view op, std::uint32_t hole,
                                 std::vector<E> sides) {
    return canonical_context(sig, sig.index_of(op), hole, std::move(sides));
}

/// Fills the hole of `ctx` with `x`.
template <ElementDomain E>
FElem<E> plug(const Signature& sig, const ContextElem<E>& ctx, E x) {
    std::vector<E> full;
    full.reserve(ctx.arity());
    for (std::size_t k = 0; k < ctx.arity(); ++k) {
        const E* v = ctx.slot(k);
        full.push_back(v == nullptr ? x : *v);
    }
    return canonical_tuple(sig, ctx.op, std::move(full));
}

/// Image of the tuple, sorted and deduplicated.
template <ElementDomain E>
std::vector<E> base(const FElem<E>& elem) {
    std::vector<E> out = elem.tuple;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <ElementDomain E>
std::vector<E> base_ctx(const ContextElem<E>& ctx) {
    std::vector<E> out = ctx.sides;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All orbit-distinct (context, x) with plug(context, x) = elem, sorted.
template <ElementDomain E>
std::vector<std::pair<ContextElem<E>, E>> decompositions(const Signature& sig, const FElem<E>& elem) {
    std::vector<std::pair<ContextElem<E>, E>> out;
    const std::size_t n = elem.tuple.size();
    out.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<E> sides;
        sides.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != u) sides.push_back(elem.tuple[k]);
        out.emplace_back(canonical_context(sig, elem.op, static_cast<std::uint32_t>(u), std::move(sides)),
                         elem.tuple[u]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Functorial action F(f); the image is re-canonicalised.
template <ElementDomain E, class Fn>
auto map_elem(const Signature& sig, const FElem<E>& elem, Fn&& f) {
    using R = std::decay_t<std::invoke_result_t<Fn&, const E&>>;
    std::vector<R> mapped;
    mapped.reserve(elem.tuple.size());
    for (const E& e : elem.tuple) mapped.push_back(f(e));
    return canonical_tuple(sig, elem.op, std::move(mapped));
}

/// Functorial action F'(f); the image is re-canonicalised.
template <ElementDomain E, class Fn>
auto map_ctx(const Signature& sig, const ContextElem<E>& ctx, Fn&& f) {
    using R = std::decay_t<std::invoke_result_t<Fn&, const E&>>;
    std::vector<R> mapped;
    mapped.reserve(ctx.sides.size());
    for (const E& e : ctx.sides) mapped.push_back(f(e));
    return canonical_context(sig, ctx.op, ctx.hole, std::move(mapped));
}

} // namespace thincoalg
