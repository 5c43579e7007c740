#pragma once

// Finitary (F+G)-terms. An F-node is one transition step over child terms; a
// G-node is an ultimately periodic stream of one-hole contexts over terms,
// stored as a canonical lasso. Terms are hash-consed, so structural equality
// is pointer equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "thincoalg/signature.hpp"

namespace thincoalg {

struct Rank {
    std::uint32_t major = 0;
    std::uint32_t minor = 0;

    friend auto operator<=>(const Rank&, const Rank&) = default;
};

std::string to_string(const Rank& r);  // "(major,minor)"

// ---------------------------------------------------------------------------
// Lassos: prefix · period^ω
// ---------------------------------------------------------------------------

template <class T>
struct Lasso {
    std::vector<T> prefix;
    std::vector<T> period;

    friend bool operator==(const Lasso&, const Lasso&) = default;
    friend std::strong_ordering operator<=>(const Lasso& a, const Lasso& b) {
        auto c = std::lexicographical_compare_three_way(a.prefix.begin(), a.prefix.end(),
                                                        b.prefix.begin(), b.prefix.end());
        if (c != 0) return c;
        return std::lexicographical_compare_three_way(a.period.begin(), a.period.end(),
                                                      b.period.begin(), b.period.end());
    }
};

namespace lasso {

/// Primitive period and shortest prefix; equal streams give equal canonical lassos.
template <class T>
Lasso<T> canonicalize(Lasso<T> l) {
    if (l.period.empty()) throw Error(ErrorKind::invalid_argument, "lasso period must be nonempty");
    const std::size_t p = l.period.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < p && repeats; ++i) repeats = l.period[i] == l.period[i - d];
        if (repeats) {
            l.period.resize(d);
            break;
        }
    }
    while (!l.prefix.empty() && l.prefix.back() == l.period.back()) {
        l.prefix.pop_back();
        std::rotate(l.period.begin(), l.period.end() - 1, l.period.end());
    }
    return l;
}

template <class T>
const T& head(const Lasso<T>& l) {
    return l.prefix.empty() ? l.period.front() : l.prefix.front();
}

template <class T>
Lasso<T> tail(const Lasso<T>& l) {
    Lasso<T> out = l;
    if (!out.prefix.empty())
        out.prefix.erase(out.prefix.begin());
    else
        std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
    return canonicalize(std::move(out));
}

template <class T>
Lasso<T> prepend(T x, const Lasso<T>& l) {
    Lasso<T> out;
    out.prefix.reserve(l.prefix.size() + 1);
    out.prefix.push_back(std::move(x));
    out.prefix.insert(out.prefix.end(), l.prefix.begin(), l.prefix.end());
    out.period = l.period;
    return canonicalize(std::move(out));
}

/// The n-th element of the stream (0-based).
template <class T>
const T& at(const Lasso<T>& l, std::size_t n) {
    if (n < l.prefix.size()) return l.prefix[n];
    return l.period[(n - l.prefix.size()) % l.period.size()];
}

/// The first n elements of the stream.
template <class T>
std::vector<T> expand(const Lasso<T>& l, std::size_t n) {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at(l, i));
    return out;
}

} // namespace lasso

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

class Term;
class TermNode;

using TermElem = FElem<Term>;
using TermCtx = ContextElem<Term>;
using TermStream = Lasso<TermCtx>;

enum class TermKind : std::uint8_t { f, g };

class Term {
public:
    /// F-node; the tuple is canonicalised.
    static Term f(const Signature& sig, OpIndex op, std::vector<Term> children);
    static Term f(const Signature& sig, TermElem elem);
    /// G-node; contexts and the lasso are canonicalised.
    static Term g(const Signature& sig, std::vector<TermCtx> prefix, std::vector<TermCtx> period);
    static Term g(const Signature& sig, TermStream stream);

    TermKind kind() const;
    bool is_f() const { return kind() == TermKind::f; }
    bool is_g() const { return kind() == TermKind::g; }
    /// Requires is_f().
    const TermElem& elem() const;
    /// Requires is_g().
    const TermStream& stream() const;

    Rank rank() const;
    /// F: 1 + Σ children; G: 1 + Σ over contexts of (1 + Σ sides). Saturates.
    std::uint64_t size() const;
    std::size_t hash() const;
    const TermNode* id() const { return node_.get(); }

    friend bool operator==(const Term& a, const Term& b) { return a.node_ == b.node_; }
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
    static Term intern(TermNode node);

    std::shared_ptr<const TermNode> node_;
};

class TermNode {
public:
    TermKind kind;
    TermElem elem;      // F-nodes
    TermStream stream;  // G-nodes
    Rank rank;
    std::uint64_t size = 0;
    std::size_t hash = 0;
};

/// Structural order: F-nodes before G-nodes, then by operation index, then
/// lexicographically on tuples, or on lassos (prefix, then period).
std::strong_ordering term_compare(const Term& a, const Term& b);

/// Number of interned nodes currently alive.
std::size_t interned_term_count();

/// Direct subterms: the base of an F-node, the union of all context sides of a G-node. Sorted.
std::vector<Term> subterms(const Term& t);

/// The G-node for (op-with-one-hole)^ω.
Term unary_omega(const Signature& sig, OpIndex op);

/// Coherence step read left to right: g ↦ plug(head, GNode(tail)). Requires a G-node.
Term unfold_step(const Signature& sig, const Term& g);

/// Coherence step read right to left: one G-node per decomposition whose child is a G-node.
std::vector<Term> fold_candidates(const Signature& sig, const Term& f);

/// Address of a subterm occurrence.
struct PathStep {
    enum class Part : std::uint8_t { child, prefix, period };
    Part part = Part::child;
    std::uint32_t index = 0;  // tuple position, or context index within prefix/period
    std::uint32_t side = 0;   // side index within the context (G-nodes only)

    friend auto operator<=>(const PathStep&, const PathStep&) = default;
};
using Position = std::vector<PathStep>;

/// All positions in pre-order, starting with the root position.
std::vector<Position> positions(const Term& t);
Term subterm_at(const Term& t, const Position& pos);
/// Replaces the subterm at `pos` and re-canonicalises every node on the way up.
Term replace_at(const Signature& sig, const Term& t, const Position& pos, const Term& replacement);

} // namespace thincoalg

template <>
struct std::hash<thincoalg::Term> {
    std::size_t operator()(const thincoalg::Term& t) const noexcept { return t.hash(); }
};
