#pragma once

// Finite F-coalgebras: transitions, successors with multiplicity, finite paths,
// cycles, condensation, and behavioural equivalence by partition refinement.

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thincoalg/graph.hpp"
#include "thincoalg/signature.hpp"

namespace thincoalg {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

using Transition = FElem<StateId>;
using StateContext = ContextElem<StateId>;
using BigCount = boost::multiprecision::cpp_int;

class Coalgebra {
public:
    /// Validates state indices and canonicalises every transition.
    Coalgebra(SignaturePtr sig, std::vector<Transition> transitions);

    const Signature& signature() const { return *sig_; }
    const SignaturePtr& signature_ptr() const { return sig_; }
    std::size_t size() const { return transitions_.size(); }
    const Transition& transition(StateId s) const;
    const std::vector<Transition>& transitions() const { return transitions_; }

    /// Σ_t arity(τ(t)), the number of edges of the successor multigraph.
    std::size_t edge_count() const;

    /// Successor multigraph: one edge per tuple position.
    Digraph graph() const;

private:
    SignaturePtr sig_;
    std::vector<Transition> transitions_;
};

struct PointedCoalgebra {
    PointedCoalgebra(Coalgebra c, StateId r);

    Coalgebra coalg;
    StateId root;
};

struct Successor {
    StateId state;
    std::uint32_t k;  // multiplicity index, 0-based

    friend auto operator<=>(const Successor&, const Successor&) = default;
};

/// Suc(t), sorted by (state, k).
std::vector<Successor> successors(const Coalgebra& c, StateId t);

/// t₀ k₁ t₁ … k_m t_m; `states` has one more entry than `ks`.
struct FinitePath {
    std::vector<StateId> states;
    std::vector<std::uint32_t> ks;

    std::size_t length() const { return ks.size(); }
    StateId start() const { return states.front(); }
    StateId end() const { return states.back(); }
    /// True iff `*this` is a prefix of `other` (as step sequences from the same start).
    bool is_prefix_of(const FinitePath& other) const;

    friend auto operator<=>(const FinitePath&, const FinitePath&) = default;
};

/// True iff every step of `p` is a successor step of `c`.
bool is_path(const Coalgebra& c, const FinitePath& p);
bool comparable(const FinitePath& a, const FinitePath& b);

/// All paths of length exactly `d` from the root, in lexicographic order.
std::vector<FinitePath> paths_to_depth(const PointedCoalgebra& pc, std::size_t d);
/// Number of paths of length exactly `d` from the root.
BigCount count_paths(const PointedCoalgebra& pc, std::size_t d);
/// All cycles through t of length 1..maxlen, in lexicographic order.
std::vector<FinitePath> cycles_through(const Coalgebra& c, StateId t, std::size_t maxlen);

struct Condensation {
    std::vector<std::vector<StateId>> components;  // reverse topological order
    std::vector<std::uint32_t> component_of;
    std::vector<bool> nontrivial;
    /// Distinct edges between distinct components, sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> dag_edges;
};

Condensation sccs(const Coalgebra& c);

/// Block index per state for the coarsest behavioural equivalence.
std::vector<std::uint32_t> behavioural_partition(const Coalgebra& c);

struct Minimized {
    PointedCoalgebra pc;
    /// Quotient state of each original state; kNoState for states unreachable from the root.
    std::vector<StateId> mapping;
};

/// Reachable part of the behavioural quotient, states numbered breadth-first from the root.
Minimized minimize(const PointedCoalgebra& pc);

/// Subcoalgebra generated by the root, states numbered breadth-first.
Minimized restrict_reachable(const PointedCoalgebra& pc);

struct DisjointUnion {
    Coalgebra coalg;
    StateId offset;  // states of the second summand start here
};

DisjointUnion disjoint_union(const Coalgebra& a, const Coalgebra& b);

/// Throws Error(signature_mismatch) when the signatures differ.
bool beh_equal(const PointedCoalgebra& a, const PointedCoalgebra& b);

/// True iff `f` is an F-coalgebra morphism from `a` to `b` on all states of `a`.
bool is_morphism(const Coalgebra& a, const Coalgebra& b, const std::vector<StateId>& f);

} // namespace thincoalg
