#pragma once

// Operational semantics of finitary terms: unfolding into finite coalgebras.

#include <span>
#include <unordered_map>
#include <vector>

#include "thincoalg/coalgebra.hpp"
#include "thincoalg/term.hpp"

namespace thincoalg {

struct UnfoldResult {
    PointedCoalgebra pc;
    std::vector<Term> state_terms;  // the term each state was created for
    std::unordered_map<Term, StateId> state_of;
};

/**
 * Unfolds `roots` into one coalgebra whose states are the terms reachable by
 * F-node children and, for G-nodes, context sides and stream tails. The root of
 * the result is the state of roots[0].
 *
 * F-node state:  map_elem(elem, state_of)
 * G-node state:  plug(map_ctx(head, state_of), state_of(GNode(tail)))
 */
UnfoldResult unfold(SignaturePtr sig, std::span<const Term> roots);
UnfoldResult unfold(SignaturePtr sig, const Term& t);

bool beh_equal_terms(const SignaturePtr& sig, const Term& a, const Term& b);

/// is_thin of the unfolding; expected to hold for every term.
bool check_constructible_thin(const SignaturePtr& sig, const Term& t);

} // namespace thincoalg
