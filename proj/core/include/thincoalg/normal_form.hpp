#pragma once

// Ranks of states in thin coalgebras, extraction of normal terms, normalisation,
// and an exhaustive least-rank search used as a cross-check.

#include <optional>
#include <vector>

#include "thincoalg/coalgebra.hpp"
#include "thincoalg/term.hpp"
#include "thincoalg/thinness.hpp"

namespace thincoalg {

class NotThinError : public Error {
public:
    explicit NotThinError(ThinVerdict verdict)
        : Error(ErrorKind::not_thin, "coalgebra is not thin"), verdict_(std::move(verdict)) {}

    const ThinVerdict& verdict() const { return verdict_; }

private:
    ThinVerdict verdict_;
};

struct StateRank {
    bool reachable = false;
    Rank rank;
    TermKind kind = TermKind::f;
    /// G-kind only: the spine step (context over states, next state).
    std::optional<StateContext> spine_ctx;
    StateId spine_next = kNoState;
};

struct StateRankTable {
    std::vector<StateRank> states;  // indexed by state
    const StateRank& at(StateId s) const { return states.at(s); }
};

/**
 * Least ranks of normal representatives, per reachable state.
 *
 * F-candidate: (max successor major, 1 + max successor minor), or (0,1) without successors.
 * G-candidate, for states reaching a cycle: (1 + g, 0), where g is the least, over
 * infinite spines, of the largest major among the side states along the spine.
 * On a loop the spine is the loop itself; elsewhere
 *   g(s) = min over decompositions (ctx, c) of max(max side major of ctx, g(c)).
 * The rank is the lexicographically smaller candidate. Throws NotThinError.
 */
StateRankTable state_ranks(const PointedCoalgebra& pc);

/// The normal term of the root's behaviour. Throws NotThinError.
Term extract_normal(const PointedCoalgebra& pc);

/// extract_normal(minimize(unfold(t))).
Term normalize(const SignaturePtr& sig, const Term& t);

/**
 * Enumerates every term of size ≤ size_bound, keeps the normal ones (least rank in
 * their behaviour class, with normal subterms, ties by term order) and returns the
 * one behaviourally equal to `t`. Throws Error(bound_exceeded) if none is found.
 */
Term brute_force_normal(const SignaturePtr& sig, const Term& t, std::size_t size_bound);

/// All canonical terms of size ≤ size_bound, sorted by (size, term order).
std::vector<Term> enumerate_terms(const Signature& sig, std::size_t size_bound);

} // namespace thincoalg
