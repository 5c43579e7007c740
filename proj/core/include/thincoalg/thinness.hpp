#pragma once

// Thinness of finite pointed coalgebras: a linear-time decision procedure with
// witnesses, a cycle-enumeration oracle, and classification of infinite-path counts.

#include <optional>
#include <string>

#include "thincoalg/coalgebra.hpp"

namespace thincoalg {

/// Two incomparable cycles through the same state, and a path reaching it from the root.
struct ThinWitness {
    FinitePath access;
    FinitePath cycle1;
    FinitePath cycle2;
};

struct ThinVerdict {
    bool thin = true;
    std::optional<ThinWitness> witness;
};

/**
 * Decides thinness in O(states + edges).
 *
 * A finite pointed coalgebra is thin iff every nontrivial SCC reachable from the
 * root is a simple loop: each member has exactly one successor edge, counted with
 * multiplicity, that stays inside the SCC.
 */
ThinVerdict is_thin(const PointedCoalgebra& pc);

/// Enumerates cycles of length ≤ maxlen through each reachable state; requires maxlen ≥ 2·states.
bool oracle_is_thin(const PointedCoalgebra& pc, std::size_t maxlen);

/// Checks a witness against the coalgebra by replaying its paths.
bool witness_valid(const PointedCoalgebra& pc, const ThinWitness& w);

struct PathCountClass {
    enum class Kind { zero, finite, countably_infinite, uncountable };
    Kind kind = Kind::zero;
    BigCount count = 0;  // meaningful for `finite` only

    friend bool operator==(const PathCountClass&, const PathCountClass&) = default;
};

std::string to_string(const PathCountClass& c);

/// How many infinite paths start at the root.
PathCountClass count_infinite_paths_class(const PointedCoalgebra& pc);

} // namespace thincoalg
