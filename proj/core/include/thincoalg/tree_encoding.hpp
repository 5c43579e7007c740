#pragma once

// Trees as prefix-closed word sets, for polynomial signatures: the encoding of
// terms, the domain of unfolded behaviours, and Cantor-Bendixson ranks.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "thincoalg/coalgebra.hpp"
#include "thincoalg/term.hpp"

namespace thincoalg {

using Word = std::vector<std::uint32_t>;

struct WordTree {
    std::size_t depth = 0;
    std::set<Word> words;  // all words of length ≤ depth

    bool is_prefix_closed() const;
    friend bool operator==(const WordTree&, const WordTree&) = default;
};

/// "ε" for the empty word; letters concatenated when all are < 10, dot-separated otherwise.
std::string format_word(const Word& w);

bool assert_polynomial(const Signature& sig);

/**
 * Truncation to `depth` of the tree encoding:
 *   F-node (i, t₀…tₙ₋₁)   ↦ {ε} ∪ ⋃ₖ k·enc(tₖ)
 *   G-node C₀ C₁ C₂ …     ↦ ⋃ₙ (u₀…uₙ₋₁)·p(Cₙ), uⱼ the hole of Cⱼ,
 * where p(C) = {ε} ∪ ⋃_{k ≠ hole} k·enc(side at k). Throws Error(not_polynomial).
 */
WordTree enc(const Signature& sig, const Term& t, std::size_t depth);

/// Domain of the behaviour of `t`, read off its unfolding to `depth`.
WordTree dom_tree(const SignaturePtr& sig, const Term& t, std::size_t depth);
WordTree dom_tree(const PointedCoalgebra& pc, std::size_t depth);

/**
 * Cantor-Bendixson rank of the tree unravelled from the root, by a pass over the
 * condensation: a trivial component takes the maximum over its successors (0 at
 * leaves), a loop takes 1 + the maximum over its exits. Throws NotThinError.
 */
std::uint32_t cb_rank(const PointedCoalgebra& pc);

} // namespace thincoalg
