#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <thincoalg/coalgebra.hpp>
#include <thincoalg/normal_form.hpp>
#include <thincoalg/term.hpp>

namespace oracle {

using namespace thincoalg;

// Subgroup of Sym(n) generated by `gens`: fixpoint over the full list of n! permutations,
// adding products on both sides until nothing changes.
inline std::set<Permutation> group_closure(std::size_t n, const std::vector<Permutation>& gens) {
    std::vector<Permutation> all;
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::set<Permutation> in{all.front()};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Permutation& x : all) {
            if (in.count(x)) continue;
            for (const Permutation& g : gens) {
                Permutation gi(n);
                for (std::size_t k = 0; k < n; ++k) gi[g[k]] = static_cast<std::uint32_t>(k);
                // x ∈ H iff g⁻¹∘x ∈ H for a generator g.
                Permutation y(n);
                for (std::size_t k = 0; k < n; ++k) y[k] = gi[x[k]];
                if (in.count(y)) {
                    in.insert(x);
                    changed = true;
                    break;
                }
            }
        }
    }
    return in;
}

// Orbit of φ under σ·φ = φ∘σ⁻¹, as explicit tuples.
template <class E>
std::set<std::vector<E>> orbit(const std::set<Permutation>& group, const std::vector<E>& phi) {
    std::set<std::vector<E>> out;
    for (const Permutation& s : group) {
        std::vector<E> img(phi.size());
        for (std::size_t k = 0; k < phi.size(); ++k) img[s[k]] = phi[k];
        out.insert(img);
    }
    return out;
}

// Partition into mutually reachable classes, by transitive closure.
inline std::set<std::set<StateId>> scc_partition(const Coalgebra& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (StateId v = 0; v < n; ++v) {
        reach[v][v] = true;
        for (StateId w : c.transition(v).tuple) reach[v][w] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    std::set<std::set<StateId>> out;
    for (StateId v = 0; v < n; ++v) {
        std::set<StateId> cls;
        for (StateId w = 0; w < n; ++w)
            if (reach[v][w] && reach[w][v]) cls.insert(w);
        out.insert(cls);
    }
    return out;
}

// States from which some cycle is reachable using only edges allowed by `edge`.
template <class Edge>
std::vector<bool> reaches_cycle(std::size_t n, Edge edge) {
    // Repeatedly delete states with no allowed successor still present.
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateId v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool any = false;
            for (StateId w = 0; w < n && !any; ++w) any = alive[w] && edge(v, w);
            if (!any) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    return alive;
}

// Least k such that an infinite spine from s exists whose contexts only have sides of major ≤ k.
inline std::optional<std::uint32_t> spine_threshold(const Coalgebra& c, const StateRankTable& table, StateId s) {
    const Signature& sig = c.signature();
    for (std::uint32_t k = 0; k <= c.size() + 1; ++k) {
        auto edge = [&](StateId v, StateId w) {
            if (!table.at(v).reachable) return false;
            for (const auto& [ctx, child] : decompositions(sig, c.transition(v))) {
                if (child != w) continue;
                bool low = true;
                for (StateId x : ctx.sides) low = low && table.at(x).rank.major <= k;
                if (low) return true;
            }
            return false;
        };
        if (reaches_cycle(c.size(), edge)[s]) return k;
    }
    return std::nullopt;
}

// Cantor-Bendixson rank by iterating the derivative on branch sets of the unravelled tree.
// live[q]: the current branch set below q is nonempty; good[q]: it has at least two members.
inline std::optional<std::uint32_t> cb_by_derivatives(const PointedCoalgebra& pc) {
    const Coalgebra& c = pc.coalg;
    const std::size_t n = c.size();
    std::vector<bool> allowed(n, true);
    for (std::uint32_t alpha = 0; alpha <= n + 2; ++alpha) {
        auto edge = [&](StateId v, StateId w) {
            if (!allowed[v] || !allowed[w]) return false;
            const auto& t = c.transition(v).tuple;
            return std::find(t.begin(), t.end(), w) != t.end();
        };
        std::vector<bool> live = reaches_cycle(n, edge);
        if (!live[pc.root]) return alpha;
        // good[q]: from q, through allowed states, reach v with two tuple slots that are live.
        std::vector<bool> branching(n, false);
        for (StateId v = 0; v < n; ++v) {
            if (!allowed[v]) continue;
            int slots = 0;
            for (StateId w : c.transition(v).tuple) slots += live[w] ? 1 : 0;
            branching[v] = slots >= 2;
        }
        std::vector<bool> good(n, false);
        for (StateId q = 0; q < n; ++q) {
            if (!allowed[q]) continue;
            std::vector<StateId> stack{q};
            std::vector<bool> seen(n, false);
            seen[q] = true;
            while (!stack.empty() && !good[q]) {
                StateId v = stack.back();
                stack.pop_back();
                if (branching[v]) good[q] = true;
                for (StateId w : c.transition(v).tuple) {
                    if (allowed[w] && !seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
        allowed = good;
    }
    return std::nullopt;
}

// Two lassos denote the same stream iff they agree on a long enough finite prefix.
template <class T>
bool same_stream(const Lasso<T>& a, const Lasso<T>& b) {
    const std::size_t len = a.prefix.size() + b.prefix.size() + std::lcm(a.period.size(), b.period.size());
    return lasso::expand(a, len) == lasso::expand(b, len);
}

} // namespace oracle
