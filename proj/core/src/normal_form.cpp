#include "thincoalg/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "thincoalg/semantics.hpp"

namespace thincoalg {

namespace {

constexpr std::uint32_t kNoSpine = std::numeric_limits<std::uint32_t>::max();

StateContext context_at(const Signature& sig, const Transition& t, std::size_t pos) {
    std::vector<StateId> sides;
    sides.reserve(t.tuple.size() - 1);
    for (std::size_t k = 0; k < t.tuple.size(); ++k)
        if (k != pos) sides.push_back(t.tuple[k]);
    return canonical_context(sig, t.op, static_cast<std::uint32_t>(pos), std::move(sides));
}

} // namespace

StateRankTable state_ranks(const PointedCoalgebra& pc) {
    ThinVerdict verdict = is_thin(pc);
    if (!verdict.thin) throw NotThinError(std::move(verdict));

    const Coalgebra& c = pc.coalg;
    const Signature& sig = c.signature();
    const Digraph g = c.graph();
    const StateId roots[] = {pc.root};
    const SccResult scc = strongly_connected_components(g, roots);

    StateRankTable table;
    table.states.resize(c.size());
    // Least spine value per state; kNoSpine when no cycle is reachable.
    std::vector<std::uint32_t> spine(c.size(), kNoSpine);

    for (std::uint32_t comp = 0; comp < scc.components.size(); ++comp) {
        const auto& members = scc.components[comp];
        if (scc.nontrivial(g, comp)) {
            std::uint32_t exits = 0;
            for (StateId v : members)
                for (StateId w : g.out(v))
                    if (scc.component_of[w] != comp) exits = std::max(exits, table.states[w].rank.major);
            for (StateId v : members) {
                const Transition& t = c.transition(v);
                std::size_t inner = 0;
                while (scc.component_of[t.tuple[inner]] != comp) ++inner;
                StateRank& r = table.states[v];
                r.reachable = true;
                r.rank = {exits + 1, 0};
                r.kind = TermKind::g;
                r.spine_ctx = context_at(sig, t, inner);
                r.spine_next = t.tuple[inner];
                spine[v] = exits;
            }
            continue;
        }

        const StateId v = members.front();
        const Transition& t = c.transition(v);
        Rank f_rank{0, 1};
        for (StateId w : t.tuple) {
            f_rank.major = std::max(f_rank.major, table.states[w].rank.major);
            f_rank.minor = std::max(f_rank.minor, table.states[w].rank.minor + 1);
        }
        std::uint32_t best = kNoSpine;
        std::optional<StateContext> best_ctx;
        StateId best_next = kNoState;
        for (auto& [ctx, child] : decompositions(sig, t)) {
            if (spine[child] == kNoSpine) continue;
            std::uint32_t value = spine[child];
            for (StateId w : ctx.sides) value = std::max(value, table.states[w].rank.major);
            if (value < best) {
                best = value;
                best_ctx = ctx;
                best_next = child;
            }
        }
        spine[v] = best;
        StateRank& r = table.states[v];
        r.reachable = true;
        r.rank = f_rank;
        r.kind = TermKind::f;
        if (best != kNoSpine && Rank{best + 1, 0} < f_rank) {
            r.rank = {best + 1, 0};
            r.kind = TermKind::g;
            r.spine_ctx = std::move(best_ctx);
            r.spine_next = best_next;
        }
    }
    return table;
}

Term extract_normal(const PointedCoalgebra& pc) {
    const Minimized m = minimize(pc);
    const Coalgebra& c = m.pc.coalg;
    const Signature& sig = c.signature();
    const StateRankTable table = state_ranks(m.pc);

    std::vector<StateId> order(c.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](StateId a, StateId b) {
        return table.at(a).rank < table.at(b).rank;
    });

    std::vector<std::optional<Term>> built(c.size());
    auto term_of = [&](StateId x) -> const Term& {
        if (!built[x]) throw Error(ErrorKind::invalid_argument, "normal form built out of rank order");
        return *built[x];
    };
    for (StateId s : order) {
        const StateRank& r = table.at(s);
        if (r.kind == TermKind::f) {
            built[s] = Term::f(sig, map_elem(sig, c.transition(s), term_of));
            continue;
        }
        // Follow the spine until a state repeats: before the repeat is the prefix, from it the period.
        std::map<StateId, std::size_t> seen;
        std::vector<TermCtx> ctxs;
        StateId cur = s;
        while (!seen.count(cur)) {
            seen.emplace(cur, ctxs.size());
            const StateRank& step = table.at(cur);
            if (step.kind != TermKind::g)
                throw Error(ErrorKind::invalid_argument, "spine leaves the G-kind states");
            ctxs.push_back(map_ctx(sig, *step.spine_ctx, term_of));
            cur = step.spine_next;
        }
        const std::size_t j = seen.at(cur);
        std::vector<TermCtx> prefix(ctxs.begin(), ctxs.begin() + static_cast<std::ptrdiff_t>(j));
        std::vector<TermCtx> period(ctxs.begin() + static_cast<std::ptrdiff_t>(j), ctxs.end());
        built[s] = Term::g(sig, std::move(prefix), std::move(period));
    }
    return *built[m.pc.root];
}

Term normalize(const SignaturePtr& sig, const Term& t) {
    return extract_normal(unfold(sig, t).pc);
}

namespace {

// Calls `emit` with every sequence of `parts` sizes, each ≥ 1, summing to `total`.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(cur);
        return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, emit);
        cur.pop_back();
    }
}

// Every choice of one term per bucket size.
void product(const std::vector<std::vector<Term>>& by_size, const std::vector<std::size_t>& sizes,
             std::vector<Term>& cur, const std::function<void(const std::vector<Term>&)>& emit) {
    if (cur.size() == sizes.size()) {
        emit(cur);
        return;
    }
    for (const Term& t : by_size[sizes[cur.size()]]) {
        cur.push_back(t);
        product(by_size, sizes, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<Term> enumerate_terms(const Signature& sig, std::size_t size_bound) {
    std::vector<std::vector<Term>> by_size(size_bound + 1);
    std::vector<std::vector<TermCtx>> ctx_by_cost(size_bound + 1);
    std::set<Term> all;

    for (std::size_t s = 1; s <= size_bound; ++s) {
        std::set<Term> found;
        // F-nodes: 1 + Σ children.
        for (OpIndex op = 0; op < sig.size(); ++op) {
            const std::size_t a = sig.arity(op);
            std::vector<std::size_t> sizes;
            compositions(s - 1, a, sizes, [&](const std::vector<std::size_t>& parts) {
                std::vector<Term> cur;
                product(by_size, parts, cur, [&](const std::vector<Term>& children) {
                    found.insert(Term::f(sig, op, children));
                });
            });
        }
        // Contexts of cost s: 1 + Σ sides.
        std::set<TermCtx> ctxs;
        for (OpIndex op = 0; op < sig.size(); ++op) {
            const std::size_t a = sig.arity(op);
            if (a == 0) continue;
            std::vector<std::size_t> sizes;
            compositions(s - 1, a - 1, sizes, [&](const std::vector<std::size_t>& parts) {
                std::vector<Term> cur;
                product(by_size, parts, cur, [&](const std::vector<Term>& sides) {
                    for (std::uint32_t h = 0; h < a; ++h) ctxs.insert(canonical_context(sig, op, h, sides));
                });
            });
        }
        ctx_by_cost[s].assign(ctxs.begin(), ctxs.end());
        // G-nodes: 1 + Σ context costs, over every split into prefix and nonempty period.
        std::vector<TermCtx> seq;
        std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
            if (remaining == 0) {
                for (std::size_t p = 0; p < seq.size(); ++p) {
                    std::vector<TermCtx> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(p));
                    std::vector<TermCtx> period(seq.begin() + static_cast<std::ptrdiff_t>(p), seq.end());
                    found.insert(Term::g(sig, std::move(prefix), std::move(period)));
                }
                return;
            }
            for (std::size_t cost = 1; cost <= remaining; ++cost) {
                for (const TermCtx& c : ctx_by_cost[cost]) {
                    seq.push_back(c);
                    extend(remaining - cost);
                    seq.pop_back();
                }
            }
        };
        if (s >= 2) extend(s - 1);

        for (const Term& t : found) {
            if (t.size() <= size_bound && all.insert(t).second) by_size[t.size()].push_back(t);
        }
        std::sort(by_size[s].begin(), by_size[s].end());
    }
    std::vector<Term> out;
    for (const auto& bucket : by_size) out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

Term brute_force_normal(const SignaturePtr& sig, const Term& t, std::size_t size_bound) {
    std::vector<Term> pool = enumerate_terms(*sig, size_bound);
    std::vector<Term> roots{t};
    roots.insert(roots.end(), pool.begin(), pool.end());
    const UnfoldResult u = unfold(sig, roots);
    const std::vector<std::uint32_t> blocks = behavioural_partition(u.pc.coalg);
    auto block_of = [&](const Term& x) { return blocks[u.state_of.at(x)]; };
    const std::uint32_t target = block_of(t);

    std::sort(pool.begin(), pool.end(), [](const Term& a, const Term& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a < b;
    });
    std::set<Term> normal;
    std::map<std::uint32_t, Rank> least_normal_rank;
    for (const Term& cand : pool) {
        bool ok = true;
        for (const Term& sub : subterms(cand)) {
            if (!normal.count(sub)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        const std::uint32_t b = block_of(cand);
        auto it = least_normal_rank.find(b);
        if (it != least_normal_rank.end() && it->second < cand.rank()) continue;
        normal.insert(cand);
        if (it == least_normal_rank.end()) least_normal_rank.emplace(b, cand.rank());
        if (b == target) return cand;
    }
    throw Error(ErrorKind::bound_exceeded,
                "no normal term of size <= " + std::to_string(size_bound) + " found");
}

} // namespace thincoalg
