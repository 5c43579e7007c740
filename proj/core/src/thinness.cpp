#include "thincoalg/thinness.hpp"

#include <algorithm>

namespace thincoalg {

namespace {

// Multiplicity index of the edge at tuple position `pos` of state `s`.
std::uint32_t multiplicity_index(const Transition& t, std::size_t pos) {
    std::uint32_t k = 0;
    for (std::size_t i = 0; i < pos; ++i)
        if (t.tuple[i] == t.tuple[pos]) ++k;
    return k;
}

// Shortest path from `from` to `to` using only edges allowed by `inside`, by BFS.
template <class Inside>
FinitePath shortest_path(const Coalgebra& c, StateId from, StateId to, Inside inside) {
    std::vector<StateId> parent(c.size(), kNoState);
    std::vector<std::uint32_t> parent_k(c.size(), 0);
    std::vector<StateId> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size() && parent[to] == kNoState; ++head) {
        const StateId v = queue[head];
        const Transition& t = c.transition(v);
        for (std::size_t pos = 0; pos < t.tuple.size(); ++pos) {
            const StateId w = t.tuple[pos];
            if (parent[w] != kNoState || !inside(w)) continue;
            parent[w] = v;
            parent_k[w] = multiplicity_index(t, pos);
            queue.push_back(w);
        }
    }
    FinitePath p;
    for (StateId v = to; v != from; v = parent[v]) {
        p.states.push_back(v);
        p.ks.push_back(parent_k[v]);
    }
    p.states.push_back(from);
    std::reverse(p.states.begin(), p.states.end());
    std::reverse(p.ks.begin(), p.ks.end());
    return p;
}

FinitePath concat(FinitePath a, const FinitePath& b) {
    a.states.insert(a.states.end(), b.states.begin() + 1, b.states.end());
    a.ks.insert(a.ks.end(), b.ks.begin(), b.ks.end());
    return a;
}

} // namespace

ThinVerdict is_thin(const PointedCoalgebra& pc) {
    const Coalgebra& c = pc.coalg;
    const Digraph g = c.graph();
    const StateId roots[] = {pc.root};
    const SccResult scc = strongly_connected_components(g, roots);

    for (std::uint32_t comp = 0; comp < scc.components.size(); ++comp) {
        if (!scc.nontrivial(g, comp)) continue;
        for (StateId v : scc.components[comp]) {
            std::vector<Successor> inner;
            for (const Successor& s : successors(c, v))
                if (scc.component_of[s.state] == comp) inner.push_back(s);
            if (inner.size() <= 1) continue;

            auto in_comp = [&](StateId w) { return scc.component_of[w] == comp; };
            ThinWitness w;
            w.access = shortest_path(c, pc.root, v, [](StateId) { return true; });
            FinitePath* cycles[2] = {&w.cycle1, &w.cycle2};
            for (int i = 0; i < 2; ++i) {
                FinitePath first{{v, inner[i].state}, {inner[i].k}};
                FinitePath back = shortest_path(c, inner[i].state, v, in_comp);
                *cycles[i] = concat(std::move(first), back);
            }
            return {false, std::move(w)};
        }
    }
    return {true, std::nullopt};
}

bool oracle_is_thin(const PointedCoalgebra& pc, std::size_t maxlen) {
    const Coalgebra& c = pc.coalg;
    const std::size_t n = c.size();
    if (maxlen < 2 * n) {
        throw Error(ErrorKind::invalid_argument,
                    "cycle length bound " + std::to_string(maxlen) + " is below twice the state count");
    }
    // Reachable states from the root.
    std::vector<bool> reach(n, false);
    std::vector<StateId> order{pc.root};
    reach[pc.root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (StateId w : c.transition(order[head]).tuple) {
            if (!reach[w]) {
                reach[w] = true;
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<StateId>> preds(n);
    for (StateId v = 0; v < n; ++v)
        for (StateId w : c.transition(v).tuple) preds[w].push_back(v);

    for (StateId t : order) {
        // dist[v] = length of a shortest path v →⁺ t or v = t (0); used only to prune
        // partial paths that cannot close into a cycle within the bound.
        constexpr std::size_t inf = static_cast<std::size_t>(-1);
        std::vector<std::size_t> dist(n, inf);
        dist[t] = 0;
        std::vector<StateId> queue{t};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (StateId u : preds[queue[head]]) {
                if (dist[u] == inf) {
                    dist[u] = dist[queue[head]] + 1;
                    queue.push_back(u);
                }
            }
        }

        std::vector<FinitePath> found;
        FinitePath cur{{t}, {}};
        bool incomparable = false;
        auto dfs = [&](auto& self) -> void {
            if (incomparable) return;
            if (cur.length() > 0 && cur.end() == t) {
                for (const FinitePath& other : found) {
                    if (!comparable(other, cur)) {
                        incomparable = true;
                        return;
                    }
                }
                found.push_back(cur);
            }
            const std::size_t remaining = maxlen - cur.length();
            if (remaining == 0) return;
            for (const Successor& s : successors(c, cur.end())) {
                if (dist[s.state] == inf || dist[s.state] + 1 > remaining) continue;
                cur.states.push_back(s.state);
                cur.ks.push_back(s.k);
                self(self);
                cur.states.pop_back();
                cur.ks.pop_back();
                if (incomparable) return;
            }
        };
        dfs(dfs);
        if (incomparable) return false;
    }
    return true;
}

bool witness_valid(const PointedCoalgebra& pc, const ThinWitness& w) {
    const Coalgebra& c = pc.coalg;
    if (!is_path(c, w.access) || !is_path(c, w.cycle1) || !is_path(c, w.cycle2)) return false;
    if (w.access.start() != pc.root) return false;
    const StateId t = w.access.end();
    for (const FinitePath* p : {&w.cycle1, &w.cycle2})
        if (p->length() == 0 || p->start() != t || p->end() != t) return false;
    return !comparable(w.cycle1, w.cycle2);
}

std::string to_string(const PathCountClass& c) {
    switch (c.kind) {
    case PathCountClass::Kind::zero: return "zero";
    case PathCountClass::Kind::finite: return "finite(" + c.count.str() + ")";
    case PathCountClass::Kind::countably_infinite: return "countably-infinite";
    case PathCountClass::Kind::uncountable: return "uncountable";
    }
    return "";
}

PathCountClass count_infinite_paths_class(const PointedCoalgebra& pc) {
    using Kind = PathCountClass::Kind;
    if (!is_thin(pc).thin) return {Kind::uncountable, 0};
    const Coalgebra& c = pc.coalg;
    const Digraph g = c.graph();
    const StateId roots[] = {pc.root};
    const SccResult scc = strongly_connected_components(g, roots);

    // Components come sinks first, so successors are settled before predecessors.
    std::vector<bool> productive(c.size(), false);
    std::vector<BigCount> paths(c.size(), 0);
    bool countable = false;
    for (std::uint32_t comp = 0; comp < scc.components.size(); ++comp) {
        const auto& members = scc.components[comp];
        if (scc.nontrivial(g, comp)) {
            for (StateId v : members) {
                productive[v] = true;
                paths[v] = 1;
                for (StateId w : g.out(v))
                    if (scc.component_of[w] != comp && productive[w]) countable = true;
            }
        } else {
            const StateId v = members.front();
            for (StateId w : g.out(v)) {
                if (productive[w]) {
                    productive[v] = true;
                    paths[v] += paths[w];
                }
            }
        }
    }
    if (!productive[pc.root]) return {Kind::zero, 0};
    // Every component in `scc` is reachable from the root.
    if (countable) return {Kind::countably_infinite, 0};
    return {Kind::finite, paths[pc.root]};
}

} // namespace thincoalg
