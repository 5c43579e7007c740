#include "thincoalg/coalgebra.hpp"

#include <algorithm>
#include <numeric>

namespace thincoalg {

Coalgebra::Coalgebra(SignaturePtr sig, std::vector<Transition> transitions)
    : sig_(std::move(sig)), transitions_(std::move(transitions)) {
    if (!sig_) throw Error(ErrorKind::invalid_argument, "coalgebra needs a signature");
    const std::size_t n = transitions_.size();
    for (std::size_t s = 0; s < n; ++s) {
        Transition& t = transitions_[s];
        for (StateId x : t.tuple) {
            if (x >= n) {
                throw Error(ErrorKind::index_out_of_range,
                            "state " + std::to_string(s) + " refers to state " + std::to_string(x) +
                                " but there are only " + std::to_string(n) + " states");
            }
        }
        t = canonical_tuple(*sig_, t.op, std::move(t.tuple));
    }
}

const Transition& Coalgebra::transition(StateId s) const {
    if (s >= transitions_.size())
        throw Error(ErrorKind::index_out_of_range, "state " + std::to_string(s) + " out of range");
    return transitions_[s];
}

std::size_t Coalgebra::edge_count() const {
    std::size_t e = 0;
    for (const Transition& t : transitions_) e += t.tuple.size();
    return e;
}

Digraph Coalgebra::graph() const {
    Digraph g;
    g.offsets.clear();
    g.offsets.reserve(transitions_.size() + 1);
    g.offsets.push_back(0);
    g.targets.reserve(edge_count());
    for (const Transition& t : transitions_) {
        g.targets.insert(g.targets.end(), t.tuple.begin(), t.tuple.end());
        g.offsets.push_back(g.targets.size());
    }
    return g;
}

PointedCoalgebra::PointedCoalgebra(Coalgebra c, StateId r) : coalg(std::move(c)), root(r) {
    if (root >= coalg.size()) {
        throw Error(ErrorKind::index_out_of_range, "root " + std::to_string(root) +
                                                       " out of range for " +
                                                       std::to_string(coalg.size()) + " states");
    }
}

std::vector<Successor> successors(const Coalgebra& c, StateId t) {
    std::vector<StateId> xs = c.transition(t).tuple;
    std::sort(xs.begin(), xs.end());
    std::vector<Successor> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::uint32_t k = (i > 0 && xs[i - 1] == xs[i]) ? out.back().k + 1 : 0;
        out.push_back({xs[i], k});
    }
    return out;
}

bool FinitePath::is_prefix_of(const FinitePath& other) const {
    if (states.empty() || other.states.empty() || start() != other.start()) return false;
    if (length() > other.length()) return false;
    return std::equal(ks.begin(), ks.end(), other.ks.begin()) &&
           std::equal(states.begin(), states.end(), other.states.begin());
}

bool comparable(const FinitePath& a, const FinitePath& b) {
    return a.is_prefix_of(b) || b.is_prefix_of(a);
}

bool is_path(const Coalgebra& c, const FinitePath& p) {
    if (p.states.size() != p.ks.size() + 1) return false;
    for (StateId s : p.states)
        if (s >= c.size()) return false;
    for (std::size_t j = 0; j < p.ks.size(); ++j) {
        auto suc = successors(c, p.states[j]);
        if (!std::binary_search(suc.begin(), suc.end(), Successor{p.states[j + 1], p.ks[j]}))
            return false;
    }
    return true;
}

namespace {

template <class Visit>
void enumerate_paths(const Coalgebra& c, FinitePath& cur, std::size_t remaining, Visit& visit) {
    if (!visit(cur) || remaining == 0) return;
    for (const Successor& s : successors(c, cur.end())) {
        cur.states.push_back(s.state);
        cur.ks.push_back(s.k);
        enumerate_paths(c, cur, remaining - 1, visit);
        cur.states.pop_back();
        cur.ks.pop_back();
    }
}

} // namespace

std::vector<FinitePath> paths_to_depth(const PointedCoalgebra& pc, std::size_t d) {
    std::vector<FinitePath> out;
    FinitePath cur{{pc.root}, {}};
    auto visit = [&](const FinitePath& p) {
        if (p.length() == d) out.push_back(p);
        return true;
    };
    enumerate_paths(pc.coalg, cur, d, visit);
    return out;
}

BigCount count_paths(const PointedCoalgebra& pc, std::size_t d) {
    const Coalgebra& c = pc.coalg;
    std::vector<BigCount> prev(c.size(), 1), cur(c.size());
    for (std::size_t step = 0; step < d; ++step) {
        for (StateId s = 0; s < c.size(); ++s) {
            BigCount sum = 0;
            for (StateId x : c.transition(s).tuple) sum += prev[x];
            cur[s] = std::move(sum);
        }
        std::swap(prev, cur);
    }
    return prev[pc.root];
}

std::vector<FinitePath> cycles_through(const Coalgebra& c, StateId t, std::size_t maxlen) {
    std::vector<FinitePath> out;
    FinitePath cur{{t}, {}};
    auto visit = [&](const FinitePath& p) {
        if (p.length() > 0 && p.end() == t) out.push_back(p);
        return true;
    };
    enumerate_paths(c, cur, maxlen, visit);
    return out;
}

Condensation sccs(const Coalgebra& c) {
    const Digraph g = c.graph();
    SccResult r = strongly_connected_components(g);
    Condensation out;
    out.component_of = std::move(r.component_of);
    out.nontrivial.resize(r.components.size());
    for (std::uint32_t i = 0; i < r.components.size(); ++i) out.nontrivial[i] = r.nontrivial(g, i);
    out.components = std::move(r.components);
    for (StateId v = 0; v < c.size(); ++v) {
        for (StateId w : g.out(v)) {
            const auto a = out.component_of[v], b = out.component_of[w];
            if (a != b) out.dag_edges.emplace_back(a, b);
        }
    }
    std::sort(out.dag_edges.begin(), out.dag_edges.end());
    out.dag_edges.erase(std::unique(out.dag_edges.begin(), out.dag_edges.end()), out.dag_edges.end());
    return out;
}

std::vector<std::uint32_t> behavioural_partition(const Coalgebra& c) {
    const std::size_t n = c.size();
    const Signature& sig = c.signature();
    std::vector<std::uint32_t> block(n, 0);
    std::size_t block_count = n == 0 ? 0 : 1;
    std::vector<Transition> keys(n);
    std::vector<StateId> order(n);
    for (;;) {
        for (StateId s = 0; s < n; ++s)
            keys[s] = map_elem(sig, c.transition(s), [&](StateId x) { return block[x]; });
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](StateId a, StateId b) {
            if (block[a] != block[b]) return block[a] < block[b];
            return keys[a] < keys[b];
        });
        std::vector<std::uint32_t> next(n);
        std::uint32_t id = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && (block[order[i]] != block[order[i - 1]] || keys[order[i]] != keys[order[i - 1]]))
                ++id;
            next[order[i]] = id;
        }
        const std::size_t new_count = n == 0 ? 0 : id + 1;
        block = std::move(next);
        if (new_count == block_count) break;
        block_count = new_count;
    }
    return block;
}

namespace {

// Quotient of `c` by `cls` restricted to classes reachable from cls[root], numbered breadth-first.
Minimized quotient(const Coalgebra& c, StateId root, const std::vector<std::uint32_t>& cls) {
    const Signature& sig = c.signature();
    std::uint32_t count = 0;
    for (std::uint32_t b : cls) count = std::max(count, b + 1);
    std::vector<StateId> rep(count, kNoState);
    for (StateId s = 0; s < c.size(); ++s)
        if (rep[cls[s]] == kNoState) rep[cls[s]] = s;

    std::vector<StateId> number(count, kNoState);
    std::vector<std::uint32_t> queue{cls[root]};
    number[cls[root]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (StateId x : c.transition(rep[queue[head]]).tuple) {
            if (number[cls[x]] == kNoState) {
                number[cls[x]] = static_cast<StateId>(queue.size());
                queue.push_back(cls[x]);
            }
        }
    }
    std::vector<Transition> trans;
    trans.reserve(queue.size());
    for (std::uint32_t b : queue)
        trans.push_back(map_elem(sig, c.transition(rep[b]), [&](StateId x) { return number[cls[x]]; }));
    std::vector<StateId> mapping(c.size(), kNoState);
    for (StateId s = 0; s < c.size(); ++s) mapping[s] = number[cls[s]];
    return {PointedCoalgebra(Coalgebra(c.signature_ptr(), std::move(trans)), 0), std::move(mapping)};
}

} // namespace

Minimized restrict_reachable(const PointedCoalgebra& pc) {
    const Coalgebra& c = pc.coalg;
    std::vector<StateId> order = bfs_order(c.graph(), pc.root);
    std::vector<StateId> number(c.size(), kNoState);
    for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = static_cast<StateId>(i);
    std::vector<Transition> trans;
    trans.reserve(order.size());
    for (StateId s : order) {
        Transition t = c.transition(s);
        for (StateId& x : t.tuple) x = number[x];
        trans.push_back(std::move(t));
    }
    return {PointedCoalgebra(Coalgebra(c.signature_ptr(), std::move(trans)), 0), std::move(number)};
}

Minimized minimize(const PointedCoalgebra& pc) {
    Minimized reach = restrict_reachable(pc);
    const std::vector<std::uint32_t> blocks = behavioural_partition(reach.pc.coalg);
    Minimized q = quotient(reach.pc.coalg, reach.pc.root, blocks);
    for (StateId& m : reach.mapping)
        if (m != kNoState) m = q.mapping[m];
    return {std::move(q.pc), std::move(reach.mapping)};
}

DisjointUnion disjoint_union(const Coalgebra& a, const Coalgebra& b) {
    if (!(a.signature() == b.signature()))
        throw Error(ErrorKind::signature_mismatch, "coalgebras have different signatures");
    std::vector<Transition> trans = a.transitions();
    const auto offset = static_cast<StateId>(a.size());
    for (Transition t : b.transitions()) {
        for (StateId& x : t.tuple) x += offset;
        trans.push_back(std::move(t));
    }
    return {Coalgebra(a.signature_ptr(), std::move(trans)), offset};
}

bool beh_equal(const PointedCoalgebra& a, const PointedCoalgebra& b) {
    DisjointUnion u = disjoint_union(a.coalg, b.coalg);
    const std::vector<std::uint32_t> blocks = behavioural_partition(u.coalg);
    return blocks[a.root] == blocks[u.offset + b.root];
}

bool is_morphism(const Coalgebra& a, const Coalgebra& b, const std::vector<StateId>& f) {
    if (!(a.signature() == b.signature()) || f.size() != a.size()) return false;
    for (StateId y : f)
        if (y >= b.size()) return false;
    for (StateId s = 0; s < a.size(); ++s) {
        if (map_elem(a.signature(), a.transition(s), [&](StateId x) { return f[x]; }) != b.transition(f[s]))
            return false;
    }
    return true;
}

} // namespace thincoalg
