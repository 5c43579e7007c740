#include "thincoalg/graph.hpp"

#include <algorithm>

namespace thincoalg {

Digraph Digraph::reversed() const {
    Digraph r;
    const std::size_t n = node_count();
    r.offsets.assign(n + 1, 0);
    for (std::uint32_t t : targets) ++r.offsets[t + 1];
    for (std::size_t v = 0; v < n; ++v) r.offsets[v + 1] += r.offsets[v];
    r.targets.resize(targets.size());
    std::vector<std::size_t> fill(r.offsets.begin(), r.offsets.end() - 1);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t t : out(v)) r.targets[fill[t]++] = v;
    return r;
}

bool SccResult::nontrivial(const Digraph& g, std::uint32_t comp) const {
    const auto& members = components[comp];
    if (members.size() > 1) return true;
    for (std::uint32_t t : g.out(members.front()))
        if (t == members.front()) return true;
    return false;
}

// Pearce's space-efficient variant of Tarjan's algorithm: one rank array holds the
// DFS index of live nodes and, once a component closes, its id counted down from n.
SccResult strongly_connected_components(const Digraph& g, std::span<const std::uint32_t> roots) {
    const auto n = static_cast<std::uint32_t>(g.node_count());
    std::vector<std::uint32_t> rindex(n, 0);
    std::vector<bool> root(n, false);
    std::vector<std::uint32_t> stack;
    struct Frame {
        std::uint32_t v;
        std::size_t next;
    };
    std::vector<Frame> call;
    std::uint32_t index = 1;
    std::uint32_t c = n;

    auto run = [&](std::uint32_t start) {
        if (rindex[start] != 0) return;
        rindex[start] = index++;
        root[start] = true;
        call.push_back({start, g.offsets[start]});
        while (!call.empty()) {
            Frame& f = call.back();
            const std::uint32_t v = f.v;
            if (f.next < g.offsets[v + 1]) {
                const std::uint32_t w = g.targets[f.next++];
                if (rindex[w] == 0) {
                    rindex[w] = index++;
                    root[w] = true;
                    call.push_back({w, g.offsets[w]});
                } else if (rindex[w] < rindex[v]) {
                    rindex[v] = rindex[w];
                    root[v] = false;
                }
                continue;
            }
            if (root[v]) {
                --index;
                while (!stack.empty() && rindex[v] <= rindex[stack.back()]) {
                    rindex[stack.back()] = c;
                    stack.pop_back();
                    --index;
                }
                rindex[v] = c--;
            } else {
                stack.push_back(v);
            }
            call.pop_back();
            if (!call.empty()) {
                const std::uint32_t parent = call.back().v;
                if (rindex[v] < rindex[parent]) {
                    rindex[parent] = rindex[v];
                    root[parent] = false;
                }
            }
        }
    };

    if (roots.empty()) {
        for (std::uint32_t v = 0; v < n; ++v) run(v);
    } else {
        for (std::uint32_t r : roots) run(r);
    }

    // Ids were handed out from n downwards in emission order.
    SccResult result;
    const std::uint32_t count = n - c;
    result.component_of.assign(n, kNoComponent);
    std::vector<std::uint32_t> sizes(count, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (rindex[v] == 0) continue;
        result.component_of[v] = n - rindex[v];
        ++sizes[n - rindex[v]];
    }
    result.components.resize(count);
    for (std::uint32_t i = 0; i < count; ++i) result.components[i].reserve(sizes[i]);
    for (std::uint32_t v = 0; v < n; ++v)
        if (result.component_of[v] != kNoComponent) result.components[result.component_of[v]].push_back(v);
    return result;
}

std::vector<std::uint32_t> bfs_order(const Digraph& g, std::uint32_t root) {
    std::vector<bool> seen(g.node_count(), false);
    std::vector<std::uint32_t> order{root};
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::uint32_t w : g.out(order[head])) {
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
        }
    }
    return order;
}

} // namespace thincoalg
