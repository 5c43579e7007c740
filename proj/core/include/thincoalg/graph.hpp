#pragma once

// Compressed adjacency lists and strongly connected components (iterative).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace thincoalg {

inline constexpr std::uint32_t kNoComponent = std::numeric_limits<std::uint32_t>::max();

/// Multigraph in CSR form: the out-edges of v are targets[offsets[v] .. offsets[v+1]).
struct Digraph {
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> targets;

    std::size_t node_count() const { return offsets.size() - 1; }
    std::size_t edge_count() const { return targets.size(); }
    std::span<const std::uint32_t> out(std::uint32_t v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
    Digraph reversed() const;
};

struct SccResult {
    /// Components in the order Tarjan emits them, which is reverse topological:
    /// every edge leaving a component points to an earlier one.
    std::vector<std::vector<std::uint32_t>> components;
    /// Component index per node; kNoComponent for nodes not reached from the roots.
    std::vector<std::uint32_t> component_of;

    /// A component is nontrivial when it contains a cycle (size > 1 or a self-edge).
    bool nontrivial(const Digraph& g, std::uint32_t comp) const;
};

/// SCCs of the part of `g` reachable from `roots` (all nodes when `roots` is empty).
SccResult strongly_connected_components(const Digraph& g, std::span<const std::uint32_t> roots = {});

/// Nodes reachable from `root` in breadth-first order.
std::vector<std::uint32_t> bfs_order(const Digraph& g, std::uint32_t root);

} // namespace thincoalg
