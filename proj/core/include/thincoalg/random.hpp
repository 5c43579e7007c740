#pragma once

// Seeded generators for property corpora. Output depends only on the seed:
// sampling avoids the standard distributions, whose algorithms vary by library.

#include <cstdint>
#include <optional>
#include <random>

#include "thincoalg/coalgebra.hpp"
#include "thincoalg/term.hpp"

namespace thincoalg {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

struct CoalgebraGenOptions {
    enum class Shape { random, thin };
    Shape shape = Shape::random;
    /// Random shape: target mean arity, met by mixing two ops of bracketing arities.
    /// Unset picks ops uniformly.
    std::optional<double> mean_degree;
    /// Thin shape: percentage of states placed on loops.
    std::uint32_t loop_percent = 30;
};

/// A coalgebra with `states` states; every transition is drawn independently.
Coalgebra random_coalgebra(const SignaturePtr& sig, std::size_t states, Rng& rng,
                           const CoalgebraGenOptions& opts = {});

struct TermGenOptions {
    std::uint32_t max_depth = 3;
    /// Probability, in percent, that an inner node is a G-node.
    std::uint32_t g_percent = 40;
    std::uint32_t max_prefix = 2;
    std::uint32_t max_period = 2;
};

Term random_term(const Signature& sig, Rng& rng, const TermGenOptions& opts = {});

} // namespace thincoalg
