#include "thincoalg/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace thincoalg {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "Rng::below(0)");
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x < threshold);
    return x % n;
}

namespace {

std::vector<OpIndex> ops_where(const Signature& sig, auto pred) {
    std::vector<OpIndex> out;
    for (OpIndex i = 0; i < sig.size(); ++i)
        if (pred(sig.arity(i))) out.push_back(i);
    return out;
}

OpIndex pick(Rng& rng, const std::vector<OpIndex>& ops, const char* what) {
    if (ops.empty()) throw Error(ErrorKind::invalid_argument, std::string("signature has no ") + what);
    return ops[rng.below(ops.size())];
}

Coalgebra random_shape(const SignaturePtr& sig, std::size_t n, Rng& rng, const CoalgebraGenOptions& opts) {
    const Signature& s = *sig;
    std::vector<OpIndex> lo_ops, hi_ops;
    std::uint64_t hi_weight = 0;
    constexpr std::uint64_t scale = 1000000;
    if (opts.mean_degree) {
        const double m = *opts.mean_degree;
        std::size_t lo = 0, hi = 0;
        bool has_lo = false, has_hi = false;
        for (OpIndex i = 0; i < s.size(); ++i) {
            const std::size_t a = s.arity(i);
            if (a <= m && (!has_lo || a > lo)) lo = a, has_lo = true;
            if (a >= m && (!has_hi || a < hi)) hi = a, has_hi = true;
        }
        if (!has_lo || !has_hi) {
            throw Error(ErrorKind::invalid_argument, "mean degree outside the range of the signature's arities");
        }
        lo_ops = ops_where(s, [&](std::size_t a) { return a == lo; });
        hi_ops = ops_where(s, [&](std::size_t a) { return a == hi; });
        hi_weight = hi == lo ? 0 : static_cast<std::uint64_t>(std::llround((m - lo) / (hi - lo) * scale));
    } else {
        lo_ops = ops_where(s, [](std::size_t) { return true; });
    }
    std::vector<Transition> trans(n);
    for (std::size_t v = 0; v < n; ++v) {
        const OpIndex op = rng.below(scale) < hi_weight ? pick(rng, hi_ops, "ops") : pick(rng, lo_ops, "ops");
        Transition t{op, std::vector<StateId>(s.arity(op))};
        for (StateId& x : t.tuple) x = static_cast<StateId>(rng.below(n));
        trans[v] = std::move(t);
    }
    return Coalgebra(sig, std::move(trans));
}

Coalgebra thin_shape(const SignaturePtr& sig, std::size_t n, Rng& rng, const CoalgebraGenOptions& opts) {
    const Signature& s = *sig;
    const auto any = ops_where(s, [](std::size_t) { return true; });
    const auto leaves = ops_where(s, [](std::size_t a) { return a == 0; });
    const auto unary = ops_where(s, [](std::size_t a) { return a == 1; });
    const auto branching = ops_where(s, [](std::size_t a) { return a >= 1; });

    // Blocks of consecutive states; loop blocks are cycles, and every other edge points forward.
    std::vector<Transition> trans(n);
    for (std::size_t a = 0; a < n;) {
        // Without a nullary op the last state must close a loop.
        const bool loop = rng.chance(opts.loop_percent, 100) || (a + 1 == n && leaves.empty());
        const std::size_t len = loop ? rng.between(1, std::min<std::size_t>(3, n - a)) : 1;
        const std::size_t b = a + len;  // exclusive
        const bool later = b < n;
        auto forward = [&] { return static_cast<StateId>(rng.between(b, n - 1)); };
        for (std::size_t v = a; v < b; ++v) {
            if (loop) {
                const OpIndex op = later ? pick(rng, branching, "op of positive arity") : pick(rng, unary, "unary op");
                Transition t{op, std::vector<StateId>(s.arity(op))};
                const std::size_t inner = rng.below(t.tuple.size());
                for (std::size_t k = 0; k < t.tuple.size(); ++k)
                    t.tuple[k] = k == inner ? static_cast<StateId>(v + 1 == b ? a : v + 1) : forward();
                trans[v] = std::move(t);
            } else {
                const OpIndex op = later ? pick(rng, any, "ops") : pick(rng, leaves, "nullary op");
                Transition t{op, std::vector<StateId>(s.arity(op))};
                for (StateId& x : t.tuple) x = forward();
                trans[v] = std::move(t);
            }
        }
        a = b;
    }
    // Relabel so that loops are not always on consecutive indices.
    std::vector<StateId> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Transition> shuffled(n);
    for (std::size_t v = 0; v < n; ++v) {
        Transition t = trans[v];
        for (StateId& x : t.tuple) x = perm[x];
        shuffled[perm[v]] = std::move(t);
    }
    return Coalgebra(sig, std::move(shuffled));
}

Term gen_term(const Signature& sig, Rng& rng, const TermGenOptions& opts, std::uint32_t depth) {
    const auto leaves = ops_where(sig, [](std::size_t a) { return a == 0; });
    const auto unary = ops_where(sig, [](std::size_t a) { return a == 1; });
    const auto branching = ops_where(sig, [](std::size_t a) { return a >= 1; });
    if (depth == 0) {
        const std::size_t choices = leaves.size() + unary.size();
        if (choices == 0) throw Error(ErrorKind::invalid_argument, "signature has no nullary or unary op");
        const std::size_t i = rng.below(choices);
        if (i < leaves.size()) return Term::f(sig, leaves[i], {});
        return unary_omega(sig, unary[i - leaves.size()]);
    }
    if (!branching.empty() && rng.chance(opts.g_percent, 100)) {
        auto ctx = [&] {
            const OpIndex op = pick(rng, branching, "op of positive arity");
            const auto hole = static_cast<std::uint32_t>(rng.below(sig.arity(op)));
            std::vector<Term> sides;
            for (std::size_t k = 1; k < sig.arity(op); ++k) sides.push_back(gen_term(sig, rng, opts, depth - 1));
            return TermCtx{op, hole, std::move(sides)};
        };
        std::vector<TermCtx> prefix, period;
        const std::size_t np = rng.between(0, opts.max_prefix);
        for (std::size_t i = 0; i < np; ++i) prefix.push_back(ctx());
        const std::size_t nq = rng.between(1, std::max<std::uint32_t>(1, opts.max_period));
        for (std::size_t i = 0; i < nq; ++i) period.push_back(ctx());
        return Term::g(sig, std::move(prefix), std::move(period));
    }
    const OpIndex op = pick(rng, ops_where(sig, [](std::size_t) { return true; }), "ops");
    std::vector<Term> children;
    for (std::size_t k = 0; k < sig.arity(op); ++k) children.push_back(gen_term(sig, rng, opts, depth - 1));
    return Term::f(sig, op, std::move(children));
}

} // namespace

Coalgebra random_coalgebra(const SignaturePtr& sig, std::size_t states, Rng& rng,
                           const CoalgebraGenOptions& opts) {
    if (states == 0) throw Error(ErrorKind::invalid_argument, "a coalgebra needs at least one state");
    if (states > std::numeric_limits<StateId>::max() / 2)
        throw Error(ErrorKind::bound_exceeded, "too many states requested");
    return opts.shape == CoalgebraGenOptions::Shape::thin ? thin_shape(sig, states, rng, opts)
                                                          : random_shape(sig, states, rng, opts);
}

Term random_term(const Signature& sig, Rng& rng, const TermGenOptions& opts) {
    return gen_term(sig, rng, opts, opts.max_depth);
}

} // namespace thincoalg
