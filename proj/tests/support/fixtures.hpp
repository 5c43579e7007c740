#pragma once

#include <thincoalg/coalgebra.hpp>
#include <thincoalg/term.hpp>

namespace fixtures {

using namespace thincoalg;

// Server s spawning workers w1 (loops forever) and w2 (halts); s returns to itself.
// States: s = 0, w1 = 1, w2 = 2.
inline PointedCoalgebra server() {
    auto sig = stock::server();
    const OpIndex halt = sig->index_of("halt"), step = sig->index_of("step"), spawn = sig->index_of("spawn");
    return PointedCoalgebra(Coalgebra(sig, {{spawn, {0, 1, 2}}, {step, {1}}, {halt, {}}}), 0);
}

// One state whose transition is the bag {s, s}.
inline PointedCoalgebra bag_pair() {
    auto sig = stock::bag(2);
    return PointedCoalgebra(Coalgebra(sig, {{sig->index_of("bag2"), {0, 0}}}), 0);
}

// Full binary tree as a one-state polynomial coalgebra.
inline PointedCoalgebra binary_tree() {
    auto sig = stock::polynomial012();
    return PointedCoalgebra(Coalgebra(sig, {{sig->index_of("op2"), {0, 0}}}), 0);
}

// Unary cycle of length n.
inline PointedCoalgebra unary_loop(StateId n = 1) {
    auto sig = stock::polynomial012();
    std::vector<Transition> t;
    for (StateId i = 0; i < n; ++i) t.push_back({sig->index_of("op1"), {(i + 1) % n}});
    return PointedCoalgebra(Coalgebra(sig, std::move(t)), 0);
}

// Loop at 0 that also exits to a second loop at 1: 0 ↦ op2(0, 1), 1 ↦ op1(1).
inline PointedCoalgebra loop_with_exit() {
    auto sig = stock::polynomial012();
    return PointedCoalgebra(Coalgebra(sig, {{2, {0, 1}}, {1, {1}}}), 0);
}

inline OpIndex op(const Signature& sig, const char* id) { return sig.index_of(id); }

inline Term leaf(const Signature& sig) { return Term::f(sig, sig.index_of("op0"), {}); }

inline Term u_omega(const Signature& sig) { return unary_omega(sig, sig.index_of("op1")); }

inline TermCtx ctx(const Signature& sig, const char* id, std::uint32_t hole, std::vector<Term> sides) {
    return canonical_context(sig, sig.index_of(id), hole, std::move(sides));
}

} // namespace fixtures
