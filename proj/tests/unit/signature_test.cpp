#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include <thincoalg/random.hpp>
#include <thincoalg/signature.hpp>

#include "../support/oracles.hpp"

using namespace thincoalg;

namespace {

const Permutation swap01{1, 0, 2};
const Permutation swap12{0, 2, 1};
const Permutation rot3{1, 2, 0};

} // namespace

TEST(PermGroup, EmptyGeneratorsGiveTrivialGroup) {
    PermGroup g = PermGroup::generate(3, {});
    EXPECT_EQ(g.order(), 1u);
    EXPECT_TRUE(g.is_trivial());
    EXPECT_EQ(g.elements().front(), (Permutation{0, 1, 2}));
}

TEST(PermGroup, TwoTranspositionsGenerateSym3) {
    std::vector<Permutation> gens{swap01, swap12};
    PermGroup g = PermGroup::generate(3, gens);
    EXPECT_EQ(g.order(), 6u);
    EXPECT_TRUE(g.is_symmetric());
    auto expected = oracle::group_closure(3, gens);
    EXPECT_EQ(std::set<Permutation>(g.elements().begin(), g.elements().end()), expected);
}

TEST(PermGroup, RotationGeneratesCyclicGroup) {
    std::vector<Permutation> gens{rot3};
    PermGroup g = PermGroup::generate(3, gens);
    EXPECT_EQ(g.order(), 3u);
    EXPECT_FALSE(g.is_symmetric());
    EXPECT_EQ(std::set<Permutation>(g.elements().begin(), g.elements().end()), oracle::group_closure(3, gens));
}

TEST(PermGroup, ElementsAreSortedWithIdentityFirst) {
    std::vector<Permutation> gens{{1, 2, 3, 0}, {1, 0, 2, 3}};
    PermGroup g = PermGroup::generate(4, gens);
    EXPECT_EQ(g.order(), 24u);
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
    EXPECT_EQ(g.elements().front(), identity_permutation(4));
}

TEST(PermGroup, GroupLawsOnRandomGenerators) {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng.between(1, 5);
        std::vector<Permutation> gens;
        for (std::size_t i = 0, m = rng.between(0, 2); i < m; ++i) {
            Permutation p = identity_permutation(n);
            for (std::size_t k = n; k > 1; --k) std::swap(p[k - 1], p[rng.below(k)]);
            gens.push_back(p);
        }
        PermGroup g = PermGroup::generate(n, gens);
        EXPECT_TRUE(g.contains(identity_permutation(n)));
        for (const Permutation& a : g.elements()) {
            EXPECT_TRUE(g.contains(inverse(a)));
            for (const Permutation& b : g.elements()) EXPECT_TRUE(g.contains(compose(a, b)));
        }
        for (const Permutation& x : gens) EXPECT_TRUE(g.contains(x));
        EXPECT_EQ(std::set<Permutation>(g.elements().begin(), g.elements().end()), oracle::group_closure(n, gens));
    }
}

TEST(PermGroup, RejectsMalformedPermutations) {
    const std::vector<Permutation> repeated{{0, 0, 1}};
    const std::vector<Permutation> short_one{{1, 0}};
    const std::vector<Permutation> out_of_range{{0, 1, 3}};
    for (const auto* gens : {&repeated, &short_one, &out_of_range}) {
        try {
            PermGroup::generate(3, *gens);
            FAIL() << "expected an error";
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::malformed_permutation);
        }
    }
}

TEST(PermGroup, ArityCap) {
    try {
        PermGroup::generate(9, {}, 8);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::arity_cap_exceeded);
    }
    EXPECT_EQ(PermGroup::generate(9, {}, 9).order(), 1u);
}

TEST(PermGroup, ArityCapFromEnvironment) {
    ::setenv("THINCOALG_ARITY_CAP", "3", 1);
    EXPECT_EQ(default_arity_cap(), 3u);
    EXPECT_THROW(make_signature({{{"big", 4, {}}}}), Error);
    ::unsetenv("THINCOALG_ARITY_CAP");
    EXPECT_EQ(default_arity_cap(), kDefaultArityCap);
    EXPECT_NO_THROW(make_signature({{{"big", 4, {}}}}));
}

TEST(Signature, DuplicateIdsRejected) {
    try {
        make_signature({{{"a", 0, {}}, {"a", 1, {}}}});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::duplicate_op);
    }
}

TEST(Signature, UnknownOp) {
    auto sig = stock::polynomial012();
    EXPECT_EQ(sig->index_of("op2"), 2u);
    EXPECT_FALSE(sig->find("nope").has_value());
    try {
        sig->index_of("nope");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_op);
    }
}

TEST(Signature, Polynomiality) {
    EXPECT_TRUE(stock::polynomial012()->is_polynomial());
    EXPECT_FALSE(stock::bag(2)->is_polynomial());
    EXPECT_FALSE(stock::server()->is_polynomial());
}

TEST(Signature, EqualityComparesGroupsNotGenerators) {
    auto a = make_signature({{{"b", 3, {{1, 0, 2}, {0, 2, 1}}}}});
    auto b = make_signature({{{"b", 3, {{1, 2, 0}, {1, 0, 2}}}}});
    auto c = make_signature({{{"b", 3, {{1, 2, 0}}}}});
    EXPECT_TRUE(*a == *b);
    EXPECT_FALSE(*a == *c);
}

TEST(CanonicalTuple, BagSortsItsElements) {
    auto sig = stock::bag(2);
    auto e = canonical_tuple<int>(*sig, "bag2", {1, 0});
    EXPECT_EQ(e.tuple, (std::vector<int>{0, 1}));
}

TEST(CanonicalTuple, ServerSwapsTheWorkers) {
    auto sig = stock::server();
    // s < w1 < w2 as 0 < 1 < 2.
    auto e = canonical_tuple<int>(*sig, "spawn", {0, 2, 1});
    EXPECT_EQ(e.tuple, (std::vector<int>{0, 1, 2}));
    auto f = canonical_tuple<int>(*sig, "spawn", {2, 1, 0});
    EXPECT_EQ(f.tuple, (std::vector<int>{2, 0, 1}));
}

TEST(CanonicalTuple, PolynomialKeepsOrder) {
    auto sig = stock::polynomial012();
    EXPECT_EQ(canonical_tuple<int>(*sig, "op2", {1, 0}).tuple, (std::vector<int>{1, 0}));
}

TEST(CanonicalTuple, Errors) {
    auto sig = stock::polynomial012();
    try {
        canonical_tuple<int>(*sig, "op2", {1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::length_mismatch);
    }
    try {
        canonical_tuple<int>(*sig, OpIndex{9}, {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_op);
    }
}

TEST(CanonicalTuple, MatchesOrbitMinimumOnRandomInputs) {
    auto sig = make_signature({{{"c4", 4, {{1, 2, 3, 0}}},
                                {"d4", 4, {{1, 2, 3, 0}, {3, 2, 1, 0}}},
                                {"pair", 4, {{1, 0, 2, 3}}},
                                {"s4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}}}});
    Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        const auto op = static_cast<OpIndex>(rng.below(sig->size()));
        std::vector<int> raw(4);
        for (int& x : raw) x = static_cast<int>(rng.below(3));
        const auto& ops = sig->op(op);
        auto orbit = oracle::orbit(oracle::group_closure(4, ops.generators), raw);
        auto e = canonical_tuple(*sig, op, raw);
        EXPECT_EQ(e.tuple, *orbit.begin());
        // Every member of the orbit canonicalises identically.
        for (const auto& member : orbit) EXPECT_EQ(canonical_tuple(*sig, op, member), e);
    }
}

TEST(CanonicalContext, BagHolesAreIdentified) {
    auto sig = stock::bag(2);
    EXPECT_EQ(canonical_context<int>(*sig, "bag2", 1, {5}), canonical_context<int>(*sig, "bag2", 0, {5}));
    EXPECT_EQ(canonical_context<int>(*sig, "bag2", 1, {5}).hole, 0u);
}

TEST(CanonicalContext, PolynomialHolesAreDistinct) {
    auto sig = stock::polynomial012();
    EXPECT_NE(canonical_context<int>(*sig, "op2", 0, {5}), canonical_context<int>(*sig, "op2", 1, {5}));
}

TEST(CanonicalContext, CyclicRotationIdentifiesContexts) {
    auto sig = stock::cyclic(3);
    // (□, a, b) rotated is (b, □, a).
    const int a = 1, b = 2;
    auto x = canonical_context<int>(*sig, "cyc3", 0, {a, b});
    auto y = canonical_context<int>(*sig, "cyc3", 1, {b, a});
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.hole, 0u);
    EXPECT_EQ(x.sides, (std::vector<int>{a, b}));
    EXPECT_NE(x, canonical_context<int>(*sig, "cyc3", 0, {b, a}));
}

TEST(CanonicalContext, Errors) {
    auto sig = stock::polynomial012();
    try {
        canonical_context<int>(*sig, "op2", 2, {1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::index_out_of_range);
    }
    try {
        canonical_context<int>(*sig, "op2", 0, {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::length_mismatch);
    }
}

TEST(Plug, ServerContext) {
    auto sig = stock::server();
    const int s = 0, w1 = 1, w2 = 2;
    auto c = canonical_context<int>(*sig, "spawn", 0, {w1, w2});
    auto e = plug(*sig, c, s);
    EXPECT_EQ(e.op, sig->index_of("spawn"));
    EXPECT_EQ(e.tuple, (std::vector<int>{s, w1, w2}));
}

TEST(Plug, BagAndUnary) {
    auto bag = stock::bag(2);
    EXPECT_EQ(plug(*bag, canonical_context<int>(*bag, "bag2", 0, {7}), 3).tuple, (std::vector<int>{3, 7}));
    auto poly = stock::polynomial012();
    auto e = plug(*poly, canonical_context<int>(*poly, "op1", 0, {}), 4);
    EXPECT_EQ(e.op, poly->index_of("op1"));
    EXPECT_EQ(e.tuple, (std::vector<int>{4}));
}

TEST(Base, ImagesCollapseDuplicates) {
    auto server = stock::server();
    EXPECT_EQ(base(canonical_tuple<int>(*server, "spawn", {0, 1, 2})), (std::vector<int>{0, 1, 2}));
    auto bag = stock::bag(2);
    EXPECT_EQ(base(canonical_tuple<int>(*bag, "bag2", {4, 4})), (std::vector<int>{4}));
    auto poly = stock::polynomial012();
    EXPECT_EQ(base_ctx(canonical_context<int>(*poly, "op2", 0, {9})), (std::vector<int>{9}));
}

TEST(Decompositions, PolynomialPairKeepsBothHoles) {
    auto sig = stock::polynomial012();
    const int a = 3;
    auto ds = decompositions(*sig, canonical_tuple<int>(*sig, "op2", {a, a}));
    ASSERT_EQ(ds.size(), 2u);
    EXPECT_EQ(ds[0].first, canonical_context<int>(*sig, "op2", 0, {a}));
    EXPECT_EQ(ds[1].first, canonical_context<int>(*sig, "op2", 1, {a}));
    EXPECT_EQ(ds[0].second, a);
}

TEST(Decompositions, BagPairHasOne) {
    auto sig = stock::bag(2);
    auto ds = decompositions(*sig, canonical_tuple<int>(*sig, "bag2", {3, 3}));
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].first.sides, (std::vector<int>{3}));
    EXPECT_EQ(ds[0].second, 3);
}

TEST(Decompositions, ServerHasOnePerElement) {
    auto sig = stock::server();
    auto ds = decompositions(*sig, canonical_tuple<int>(*sig, "spawn", {0, 1, 2}));
    ASSERT_EQ(ds.size(), 3u);
    std::set<int> xs;
    for (const auto& [c, x] : ds) {
        xs.insert(x);
        EXPECT_EQ(plug(*sig, c, x), canonical_tuple<int>(*sig, "spawn", {0, 1, 2}));
    }
    EXPECT_EQ(xs, (std::set<int>{0, 1, 2}));
}

TEST(MapElem, IdentityConstantAndSwap) {
    auto poly = stock::polynomial012();
    auto e = canonical_tuple<int>(*poly, "op2", {0, 1});
    EXPECT_EQ(map_elem(*poly, e, [](int x) { return x; }), e);
    EXPECT_EQ(map_elem(*poly, e, [](int x) { return 1 - x; }).tuple, (std::vector<int>{1, 0}));
    auto bag = stock::bag(2);
    auto b = canonical_tuple<int>(*bag, "bag2", {0, 1});
    EXPECT_EQ(map_elem(*bag, b, [](int) { return 5; }).tuple, (std::vector<int>{5, 5}));
    // Mapping re-canonicalises: under the bag, swapping the elements is invisible.
    EXPECT_EQ(map_elem(*bag, b, [](int x) { return 1 - x; }), b);
}

TEST(MapElem, BaseCommutesWithDirectImage) {
    auto sig = stock::server();
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        std::vector<int> raw{int(rng.below(5)), int(rng.below(5)), int(rng.below(5))};
        auto e = canonical_tuple(*sig, OpIndex{2}, raw);
        auto f = [](int x) { return x / 2; };
        std::vector<int> image;
        for (int x : base(e)) image.push_back(f(x));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        EXPECT_EQ(base(map_elem(*sig, e, f)), image);
    }
}
