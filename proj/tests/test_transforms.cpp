#include <doctest.h>

#include <random>

#include "subneg/hist.hpp"
#include "subneg/transforms.hpp"
#include "testutil.hpp"

using namespace subneg;
using testutil::f;

TEST_CASE("tilde translation") {
    CHECK(equal(tilde(f("p")), f("p")));
    CHECK(equal(tilde(f("T")), f("T")));
    CHECK(equal(tilde(f("~p")), f("p -> ~p")));
    CHECK(equal(tilde(f("~~p")), f("(p -> ~p) -> ~(p -> ~p)")));
    CHECK(equal(tilde(f("p & ~q")), f("p & (q -> ~q)")));
}

TEST_CASE("negation tower reduction") {
    CHECK(equal(reduce_negations(f("~~~~p")), f("~~p")));
    CHECK(equal(reduce_negations(f("~p")), f("~p")));
    CHECK(equal(reduce_negations(f("~~~~~p")), f("~~~p")));
    CHECK(equal(reduce_negations(f("~~~~~~p")), f("~~p")));
    CHECK(equal(reduce_negations(f("~~~p")), f("~~~p")));
    // towers inside a body are rewritten too
    CHECK(equal(reduce_negations(f("~~~~p -> ~~~~~q")), f("~~p -> ~~~q")));
    CHECK(equal(reduce_negations(f("~~(~~~~p & q)")), f("~~(~~p & q)")));
}

TEST_CASE("reduce_negations is idempotent") {
    std::mt19937 rng(23);
    for (int i = 0; i < 300; i++) {
        FormulaPtr g = testutil::random_formula(rng, 6, {"p", "q"});
        FormulaPtr once = reduce_negations(g);
        CHECK(equal(reduce_negations(once), once));
    }
}

TEST_CASE("the odd collapse is an equivalence instance, verified by decide") {
    // ~^5 p <-> ~^3 p in copc, via the even collapse at q := ~p
    CHECK(decide(f("~~~~~p -> ~~~p"), Logic::CoPC).provable());
    CHECK(decide(f("~~~p -> ~~~~~p"), Logic::CoPC).provable());
    // the height-1 collapse direction is an implication only
    CHECK(decide(f("~~~p -> ~p"), Logic::CoPC).provable());
    CHECK_FALSE(decide(f("~p -> ~~~p"), Logic::CoPC).provable());
}

TEST_CASE("reduction preserves theoremhood on small formulas") {
    // weight 7 reaches the first even tower above height 4 (~^6 p)
    auto corpus = testutil::all_formulas(7, {"p", "q"});
    for (Logic logic : {Logic::CoPC, Logic::MPC}) {
        for (const auto& g : corpus) {
            FormulaPtr r = reduce_negations(g);
            if (equal(r, g)) continue;
            INFO(to_string(g), " in ", to_string(logic));
            CHECK(decide(g, logic).provable() == decide(r, logic).provable());
        }
    }
}

TEST_CASE("translation faithfulness on small formulas") {
    auto corpus = testutil::all_formulas(5, {"p", "q"});
    for (const auto& g : corpus) {
        bool mpc = decide(g, Logic::MPC).provable();
        FormulaPtr t = tilde(g);
        INFO(to_string(g));
        CHECK(mpc == decide(t, Logic::CoPC).provable());
        CHECK(mpc == decide(t, Logic::N).provable());
    }
}
