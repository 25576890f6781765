#include <doctest.h>

#include "subneg/g3.hpp"
#include "subneg/hist.hpp"
#include "testutil.hpp"

using namespace subneg;
using testutil::f;
using testutil::seq;

namespace {

HistSequent hs(std::vector<FormulaPtr> hist, std::vector<FormulaPtr> ctx, FormulaPtr goal) {
    return make_hist_sequent(std::move(hist), std::move(ctx), std::move(goal));
}

}  // namespace

TEST_CASE("hist_rule_instances evaluates the side conditions") {
    // copc2 blocked by the history, copc1 blocked by q in the context
    auto blocked = hist_rule_instances(hs({f("~q")}, {f("~p"), f("q")}, f("~q")), Logic::CoPC);
    CHECK(blocked.empty());

    auto copc1 = hist_rule_instances(hs({}, {f("~p")}, f("~q")), Logic::CoPC);
    REQUIRE(copc1.size() == 1);
    CHECK(copc1[0].rule == Rule::Copc1);
    REQUIRE(copc1[0].premises.size() == 1);
    CHECK(equal(copc1[0].premises[0], hs({}, {f("~p"), f("q")}, f("p"))));

    auto impr2 = hist_rule_instances(hs({}, {f("p")}, f("p -> q")), Logic::N);
    REQUIRE(impr2.size() == 1);
    CHECK(impr2[0].rule == Rule::ImpR2);
    CHECK(equal(impr2[0].premises[0], hs({}, {f("p")}, f("q"))));

    auto impr1 = hist_rule_instances(hs({f("q")}, {}, f("p -> q")), Logic::N);
    REQUIRE(impr1.size() == 1);
    CHECK(impr1[0].rule == Rule::ImpR1);
    CHECK(impr1[0].premises[0].history.empty());  // context grew: history reset

    // an is inapplicable once the body sits in the context
    auto an_blocked = hist_rule_instances(hs({}, {f("p")}, f("~p")), Logic::MPC);
    for (const auto& inst : an_blocked) CHECK(inst.rule != Rule::An);
}

TEST_CASE("the n-rule variants partition on the context conditions") {
    // n1: neither beta nor alpha in the context
    auto n1 = hist_rule_instances(hs({}, {f("~p")}, f("~q")), Logic::N);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].rule == Rule::N1);
    CHECK(equal(n1[0].premises[0], hs({}, {f("~p"), f("q")}, f("p"))));
    CHECK(equal(n1[0].premises[1], hs({}, {f("~p"), f("p")}, f("q"))));

    // n2: alpha in the context; second premise keeps the history
    auto n2 = hist_rule_instances(hs({f("x")}, {f("~p"), f("p")}, f("~q")), Logic::N);
    REQUIRE(n2.size() == 1);
    CHECK(n2[0].rule == Rule::N2);
    CHECK(n2[0].premises[0].history.empty());
    CHECK(ctx_equal(n2[0].premises[1].history, {f("x")}));

    // n3: beta in the context, alpha not; goal pushed on the first premise
    auto n3 = hist_rule_instances(hs({}, {f("~p"), f("q")}, f("~q")), Logic::N);
    REQUIRE(n3.size() == 1);
    CHECK(n3[0].rule == Rule::N3);
    CHECK(ctx_equal(n3[0].premises[0].history, {f("~q")}));
    CHECK(equal(n3[0].premises[0], hs({f("~q")}, {f("~p"), f("q")}, f("p"))));

    // n4: both present
    auto n4 = hist_rule_instances(hs({}, {f("~p"), f("p"), f("q")}, f("~q")), Logic::N);
    REQUIRE(n4.size() == 1);
    CHECK(n4[0].rule == Rule::N4);

    // n3/n4 blocked when the goal is already in the history
    auto dead = hist_rule_instances(hs({f("~q")}, {f("~p"), f("q")}, f("~q")), Logic::N);
    CHECK(dead.empty());
}

TEST_CASE("measure on the reference sequents") {
    CHECK(measure(hs({}, {}, f("p"))) == Measure{1, 1, 1});
    CHECK(measure(hs({}, {f("p")}, f("p"))) == Measure{0, 1, 1});
    CHECK(measure(hs({f("~q")}, {f("~p")}, f("~q"))) == Measure{3, 3, 2});
}

TEST_CASE("decide on the reference examples") {
    CHECK(decide(f("~~~p -> ~p"), Logic::CoPC).provable());
    CHECK(decide(f("(p & ~p) -> ~q"), Logic::NeF).provable());
    CHECK_FALSE(decide(f("(p & ~p) -> ~q"), Logic::N).provable());
    CHECK_FALSE(decide(seq("~~~p => ~~p"), Logic::CoPC).provable());
}

TEST_CASE("decide emits checkable hist proofs and sane stats") {
    Decision d = decide(f("(p -> q) -> (~q -> ~p)"), Logic::CoPC);
    REQUIRE(d.provable());
    CheckResult c = check(*d.proof, Logic::CoPC);
    INFO(c.path, ": ", c.reason);
    CHECK(c.ok);
    CHECK(d.stats.nodes_expanded > 0);
    CHECK(d.stats.max_branch_length > 0);
    CHECK(d.stats.max_sequent_size > 0);

    Decision u = decide(seq("~~~p => ~~p"), Logic::CoPC);
    CHECK_FALSE(u.provable());
    CHECK(u.stats.nodes_expanded > 0);
}

TEST_CASE("decide agrees with naive_prove on small formulas") {
    auto corpus = testutil::all_formulas(5, {"p", "q"});
    for (Logic logic : {Logic::N, Logic::NeF, Logic::CoPC, Logic::MPC}) {
        for (const auto& g : corpus) {
            Sequent s{{}, g};
            Decision d = decide(s, logic);
            NaiveResult naive = naive_prove(s, logic, 20);
            INFO(to_string(g), " in ", to_string(logic));
            if (naive.provable()) CHECK(d.provable());
            if (!d.provable()) CHECK_FALSE(naive.provable());
            if (d.provable()) CHECK(naive.provable());  // fuel 20 is generous at weight 5
            CHECK(d.stats.min_measure_component >= 0);  // reachable states only
        }
    }
}

TEST_CASE("negated goals with empty context are never theorems outside mpc") {
    for (Logic logic : {Logic::N, Logic::NeF, Logic::CoPC})
        CHECK_FALSE(decide(f("~(p -> p)"), logic).provable());
    CHECK(decide(f("~~(p -> p)"), Logic::MPC).provable());
}
