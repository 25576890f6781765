#include <doctest.h>

#include "subneg/interpolate.hpp"
#include "testutil.hpp"

using namespace subneg;
using testutil::f;
using testutil::seq;

namespace {

bool is_interpolant(const FormulaPtr& sigma, const SplitSequent& split, Logic logic) {
    std::vector<FormulaPtr> sv{sigma};
    for (const std::string& atom : language(sv))
        if (!common_language(split).count(atom)) return false;
    return decide(Sequent{split.gamma, sigma}, logic).provable() &&
           decide(Sequent{ctx_add(split.delta, sigma), split.goal}, logic).provable();
}

}  // namespace

TEST_CASE("extraction on the reference splits") {
    // brute force over all candidates of weight <= 3 in the common language
    // confirms that p interpolates p ; p -> q => q, and that we pick it
    SplitSequent split = parse_split_sequent("p ; p -> q => q");
    std::vector<FormulaPtr> accepted;
    for (const auto& candidate : testutil::all_formulas(3, {"p"}))
        if (is_interpolant(candidate, split, Logic::N)) accepted.push_back(candidate);
    REQUIRE(!accepted.empty());
    bool atom_p_accepted = false;
    for (const auto& c : accepted)
        if (equal(c, f("p"))) atom_p_accepted = true;
    CHECK(atom_p_accepted);

    auto r = interpolate(split, Logic::N);
    REQUIRE(r.has_value());
    CHECK(equal(r->interpolant, f("p")));

    auto ax_gamma = interpolate(parse_split_sequent("p ; => p"), Logic::N);
    REQUIRE(ax_gamma.has_value());
    CHECK(equal(ax_gamma->interpolant, f("p")));

    auto top_split = interpolate(parse_split_sequent("p ; q => T"), Logic::N);
    REQUIRE(top_split.has_value());
    CHECK(equal(top_split->interpolant, f("T")));
}

TEST_CASE("interpolate on the reference splits") {
    auto r = interpolate(parse_split_sequent("p & q ; q -> r => r"), Logic::CoPC);
    REQUIRE(r.has_value());
    CHECK(is_interpolant(r->interpolant, parse_split_sequent("p & q ; q -> r => r"),
                         Logic::CoPC));
    CHECK(equal(r->interpolant, f("q")));

    // empty common language: the interpolant is built from T alone
    auto empty = interpolate(parse_split_sequent("p ; q => q"), Logic::N);
    REQUIRE(empty.has_value());
    std::vector<FormulaPtr> sv{empty->interpolant};
    CHECK(language(sv).empty());

    CHECK_FALSE(interpolate(parse_split_sequent("p ; => q"), Logic::N).has_value());
}

TEST_CASE("copc proofs with a gamma-side principal yield a negated interpolant") {
    // ~p ; q -> p => ~q runs copc with the principal on the gamma side
    SplitSequent split = parse_split_sequent("~p ; q -> p => ~q");
    auto r = interpolate(split, Logic::CoPC);
    REQUIRE(r.has_value());
    CHECK(is_interpolant(r->interpolant, split, Logic::CoPC));
    CHECK(r->interpolant->kind == Kind::Neg);
}

TEST_CASE("interpolants verify across logics and splittings") {
    std::vector<std::pair<std::string, Logic>> cases = {
        {"p ; p -> q => q", Logic::N},
        {"p -> q ; p => q", Logic::N},
        {"p, p -> q ; => q", Logic::NeF},
        {"; p, p -> q => q", Logic::NeF},
        {"~q ; p -> q => ~p", Logic::CoPC},
        {"p -> q ; ~q => ~p", Logic::CoPC},
        {"p & ~p ; => ~q", Logic::NeF},
        {"~p ; q -> p, q => ~q", Logic::N},      // (n) with a gamma-side principal
        {"~p, q -> p ; q => ~q", Logic::N},
        {"; ~p, q -> p, q => ~q", Logic::NeF},
        {"~p, q -> p ; q, r => ~q & r", Logic::CoPC},
        {"; => (p -> ~p) -> ~p", Logic::MPC},
        {"p -> ~p ; => ~p", Logic::MPC},
        {"~p & q ; q -> r, r -> p => ~r", Logic::CoPC},
    };
    for (auto& [text, logic] : cases) {
        SplitSequent split = parse_split_sequent(text);
        auto r = interpolate(split, logic);
        INFO(text, " in ", to_string(logic));
        REQUIRE(r.has_value());
        CHECK(is_interpolant(r->interpolant, split, logic));
        CHECK(r->left_check.provable());
        CHECK(r->right_check.provable());
    }
}

TEST_CASE("malformed splits are rejected") {
    Decision d = decide(seq("p, q => p & q"), Logic::N);
    REQUIRE(d.provable());
    ProofTree stripped = strip_history(*d.proof, Logic::N);
    SplitSequent wrong = parse_split_sequent("p ; => p & q");  // q missing from both parts
    CHECK_THROWS_AS(extract_interpolant(stripped, wrong), SplitError);
}
