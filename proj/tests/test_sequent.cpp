#include <doctest.h>

#include "subneg/sequent.hpp"
#include "testutil.hpp"

using namespace subneg;
using testutil::f;

TEST_CASE("sequent parsing and printing") {
    Sequent s = parse_sequent("p, p -> q => q");
    CHECK(s.context.size() == 2);
    CHECK(equal(s.goal, f("q")));
    CHECK(equal(parse_sequent(to_string(s)), s));

    Sequent bare = parse_sequent("~p | q");
    CHECK(bare.context.empty());
    CHECK(equal(bare.goal, f("~p | q")));

    Sequent empty_ctx = parse_sequent("=> p");
    CHECK(empty_ctx.context.empty());

    CHECK_THROWS_AS(parse_sequent("p, => q"), ParseError);
}

TEST_CASE("split sequent parsing") {
    SplitSequent s = parse_split_sequent("p & q ; q -> r => r");
    CHECK(s.gamma.size() == 1);
    CHECK(s.delta.size() == 1);
    CHECK(equal(s.goal, f("r")));

    SplitSequent empty_gamma = parse_split_sequent("; q => q");
    CHECK(empty_gamma.gamma.empty());
    CHECK(empty_gamma.delta.size() == 1);

    SplitSequent empty_delta = parse_split_sequent("p ; => p");
    CHECK(empty_delta.delta.empty());

    CHECK_THROWS_AS(parse_split_sequent("p => p"), ParseError);

    Sequent m = merge(s);
    CHECK(m.context.size() == 2);
}

TEST_CASE("contexts are canonically ordered multisets") {
    Sequent a = parse_sequent("p -> q, p => q");
    Sequent b = parse_sequent("p, p -> q => q");
    CHECK(equal(a, b));
    CHECK(SequentHash{}(a) == SequentHash{}(b));

    Sequent dup = parse_sequent("p, p => q");
    CHECK(dup.context.size() == 2);
    CHECK(!equal(dup, parse_sequent("p => q")));
}

TEST_CASE("set contexts absorb duplicates") {
    Context c = make_set({f("p"), f("q")});
    Context c2 = set_add(c, f("p"));
    CHECK(ctx_equal(c, c2));
    Context c3 = set_add(c, f("r"));
    CHECK(c3.size() == 3);

    HistSequent h = make_hist_sequent({f("~p"), f("~p")}, {f("q"), f("q")}, f("p"));
    CHECK(h.history.size() == 1);
    CHECK(h.context.size() == 1);
}

TEST_CASE("common language of a split") {
    CHECK(common_language(parse_split_sequent("p ; p -> q => q")) ==
          std::set<std::string>{"p"});
    CHECK(common_language(parse_split_sequent("p ; q => q")).empty());
    CHECK(common_language(parse_split_sequent("~p & q ; q -> r => ~r")) ==
          std::set<std::string>{"q"});
}
