#include <doctest.h>

#include "support.hpp"

using namespace ludic;
using namespace ludic::test;

namespace {

TyPtr N() { return ty_const("N"); }
TmPtr num(std::uint64_t n) { return tm_numeral(n); }
TmPtr closed_at(TmPtr body, TmPtr arg) { return tm_comp(std::move(body), tm_ext(tm_top(), std::move(arg))); }
TmPtr doubler() { return tm_rnat(num(0), tm_succ(tm_succ(tm_v()))); }

// The value a closed N-term answers with, read off the codomain.
std::optional<unsigned long> value(const TmPtr& t, EvalOptions o = {}) {
    auto r = run_closed(t, o);
    if (!r.defined() || r.occ.move.path != "R") return std::nullopt;
    return std::stoul(r.occ.move.ident);
}

}  // namespace

TEST_CASE("normal forms of the context equations") {
    auto phi = tm_ext(tm_top(), num(2));
    auto tau = num(7);
    CHECK(same(normalize(tm_comp(tm_p(), tm_ext(phi, tau))), normalize(phi)));
    CHECK(same(normalize(tm_comp(tm_v(), tm_ext(phi, tau))), tau));
    CHECK(same(normalize(tm_ext(tm_p(), tm_v())), tm_id()));
    CHECK(same(normalize(tm_comp(tm_id(), phi)), normalize(phi)));
    CHECK(same(normalize(tm_comp(num(3), phi)), num(3)));
    CHECK(same(normalize(tm_lambda(tm_lambda_inv(tm_v()))), tm_v()));
    auto nested = tm_comp(tm_comp(tm_v(), tm_p()), tm_p());
    CHECK(same(normalize(nested), normalize(tm_comp(tm_v(), tm_comp(tm_p(), tm_p())))));
}

TEST_CASE("normal forms of types") {
    auto bar = tm_bar(num(3));
    CHECK(same(normalize(ty_subst(N(), bar)), N()));
    CHECK(same(normalize(ty_subst(ty_subst(N(), tm_p()), bar)), N()));
    auto pi = ty_pi(N(), ty_el(tm_code_fsn()));
    auto moved = normalize(ty_subst(pi, tm_p()));
    CHECK(moved->kind == TyKind::Pi);
    CHECK(same(normalize(ty_subst(pi, tm_id())), normalize(pi)));
    CHECK(to_json(pi).is_object());
    CHECK_FALSE(to_string(pi).empty());
}

TEST_CASE("codes and their decodings") {
    auto code = tm_code(nat_entry());
    CHECK(same(normalize(ty_el(code)), N()));
    CHECK(same(normalize(en(N())), code));
    auto pi = ty_pi(N(), N());
    CHECK(same(normalize(ty_el(en(pi))), normalize(pi)));
    CHECK(same(normalize(en(ty_el(tm_code_fsn()))), tm_code_fsn()));
}

TEST_CASE("closed numerals and successors") {
    CHECK(value(num(0)) == 0ul);
    CHECK(value(num(42)) == 42ul);
    TmPtr t = num(0);
    for (unsigned k = 1; k <= 32; ++k) {
        t = tm_succ(t);
        CHECK(value(t) == k);
    }
    CHECK(run_closed(tm_star()).occ.move == mv("R.*"));
}

TEST_CASE("functions, projections and recursion") {
    CHECK(value(tm_app(tm_lambda(tm_succ_v()), num(3))) == 4ul);
    CHECK(value(closed_at(doubler(), num(4))) == 8ul);
    CHECK(value(tm_app(tm_lambda(doubler()), num(0))) == 0ul);
    auto pair = tm_pair(num(1), num(2));
    CHECK(value(closed_at(tm_proj1(), pair)) == 1ul);
    CHECK(value(closed_at(tm_proj2(), pair)) == 2ul);
    // the outer of two variables
    auto two = tm_ext(tm_ext(tm_top(), num(3)), num(5));
    CHECK(value(tm_comp(tm_var(1), two)) == 3ul);
    CHECK(value(tm_comp(tm_var(0), two)) == 5ul);
}

TEST_CASE("recursion past the unfolding budget diverges") {
    EvalOptions small;
    small.unfold = 2;
    CHECK(value(closed_at(doubler(), num(1)), small) == 2ul);
    CHECK(run_closed(closed_at(doubler(), num(5)), small).kind == ResponseKind::Diverge);
}

TEST_CASE("property: recursion computes doubling for every small argument") {
    for (unsigned n = 0; n <= 20; ++n) CHECK(value(closed_at(doubler(), num(n))) == 2ul * n);
}

TEST_CASE("compiled terms are valid strategies on their games") {
    auto o = explore(3, 8);
    struct Case {
        TmPtr t;
        Ctx ctx;
        TyPtr ty;
    };
    std::vector<Case> cases{{num(3), {}, N()},
                            {tm_succ_v(), {N()}, N()},
                            {doubler(), {N()}, N()},
                            {tm_v(), {N(), N()}, N()},
                            {tm_var(1), {N(), N()}, N()},
                            {tm_lambda(tm_succ_v()), {}, ty_pi(N(), N())}};
    for (auto& c : cases) {
        CAPTURE(to_string(c.t));
        auto s = compile(c.t);
        auto g = term_game(c.ctx, c.ty);
        CHECK(check_responses_valid(*s, *g, o).ok());
        CHECK(check_innocent(*s, *g, o).ok());
        CHECK(check_well_bracketed(*s, *g, o).ok());
        CHECK(check_total(*s, *g, o).ok());
    }
}

TEST_CASE("the empty type is eliminated without an answer") {
    auto s = compile(tm_rempty(tm_v()));
    auto g = term_game({ty_const("0")}, N());
    auto r = s->respond(pos("R.q"));
    REQUIRE(r.defined());
    CHECK(has_prefix(r.occ.move, "L"));
    // nothing in 0 answers the question it asks
    auto t = pos("R.q");
    t.push_back(r.occ);
    CHECK(opponent_moves(*g, t, 4).empty());
}

TEST_CASE("realized games and their numbers") {
    CHECK(realize(N()).number == nat_entry().number);
    CHECK(realize(ty_el(tm_code(nat_entry()))).number == nat_entry().number);
    auto u0 = realize(ty_const("U", 0));
    CHECK(u0.number == universe_entry(0).number);
    CHECK(u0.rank == 2);
    auto pi = realize(ty_pi(N(), N()));
    CHECK(pi.rank == 1);
    CHECK(realize(ty_pi(N(), N())).number == pi.number);
    CHECK(pi.description == to_string(normalize(ty_pi(N(), N()))));
    auto fs1 = eval_dependent(ty_el(tm_code_fsn()), num(1));
    CHECK(fs1.number == fs_entry(1).number);
    CHECK(eval_dependent(ty_el(tm_code_fsn()), num(3)).number == fs_entry(3).number);
    CHECK(fs1.number != nat_entry().number);
}

TEST_CASE("identity games by brute force") {
    auto g = materialize(*flat_of({"a", "b"}), 4, 2);
    auto S = strategies_on(g);
    REQUIRE(S.size() == 3);
    for (auto& s : S)
        for (auto& t : S) {
            CAPTURE(to_string(*s.plays.rbegin()));
            CAPTURE(to_string(*t.plays.rbegin()));
            CHECK(has_total_strategy(id_hat(*g, s, t)) == (s == t));
        }
    auto flip = flip_strategy();
    CHECK(flip->respond(pos("R.L.q")) == Response::move(Occ{mv("L.R.q"), 0}));
    CHECK(flip->respond(pos("R.R.q")) == Response::move(Occ{mv("L.L.q"), 0}));
}
