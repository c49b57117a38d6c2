#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>

#include "support.hpp"

using namespace ludic;
using namespace ludic::test;

namespace {

// Position of (x, y) when the pairs are listed diagonal by diagonal, y ascending.
std::uint64_t diagonal_index(std::uint64_t x, std::uint64_t y) {
    std::uint64_t k = 0;
    for (std::uint64_t d = 0;; ++d)
        for (std::uint64_t j = 0; j <= d; ++j, ++k)
            if (d - j == x && j == y) return k;
}

PStrategy num(unsigned n) { return {std::to_string(n), answer_table(std::to_string(n))}; }

std::string temp_path(const char* stem) {
    return (std::filesystem::temp_directory_path() / (std::string(stem) + std::to_string(::getpid()) + ".json")).string();
}

}  // namespace

TEST_CASE("pairing function") {
    for (std::uint64_t x = 0; x < 12; ++x)
        for (std::uint64_t y = 0; y < 12; ++y) {
            CHECK(cantor_pair(x, y) == diagonal_index(x, y));
            CHECK(cantor_unpair(cantor_pair(x, y)) == std::make_pair(x, y));
        }
    for (std::uint64_t z = 0; z < 500; ++z) {
        auto [x, y] = cantor_unpair(z);
        CHECK(cantor_pair(x, y) == z);
    }
}

TEST_CASE("base games get fixed numbers") {
    CHECK(terminal_entry().number == cantor_pair(0, 1));
    CHECK(empty_entry().number == cantor_pair(1, 1));
    CHECK(unit_entry().number == cantor_pair(2, 1));
    CHECK(nat_entry().number == 11);
    CHECK(to_string(name_of(nat_entry())) == "11:1");
    CHECK(game_rank(*nat_game()->arena()) == 1);
    CHECK(game_rank(*terminal_arena()) == 1);
}

TEST_CASE("a local registry") {
    Registry r;
    auto a = r.add({{"k", "a"}}, "A", nat_game());
    CHECK(a.rank == 1);
    CHECK(a.index == 0);
    CHECK(a.number == cantor_pair(0, 1));
    CHECK(r.add({{"k", "a"}}, "again", unit_game()).number == a.number);
    auto b = r.add({{"k", "b"}}, "B", unit_game());
    CHECK(b.number == cantor_pair(1, 1));
    // moves of rank 1 push the game to rank 2
    auto c = r.add({{"k", "c"}}, "C", universe_game(0));
    CHECK(c.rank == 2);
    CHECK(c.number == cantor_pair(0, 2));
    CHECK(r.find(b.number)->description == "B");
    CHECK(r.find_key({{"k", "c"}})->number == c.number);
    CHECK(r.find_name(name_of(c))->key == c.key);
    CHECK_FALSE(r.find_name(Move{std::to_string(c.number), 1, ""}).has_value());
}

TEST_CASE("registry persistence") {
    Registry r;
    r.add({{"k", "a"}}, "A", nat_game());
    r.add({{"k", "b"}}, "B", universe_game(0));
    auto path = temp_path("ludic-reg-");
    r.save(path);

    Registry s;
    s.load(path);
    CHECK(s.find_key({{"k", "b"}})->number == r.find_key({{"k", "b"}})->number);
    // games loaded from disk are not rebuilt until registered again
    CHECK_FALSE(s.find_key({{"k", "a"}})->game);
    auto again = s.add({{"k", "a"}}, "A", nat_game());
    CHECK(again.game);
    CHECK(s.to_json() == r.to_json());

    Registry clash;
    clash.add({{"k", "b"}}, "B first", nat_game());
    CHECK_THROWS_AS(clash.merge(r.to_json()), Error);
    std::remove(path.c_str());
}

TEST_CASE("universes") {
    auto u0 = universe_entry(0);
    CHECK(u0.rank == 2);
    auto g = universe_game(0);
    CHECK(g->arena()->contains(name_of(nat_entry())));
    CHECK_FALSE(g->arena()->contains(name_of(u0)));
    CHECK(universe_game(1)->arena()->contains(name_of(u0)));
    CHECK(g->arena()->label(name_of(unit_entry())) == PA);

    CHECK(el(*code_of(nat_entry())).number == nat_entry().number);
    CHECK_THROWS_AS(el(*numeral(3)), Error);
    CHECK_THROWS_AS(el(*bottom_strategy()), Error);
    CHECK(is_code_in(*code_of(nat_entry()), 0));
    CHECK_FALSE(is_code_in(*code_of(u0), 0));
    CHECK(is_code_in(*code_of(u0), 1));
}

TEST_CASE("the registry is paradox free") {
    fs_entry(2);
    universe_entry(1);
    auto rep = check_paradox_free(Registry::global());
    CHECK(rep.ok);
    for (auto& w : rep.witnesses) MESSAGE(w);
    for (auto& e : Registry::global().entries()) {
        if (!e.game) continue;
        auto sup = e.game->arena()->rank_sup();
        CHECK((!sup || *sup < e.rank));
        CHECK_FALSE(e.game->arena()->contains(name_of(e)));
    }
}

TEST_CASE("strategy ranks") {
    CHECK(strategy_rank(answer_table("3")) == 1);
    CHECK(strategy_rank(answer_table(Move{"11", 1, ""})) == 2);
    CHECK(strategy_rank(silent_table(false)) == 1);
    CHECK(is_total(answer_table("0")));
    CHECK_FALSE(is_total(silent_table(true)));
    CHECK(is_total(silent_table(false)));
}

TEST_CASE("predicative games of numerals") {
    auto n = nat_pgame(4);
    CHECK(n.contains(answer_table("7")));
    CHECK(n.contains(silent_table(true)));
    CHECK_FALSE(n.contains(answer_table("x")));
    CHECK(n.strategies(4).size() == 5);
    CHECK(n.rank() == 1);

    auto ev = evens_pgame(), od = odds_pgame();
    CHECK(ev.contains(answer_table("4")));
    CHECK_FALSE(ev.contains(answer_table("3")));
    CHECK(is_predicative_subgame(ev, n, 8));
    CHECK(is_predicative_subgame(od, n, 8));
    CHECK_FALSE(is_predicative_subgame(ev, od, 8));
    CHECK_FALSE(is_predicative_subgame(n, ev, 8));

    auto both = parallel_union("2N|2N+1", {ev, od});
    CHECK(both.strategies(6).size() == 6);
    CHECK(both.contains(answer_table("5")));

    // plays are tagged by the strategy they come from
    auto P = predicative_union("01", {num(0), num(1)}).plays(4);
    CHECK(P.count(pos("s0.q s0.0@0")));
    CHECK(P.count(pos("s1.q s1.1@0")));
    CHECK_FALSE(P.count(pos("s0.q s0.1@0")));
}

TEST_CASE("predicative union and lifting") {
    auto u = predicative_union("01", {num(0), num(1)});
    CHECK(u.contains(answer_table("1")));
    CHECK_FALSE(u.contains(answer_table("2")));
    REQUIRE(u.carrier());
    CHECK(u.carrier()->positions().size() == 4);

    auto l = lift("N", materialize(*nat_game(), 3, 2));
    CHECK(l.strategies(0).size() == 4);  // bottom and three answers
    CHECK(l.contains(answer_table("2")));  // tables compare by their plays
    CHECK(is_predicative_subgame(predicative_union("N'", l.strategies(0)), l));

    auto U = universe_pgame(0);
    CHECK(U.rank() == 2);
    CHECK(U.contains(answer_table(name_of(nat_entry()))));
    CHECK_FALSE(U.contains(answer_table(name_of(universe_entry(0)))));
}

TEST_CASE("tabulated linear implications") {
    auto A = nat_pgame(3), B = nat_pgame(5);
    auto f = pli_of(succ_strategy(), A, B, 3);
    REQUIRE(f.parts.size() == 4);
    CHECK(check_uniform(f).ok);
    for (auto& c : f.parts) {
        auto a = c.domain.respond(pos("q"));
        auto b = c.codomain.respond(pos("q"));
        if (!a) {
            CHECK_FALSE(b.has_value());
        } else {
            REQUIRE(b);
            CHECK(std::stoul(b->move.ident) == std::stoul(a->move.ident) + 1);
        }
    }
    // 2 + 1 leaves a codomain that only reaches 2
    CHECK_THROWS_AS(pli_of(succ_strategy(), A, nat_pgame(3), 3), Error);
}

TEST_CASE("uniform families by brute force") {
    auto A1 = predicative_union("0", {num(0)});
    auto B1 = predicative_union("01", {num(0), num(1)});
    // one component, two choices of codomain, four strategies on each component game
    CHECK(pli_strategies(A1, B1, 4).size() == 8);

    auto A2 = predicative_union("01", {num(0), num(1)});
    auto B0 = predicative_union("0", {num(0)});
    // both components see R.q: silent together, answer 0 together, or ask and then choose per answer
    CHECK(pli_strategies(A2, B0, 4).size() == 1 + 1 + 4);
    for (auto& f : pli_strategies(A2, B0, 4)) CHECK(check_uniform(f).ok);
}

TEST_CASE("a non-uniform family is caught") {
    auto a0 = answer_table("0"), a1 = answer_table("1"), b = answer_table("0");
    auto j0 = materialize(*lollipop_game(game_of(a0), game_of(b)), 0, 4);
    auto j1 = materialize(*lollipop_game(game_of(a1), game_of(b)), 0, 4);
    PliFamily f;
    f.parts.push_back({a0, b, tree_form({Position{}, pos("R.q R.0@0")}, j0)});
    f.parts.push_back({a1, b, tree_form({Position{}, pos("R.q L.q@0")}, j1)});
    auto r = check_uniform(f);
    CHECK_FALSE(r.ok);
    CHECK(r.witness.find("R.q") != std::string::npos);
}

TEST_CASE("applying a linear implication") {
    auto pi = apply_pli(double_strategy(), numeral(4));
    CHECK(pi->respond(pos("q")) == Response::move(Occ{mv("8"), 0}));
    auto cc = apply_pli(generalized_copy_cat(), numeral(4));
    CHECK(cc->respond(pos("q")) == Response::move(Occ{mv("4"), 0}));
}

TEST_CASE("single threads") {
    auto g = materialize(*bang_game(nat_game(), 2), 1, 4);
    auto zero = function_strategy([](const Position& s) { return Response::move(Occ{mv("0"), s.size() - 1}); }, "zero");
    auto t = table_of(*zero, g);
    auto one = single_thread(t);
    for (auto& p : one.plays) CHECK(initial_occurrences(p).size() <= 1);
    CHECK(one.plays.size() == 3);  // e, q, q.0
    CHECK(t.plays.size() > one.plays.size());
}
