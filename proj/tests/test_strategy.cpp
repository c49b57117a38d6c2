#include <doctest.h>

#include "support.hpp"

using namespace ludic;
using namespace ludic::test;

namespace {

GamePtr nn() { return lollipop_game(nat_game(), nat_game()); }
GamePtr bang_nn(unsigned threads = 3) { return lollipop_game(bang_game(nat_game(), threads), nat_game()); }

Occ occ(std::string_view m, std::optional<std::size_t> j) { return Occ{mv(m), j}; }

// Answers the codomain question at once with `n`.
StrategyPtr constant(unsigned long n) {
    return function_strategy(
        [n](const Position& s) {
            if (s.size() == 1 && s[0].move == mv("R.q")) return Response::move(Occ{Move{std::to_string(n), 0, "R"}, 0});
            return Response::none();
        },
        "const" + std::to_string(n));
}

// On !N -o N: keeps asking its argument, one new thread per answer.
StrategyPtr chatterer() {
    return function_strategy(
        [](const Position& s) {
            if (s.empty()) return Response::none();
            return Response::move(Occ{mv("L.q"), 0});
        },
        "ask-forever");
}

}  // namespace

TEST_CASE("successor and doubling") {
    auto s = succ_strategy();
    CHECK(s->respond(pos("R.q")) == Response::move(occ("L.q", 0)));
    CHECK(s->respond(pos("R.q L.q@0 L.4@1")) == Response::move(occ("R.5", 0)));
    auto d = double_strategy();
    CHECK(d->respond(pos("R.q L.q@0 L.4@1")) == Response::move(occ("R.8", 0)));
    auto z = strict_zero_strategy();
    CHECK(z->respond(pos("R.q")) == Response::move(occ("L.q", 0)));
    CHECK(z->respond(pos("R.q L.q@0 L.9@1")) == Response::move(occ("R.0", 0)));
    CHECK(numeral(3)->respond(pos("q")) == Response::move(occ("3", 0)));
    CHECK(bottom_strategy()->respond(pos("q")).kind == ResponseKind::None);
}

TEST_CASE("composing successor with doubling") {
    auto c = compose(succ_strategy(), double_strategy());
    CHECK(c->respond(pos("R.q")) == Response::move(occ("L.q", 0)));
    for (unsigned long n = 0; n <= 10; ++n) {
        auto s = pos("R.q L.q@0");
        s.push_back(Occ{Move{std::to_string(n), 0, "L"}, 1});
        CHECK(c->respond(s) == Response::move(Occ{Move{std::to_string(2 * (n + 1)), 0, "R"}, 0}));
    }
}

TEST_CASE("interaction traces mark the hidden moves") {
    auto io = interact(succ_strategy(), double_strategy(), pos("R.q L.q@0 L.3@1"));
    CHECK(io.response == Response::move(occ("R.8", 0)));
    std::size_t hidden = 0;
    for (auto& e : io.trace) {
        bool internal = e.component == Component::B1 || e.component == Component::B2;
        CHECK(e.hidden == internal);
        hidden += e.hidden;
    }
    // the question and the answer, once on each side of B
    CHECK(hidden == 4);
    CHECK(io.trace.back().component == Component::C);
    CHECK(to_json(io.trace.front()).contains("component"));
}

TEST_CASE("copy-cat is a unit for composition") {
    auto o = explore(4, 6);
    for (auto& s : {succ_strategy(), double_strategy(), strict_zero_strategy(), constant(2)}) {
        CAPTURE(s->describe());
        CHECK(equiv_at_depth(*compose(copy_cat(), s), *s, *nn(), o).equal);
        CHECK(equiv_at_depth(*compose(s, copy_cat()), *s, *nn(), o).equal);
    }
    CHECK(copy_cat()->respond(pos("R.q L.q@0 L.7@1")) == Response::move(occ("R.7", 0)));
    CHECK(dereliction()->respond(pos("R.q")) == Response::move(occ("L.q", 0)));
}

TEST_CASE("pairing, tensor and promotion") {
    auto p = pairing(succ_strategy(), double_strategy());
    CHECK(p->respond(pos("R.R.q")) == Response::move(occ("L.q", 0)));
    CHECK(p->respond(pos("R.R.q L.q@0 L.3@1")) == Response::move(occ("R.R.6", 0)));
    CHECK(p->respond(pos("R.L.q L.q@0 L.3@1")) == Response::move(occ("R.L.4", 0)));

    auto t = tensor_strategies(succ_strategy(), double_strategy());
    CHECK(t->respond(pos("R.L.q")) == Response::move(occ("L.L.q", 0)));
    CHECK(t->respond(pos("R.L.q L.L.q@0 L.L.4@1")) == Response::move(occ("R.L.5", 0)));
    CHECK(t->respond(pos("R.L.q L.L.q@0 L.L.4@1 R.L.5@0 R.R.q")) == Response::move(occ("L.R.q", 4)));

    auto pr = promotion(succ_strategy());
    auto s = pos("R.q L.q@0 L.1@1 R.2@0 R.q");
    CHECK(pr->respond(s) == Response::move(occ("L.q", 4)));
    s.push_back(occ("L.q", 4));
    s.push_back(occ("L.6", 5));
    CHECK(pr->respond(s) == Response::move(occ("R.7", 4)));

    auto r = retag_strategy(succ_strategy(), {{"R.R", "R"}, {"L", "L"}}, "shift");
    CHECK(r->respond(pos("R.R.q")) == Response::move(occ("L.q", 0)));
}

TEST_CASE("predicates hold for the basic strategies") {
    auto o = explore(4, 8);
    for (auto& s : {succ_strategy(), double_strategy(), strict_zero_strategy(), copy_cat()}) {
        CAPTURE(s->describe());
        CHECK(check_total(*s, *nn(), o).ok());
        CHECK(check_innocent(*s, *nn(), o).ok());
        CHECK(check_well_bracketed(*s, *nn(), o).ok());
        CHECK(check_noetherian(*s, *nn(), o).ok());
        CHECK(check_responses_valid(*s, *nn(), o).ok());
    }
}

TEST_CASE("each predicate has a counterexample") {
    SUBCASE("totality") {
        auto r = check_total(*bottom_strategy(), *nn(), explore(3, 4));
        CHECK(r.verdict == Verdict::Refuted);
        CHECK(r.witness.find("R.q") != std::string::npos);
    }
    SUBCASE("innocence") {
        // second round of FS(2) answered differently from the first, though both P-views are q
        auto counter = function_strategy(
            [](const Position& s) { return Response::move(Occ{Move{s.size() == 1 ? "0" : "1", 0, ""}, s.size() - 1}); },
            "counting");
        CHECK(check_innocent(*counter, *fs_game(2), explore(3, 4)).verdict == Verdict::Refuted);
        auto steady = function_strategy(
            [](const Position& s) { return Response::move(Occ{Move{"0", 0, ""}, s.size() - 1}); }, "steady");
        CHECK(check_innocent(*steady, *fs_game(2), explore(3, 4)).ok());
    }
    SUBCASE("well-bracketing") {
        auto g = lollipop_game(nn(), nat_game());
        auto skip = [](bool honest) {
            return function_strategy(
                [honest](const Position& s) {
                    if (s.size() == 1) return Response::move(occ("L.R.q", 0));
                    if (s.back().move == mv("L.L.q"))
                        return honest ? Response::move(occ("L.L.3", s.size() - 1)) : Response::move(occ("R.5", 0));
                    return Response::none();
                },
                honest ? "honest" : "skip");
        };
        auto r = check_well_bracketed(*skip(false), *g, explore(2, 4));
        CHECK(r.verdict == Verdict::Refuted);
        CHECK(check_well_bracketed(*skip(true), *g, explore(2, 4)).ok());
    }
    SUBCASE("noetherianity") {
        auto o = explore(2, 6);
        auto r = check_noetherian(*chatterer(), *bang_nn(0), o);
        CHECK(r.verdict == Verdict::BoundExceeded);
        // an interaction that never surfaces
        auto answer0 = function_strategy(
            [](const Position& s) { return Response::move(Occ{mv("R.0"), s.size() - 1}); }, "zero");
        auto loop = compose(promotion(answer0), chatterer(), 200);
        auto d = check_noetherian(*loop, *bang_nn(0), o);
        CHECK(d.verdict == Verdict::Refuted);
        CHECK(d.witness.find("chattering") != std::string::npos);
    }
    SUBCASE("validity") {
        auto wrong = function_strategy([](const Position&) { return Response::move(occ("L.L.q", 0)); }, "stray");
        CHECK(check_responses_valid(*wrong, *nn(), explore(2, 2)).verdict == Verdict::Refuted);
    }
}

TEST_CASE("equivalence finds a shortest witness") {
    auto r = equiv_at_depth(*constant(0), *strict_zero_strategy(), *nn(), explore(4, 6));
    CHECK_FALSE(r.equal);
    REQUIRE(r.witness);
    CHECK(*r.witness == pos("R.q"));

    auto a = equiv_at_depth(*succ_strategy(), *compose(succ_strategy(), copy_cat()), *nn(), explore(4, 6));
    CHECK(a.equal);
    CHECK_FALSE(a.exhausted);

    ExploreOptions tiny = explore(4, 6);
    tiny.max_positions = 2;
    auto e = equiv_at_depth(*succ_strategy(), *succ_strategy(), *nn(), tiny);
    CHECK(e.exhausted);
}

TEST_CASE("tabulating a strategy") {
    auto g = materialize(*nn(), 3, 4);
    auto t = table_of(*strict_zero_strategy(), g);
    CHECK(t.even().size() == 5);  // e, q.q', and one answer 0 per argument
    CHECK(t.respond(pos("R.q L.q@0 L.2@1")) == Occ{mv("R.0"), 0});
    CHECK(equiv_at_depth(*table_strategy(t), *strict_zero_strategy(), *g, explore(3, 4)).equal);
    // doubling 2 leaves the alphabet
    CHECK_THROWS_AS(table_of(*double_strategy(), g), Error);
}

TEST_CASE("opponent moves") {
    auto ms = opponent_moves(*nn(), pos("R.q L.q@0"), 3);
    CHECK(ms.size() == 3);
    CHECK(opponent_moves(*nn(), {}, 3).size() == 1);
    // in !N -o N Opponent may answer any open thread
    auto two = opponent_moves(*bang_nn(), pos("R.q L.q@0 L.1@1 L.q@0"), 2);
    CHECK(two.size() == 2);
}

// ---------------------------------------------------------------- properties

TEST_CASE("property: program strategies compute their programs") {
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto p = random_program(rng, 1 + rng() % 6);
        auto s = program_strategy(p);
        CAPTURE(to_string(p));
        for (unsigned long arg : {0ul, 1ul, 3ul, 7ul}) CHECK(run_on_nat(*s, arg) == run_program(p, arg));
    }
}

TEST_CASE("property: composition of programs is function composition") {
    std::mt19937 rng(22);
    for (int i = 0; i < 60; ++i) {
        auto p = random_program(rng, 1 + rng() % 4);
        auto q = random_program(rng, 1 + rng() % 4);
        auto c = compose(promotion(program_strategy(p)), program_strategy(q));
        CAPTURE(to_string(p));
        CAPTURE(to_string(q));
        for (unsigned long arg : {0ul, 2ul, 5ul}) CHECK(run_on_nat(*c, arg) == run_program(q, run_program(p, arg)));
    }
}

TEST_CASE("property: composites of innocent strategies stay innocent and well-bracketed") {
    std::mt19937 rng(23);
    auto g = bang_nn();
    int tested = 0;
    while (tested < 30) {
        auto p = random_program(rng, 1 + rng() % 3);
        auto q = random_program(rng, 1 + rng() % 3);
        if (max_reads(p) * max_reads(q) > 2) continue;
        ++tested;
        auto c = compose(promotion(program_strategy(p)), program_strategy(q));
        auto o = explore(3, 8);
        CHECK(check_innocent(*c, *g, o).ok());
        CHECK(check_well_bracketed(*c, *g, o).ok());
        CHECK(check_total(*c, *g, o).ok());
    }
}
