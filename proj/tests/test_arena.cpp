#include <doctest.h>

#include "support.hpp"

using namespace ludic;
using namespace ludic::test;

namespace {

ArenaPtr nat() { return nat_game()->arena(); }

// q0 -> p1 -> o2 -> p3 -> o6, and p1 -> o4 -> p5: a small arena where a P-view can hide p3.
ArenaPtr chain_arena() {
    using E = FiniteArena::Entry;
    auto m = [](const char* s) { return Move{s, 0, ""}; };
    std::vector<E> es{{m("q0"), OQ, true}, {m("p1"), PQ, false}, {m("o2"), OQ, false}, {m("p3"), PQ, false},
                      {m("o4"), OQ, false}, {m("p5"), PQ, false}, {m("o6"), OQ, false}};
    std::vector<std::pair<Move, Move>> en{{m("q0"), m("p1")}, {m("p1"), m("o2")}, {m("o2"), m("p3")},
                                          {m("p1"), m("o4")}, {m("o4"), m("p5")}, {m("p3"), m("o6")}};
    return std::make_shared<FiniteArena>(es, en);
}

std::vector<ArenaPtr> sample_arenas() {
    auto n = nat();
    return {n,
            lollipop_arena(n, n),
            lollipop_arena(lollipop_arena(n, n), n),
            lollipop_arena(tensor_arena(n, n), n),
            lollipop_arena(n, lollipop_arena(n, n)),
            chain_arena()};
}

}  // namespace

TEST_CASE("moves print and parse") {
    CHECK(to_string(Move{"q", 0, ""}) == "q");
    CHECK(to_string(Move{"3", 0, "L.R"}) == "L.R.3");
    CHECK(to_string(Move{"11", 1, ""}) == "11:1");
    CHECK(parse_move("R.L.q") == Move{"q", 0, "R.L"});
    CHECK(parse_move("L.22:1") == Move{"22", 1, "L"});
    CHECK_THROWS_AS(parse_move(""), Error);

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto m = random_move(rng);
        CHECK(parse_move(to_string(m)) == m);
        CHECK(move_from_json(to_json(m)) == m);
    }
}

TEST_CASE("tagging") {
    Move m{"q", 0, "R"};
    CHECK(tag("L", m) == Move{"q", 0, "L.R"});
    CHECK(untag(tag("L", m)) == m);
    CHECK(has_prefix(Move{"q", 0, "L.R.L"}, "L.R"));
    CHECK_FALSE(has_prefix(Move{"q", 0, "L.RR"}, "L.R"));
    CHECK(retag(Move{"3", 0, "L.R"}, "L", "R.R") == Move{"3", 0, "R.R.R"});
    CHECK_FALSE(retag(Move{"3", 0, "R"}, "L", "R").has_value());
    CHECK(Move{"q", 0, "L.R"}.head() == "L");
}

TEST_CASE("flat arena of naturals") {
    auto a = nat();
    CHECK(a->label(mv("q")) == OQ);
    CHECK(a->label(mv("5")) == PA);
    CHECK(a->initial(mv("q")));
    CHECK_FALSE(a->initial(mv("5")));
    CHECK(a->enables(mv("q"), mv("5")));
    CHECK_FALSE(a->enables(mv("5"), mv("q")));
    CHECK(a->initial_moves(4).size() == 1);
    CHECK(a->enabled_by(mv("q"), 4).size() == 4);
    CHECK(a->contains(mv("123456")));
    CHECK_FALSE(a->contains(mv("L.q")));
}

TEST_CASE("linear implication flips the domain") {
    auto a = lollipop_arena(nat(), nat());
    CHECK(a->label(mv("R.q")) == OQ);
    CHECK(a->label(mv("L.q")) == PQ);
    CHECK(a->label(mv("L.3")) == OA);
    CHECK(a->label(mv("R.3")) == PA);
    CHECK(a->initial(mv("R.q")));
    CHECK_FALSE(a->initial(mv("L.q")));
    CHECK(a->enables(mv("R.q"), mv("L.q")));
    CHECK(a->enables(mv("L.q"), mv("L.3")));
    CHECK_FALSE(a->enables(mv("L.q"), mv("R.3")));

    auto t = tensor_arena(nat(), nat());
    CHECK(t->initial(mv("L.q")));
    CHECK(t->initial(mv("R.q")));
    CHECK(t->label(mv("L.0")) == PA);
}

TEST_CASE("constructed arenas satisfy the enabling conditions") {
    for (auto& a : sample_arenas()) {
        CAPTURE(a->describe());
        CHECK(validate_arena(*a, 4).empty());
    }
    CHECK(validate_arena(*terminal_arena()).empty());
    CHECK_FALSE(terminal_arena()->rank_sup().has_value());
}

TEST_CASE("validate_arena finds a bad arena") {
    using E = FiniteArena::Entry;
    Move q{"q", 0, ""}, a{"a", 0, ""}, b{"b", 0, ""};
    FiniteArena bad({{q, PQ, true}, {a, OA, false}, {b, PA, false}}, {{q, a}, {a, b}});
    // q is initial but not OQ; b is an answer enabled by an answer
    auto w = validate_arena(bad, 2);
    REQUIRE(w.size() == 2);
    auto has = [&](const char* tag) {
        return std::any_of(w.begin(), w.end(), [&](const std::string& x) { return x.rfind(tag, 0) == 0; });
    };
    CHECK(has("E1"));
    CHECK(has("E2"));
}

TEST_CASE("views on a hand-worked play") {
    auto a = lollipop_arena(lollipop_arena(nat(), nat()), nat());
    auto s = pos("R.q L.R.q@0 L.L.q@1 L.L.3@2 L.R.5@1");
    REQUIRE(check_legal(*a, s).ok());
    CHECK(p_view_indices(*a, s, s.size()) == std::vector<std::size_t>{0, 1, 4});
    CHECK(p_view(*a, s) == pos("R.q L.R.q@0 L.R.5@1"));
    CHECK(o_view_indices(*a, s, 3) == std::vector<std::size_t>{0, 1, 2});
    CHECK(o_view(*a, pos("R.q L.R.q@0 L.L.q@1 L.L.3@2")) == pos("R.q L.R.q@0 L.L.q@1 L.L.3@2"));
}

TEST_CASE("legality failures are classified") {
    auto n = lollipop_arena(nat(), nat());
    SUBCASE("missing justifier") {
        auto r = check_legal(*n, pos("R.q L.q"));
        CHECK(r.failure == LegalityFailure::Justification);
        CHECK(r.at == 1);
    }
    SUBCASE("wrong enabler") {
        CHECK(check_legal(*n, pos("R.q R.3@0 L.3@0")).failure == LegalityFailure::Justification);
    }
    SUBCASE("two Opponent moves in a row") {
        auto r = check_legal(*n, pos("R.q L.q@0 L.3@1 L.4@1"));
        CHECK(r.failure == LegalityFailure::Alternation);
        CHECK(r.at == 3);
    }
    SUBCASE("opening with a Player move") {
        CHECK(check_legal(*n, pos("R.3")).failure != LegalityFailure::None);
    }
    SUBCASE("justifier hidden from the P-view") {
        auto c = chain_arena();
        auto ok = pos("q0 p1@0 o2@1 p3@2 o4@1");
        REQUIRE(check_legal(*c, ok).ok());
        CHECK(p_view_indices(*c, ok, ok.size()) == std::vector<std::size_t>{0, 1, 4});
        auto good = ok;
        good.push_back(Occ{mv("p5"), 4});
        CHECK(check_legal(*c, good).ok());
        auto bad = ok;
        bad.push_back(Occ{mv("p3"), 2});
        auto r = check_legal(*c, bad);
        CHECK(r.failure == LegalityFailure::Visibility);
        CHECK(r.at == 5);
        CHECK(check_extension(*c, bad).failure == LegalityFailure::Visibility);
    }
}

TEST_CASE("threads and restriction") {
    auto s = pos("R.q L.q@0 L.2@1 L.q@0 L.5@3 R.7@0");
    CHECK(initial_occurrences(s) == std::vector<std::size_t>{0});
    CHECK(root_of(s, 4) == 0);
    CHECK(restrict_tag(s, "L") == pos("q 2@0 q 5@2"));
    CHECK(restrict_tag(s, "R") == pos("q 7@0"));

    auto t = pos("L.q R.q L.0@0 R.1@1");
    CHECK(thread(t, {1}) == pos("R.q R.1@0"));
    CHECK_THROWS_AS(thread(t, {2}), Error);
}

TEST_CASE("position serialization") {
    auto s = pos("R.q L.q@0 L.2@1 R.3:1@0");
    CHECK(position_from_json(to_json(s)) == s);
    CHECK(to_string(s) == "R.q L.q@0 L.2@1 R.3:1@0");
    CHECK(PositionLess{}(pos("q"), pos("q 0@0")));
    CHECK_FALSE(PositionLess{}(pos("q 0@0"), pos("q")));
}

// ---------------------------------------------------------------- properties

TEST_CASE("property: random legal positions are legal at every prefix") {
    std::mt19937 rng(11);
    for (auto& a : sample_arenas())
        for (int i = 0; i < 60; ++i) {
            auto s = random_legal(*a, rng, 9, 3);
            CAPTURE(to_string(s));
            CHECK(check_legal(*a, s).ok());
            CHECK(is_justified(*a, s));
            for (std::size_t k = 1; k <= s.size(); ++k) {
                Position pre(s.begin(), s.begin() + k);
                CHECK(check_extension(*a, pre).ok());
            }
        }
}

TEST_CASE("property: views are subsequences and idempotent") {
    std::mt19937 rng(12);
    for (auto& a : sample_arenas())
        for (int i = 0; i < 60; ++i) {
            auto s = random_legal(*a, rng, 10, 3);
            if (s.empty()) continue;
            CAPTURE(to_string(s));
            for (auto idx : {p_view_indices(*a, s, s.size()), o_view_indices(*a, s, s.size())}) {
                REQUIRE(!idx.empty());
                CHECK(idx.back() == s.size() - 1);
                CHECK(std::is_sorted(idx.begin(), idx.end()));
            }
            auto pv = p_view(*a, s);
            auto ov = o_view(*a, s);
            CHECK(is_justified_relaxed(*a, pv));
            CHECK(is_justified_relaxed(*a, ov));
            CHECK(p_view(*a, pv) == pv);
            CHECK(o_view(*a, ov) == ov);
            // a P-view opens at the initial move its thread hangs from
            CHECK(a->initial(pv.front().move));
        }
}

TEST_CASE("property: tagging round trips through restriction") {
    std::mt19937 rng(13);
    auto a = nat();
    for (int i = 0; i < 50; ++i) {
        auto s = random_legal(*a, rng, 2, 5);
        Position t;
        for (auto o : s) {
            o.move = tag("R", o.move);
            t.push_back(o);
        }
        CHECK(restrict_tag(t, "R") == s);
        CHECK(restrict_tag(t, "L").empty());
    }
}
