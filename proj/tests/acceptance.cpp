// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ludic/laws.hpp"

using namespace ludic;

namespace {

// Pinned bounds and budgets.
constexpr double kNumeralSeconds = 1.0;
constexpr unsigned kNumeralMax = 32;
constexpr unsigned kCompositionMax = 10;
constexpr std::size_t kCwfInstances = 5;
constexpr std::size_t kCwfDepth = 10;
constexpr std::size_t kTypeInstances = 3;
constexpr std::size_t kRecursionBudget = 64;
constexpr unsigned kGameMoves = 3;
constexpr std::size_t kGameLength = 4;
constexpr double kGameSeconds = 30.0;
constexpr std::size_t kInteractionLength = 10;
constexpr unsigned kFlatAlphabet = 3;
constexpr unsigned kIdAnswers = 3;
constexpr unsigned kEngineSamples = 100;
constexpr std::size_t kEngineDepth = 10;
constexpr double kEngineSeconds = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Move mv(const std::string& text) { return parse_move(text); }

std::string first_failure(const std::vector<LawCheck>& cs) {
    for (auto& c : cs)
        if (!c.ok) return c.suite + "/" + c.law + ": " + c.instance + " (" + c.detail + ")";
    return "";
}

// Law name -> (instances, failures)
std::map<std::string, std::pair<std::size_t, std::size_t>> tally(const std::vector<LawCheck>& cs) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> t;
    for (auto& c : cs) {
        auto& [n, bad] = t[c.law];
        ++n;
        bad += !c.ok;
    }
    return t;
}

// ---------------------------------------------------------------- 1

Outcome numerals() {
    Outcome r;
    auto t0 = std::chrono::steady_clock::now();
    std::string text;
    for (unsigned k = 0; k <= kNumeralMax; ++k) {
        std::string body = "zero";
        for (unsigned i = 0; i < k; ++i) body = "succ (" + body + ")";
        text += "def n" + std::to_string(k) + " : N = " + body + "\n";
    }
    auto p = load_program(text, "numerals");
    if (!p.ok()) return {false, to_string(p.diagnostics.front())};
    for (unsigned k = 0; k <= kNumeralMax; ++k) {
        const auto* d = p.find("n" + std::to_string(k));
        auto normal = nf(d->term);
        auto res = run_closed(elaborate_term(d->term));
        std::string printed = res.defined() ? res.occ.move.ident : "(none)";
        if (!alpha_equal(normal, mk_numeral(k)) || printed != std::to_string(k)) {
            r.pass = false;
            r.detail = "k=" + std::to_string(k) + ": nf " + pretty(normal) + ", eval " + printed;
            return r;
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << (kNumeralMax + 1) << " numerals in " << dt << "s (limit " << kNumeralSeconds << "s)";
    r.pass = dt < kNumeralSeconds;
    r.detail = os.str();
    return r;
}

// ---------------------------------------------------------------- 2

Outcome succ_then_double() {
    auto c = compose(succ_strategy(), double_strategy());
    Position q{Occ{mv("R.q"), std::nullopt}};
    if (c->respond(q) != Response::move(Occ{mv("L.q"), 0})) return {false, "q is not answered by q"};
    for (unsigned long n = 0; n <= kCompositionMax; ++n) {
        Position s = q;
        s.push_back(Occ{mv("L.q"), 0});
        s.push_back(Occ{Move{std::to_string(n), 0, "L"}, 1});
        auto want = Response::move(Occ{Move{std::to_string(2 * (n + 1)), 0, "R"}, 0});
        auto got = c->respond(s);
        if (got != want) return {false, "n=" + std::to_string(n) + ": " + to_string(got)};
    }
    return {true, "q -> q and n -> 2(n+1) for n = 0.." + std::to_string(kCompositionMax)};
}

// ---------------------------------------------------------------- 3, 4

Outcome cwf_equations() {
    LawOptions o;
    o.depth = kCwfDepth;
    auto cs = cwf_laws(o);
    auto t = tally(cs);
    Outcome r;
    if (t.size() != 8) return {false, std::to_string(t.size()) + " equations instead of 8"};
    for (auto& c : cs) {
        bool type_level = c.law.rfind("Ty-", 0) == 0;
        auto expected = type_level ? std::string("normal form") : "behaviour@" + std::to_string(kCwfDepth);
        if (c.method != expected) return {false, c.law + " checked by " + c.method};
    }
    std::size_t least = SIZE_MAX;
    for (auto& [law, v] : t) least = std::min(least, v.first);
    if (least < kCwfInstances) return {false, "an equation has only " + std::to_string(least) + " instances"};
    if (auto f = first_failure(cs); !f.empty()) return {false, f};
    return {true, "8 equations, " + std::to_string(cs.size()) + " instances, at least " + std::to_string(least) + " each"};
}

Outcome type_former_laws_ok() {
    LawOptions o;
    o.eval.unfold = kRecursionBudget;
    auto cs = type_former_laws(o);
    auto t = tally(cs);
    const std::vector<std::string> required{
        "Pi-Comp",      "lambda-Uniq",  "Pi-Subst",       "lambda-Subst", "App-Subst",  "Sigma-Comp",
        "R^Sigma-Uniq", "Sigma-Subst",  "Pair-Subst",     "R^Sigma-Subst", "Id-Comp",   "Id-Subst",
        "Refl-Subst",   "R^Id-Subst",   "N-CompZero",     "N-CompSucc",   "R^1-Strict", "Top-Uniq",
        "R^0-Subst"};
    for (auto& law : required) {
        auto it = t.find(law);
        if (it == t.end()) return {false, law + " missing"};
        if (it->second.first < kTypeInstances) return {false, law + " has " + std::to_string(it->second.first) + " instances"};
    }
    if (auto f = first_failure(cs); !f.empty()) return {false, f};
    return {true, std::to_string(t.size()) + " laws, " + std::to_string(cs.size()) + " instances, unfold budget " +
                      std::to_string(kRecursionBudget)};
}

// ---------------------------------------------------------------- 5

// Positions of a well-opened game over `labels` with the full admissible enabling.
void grow(const Arena& a, const Position& s, std::size_t max_len, std::vector<Position>& out) {
    out.push_back(s);
    if (s.size() >= max_len) return;
    auto try_add = [&](const Move& m, std::optional<std::size_t> j) {
        Position t = s;
        t.push_back(Occ{m, j});
        if (check_extension(a, t).ok()) grow(a, t, max_len, out);
    };
    if (s.empty())
        for (auto& m : a.initial_moves(0)) try_add(m, std::nullopt);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (auto& m : a.enabled_by(s[j].move, 0)) try_add(m, j);
}

// Every prefix-closed subset of a tree, given as its nodes in prefix order.
void prefix_closed_subsets(const std::vector<Position>& tree, std::size_t i, PositionSet& cur,
                           const std::function<void(const PositionSet&)>& visit) {
    if (i == tree.size()) {
        visit(cur);
        return;
    }
    const auto& s = tree[i];
    bool parent_in = s.empty() || cur.count(Position(s.begin(), s.end() - 1));
    if (parent_in) {
        cur.insert(s);
        prefix_closed_subsets(tree, i + 1, cur, visit);
        cur.erase(s);
    }
    if (!s.empty()) prefix_closed_subsets(tree, i + 1, cur, visit);
}

Outcome games_as_strategy_sets() {
    auto t0 = std::chrono::steady_clock::now();
    const MoveLabel labels[4] = {OQ, OA, PQ, PA};
    std::set<std::string> seen;
    std::size_t games = 0, complete_sets = 0, incomplete_sets = 0;
    std::string failure;

    auto check_game = [&](const FiniteArena& labelled, const PositionSet& P) {
        if (!failure.empty()) return;
        auto g = make_finite(labelled, P);
        if (!validate_game(*g).all() || !is_well_opened(*g)) return;
        if (!seen.insert(to_json(*g).dump()).second) return;
        ++games;
        auto S = strategies_on(g);
        auto u = union_game(S);
        if (u->positions() != g->positions() || !same_strategy_set(strategies_on(u), S)) {
            failure = "st(U st(G)) != st(G) for " + g->describe();
            return;
        }
        // every subset of st(G): complete ones are recovered exactly, incomplete ones are not
        std::size_t n = S.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<StrategyTable> T;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) T.push_back(S[i]);
            if (!check_consistent(T).ok()) continue;
            bool recovered = same_strategy_set(strategies_on(union_game(T)), T);
            if (is_complete(T)) {
                ++complete_sets;
                if (!recovered) failure = "complete set not recovered on " + g->describe();
            } else {
                ++incomplete_sets;
                if (recovered) failure = "incomplete set recovered on " + g->describe();
            }
        }
    };

    for (unsigned n = 1; n <= kGameMoves; ++n) {
        unsigned combos = 1;
        for (unsigned i = 0; i < n; ++i) combos *= 5;
        for (unsigned c = 0; c < combos; ++c) {
            std::vector<FiniteArena::Entry> es;
            bool any_initial = false;
            for (unsigned i = 0, x = c; i < n; ++i, x /= 5) {
                Move m{"m" + std::to_string(i), 0, ""};
                if (x % 5 == 4) {
                    es.push_back({m, OQ, true});
                    any_initial = true;
                } else {
                    es.push_back({m, labels[x % 5], false});
                }
            }
            if (!any_initial) continue;
            std::vector<std::pair<Move, Move>> en;
            for (auto& a : es)
                for (auto& b : es)
                    if (!b.initial && a.label.polarity != b.label.polarity &&
                        (b.label.kind == Kind::Q || a.label.kind == Kind::Q))
                        en.push_back({a.move, b.move});
            FiniteArena full(es, en);
            std::vector<Position> tree;
            grow(full, {}, kGameLength, tree);
            std::sort(tree.begin(), tree.end(), PositionLess{});
            PositionSet cur;
            prefix_closed_subsets(tree, 0, cur, [&](const PositionSet& P) { check_game(full, P); });
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << games << " games, " << complete_sets << " complete and " << incomplete_sets << " incomplete consistent sets in "
       << dt << "s (limit " << kGameSeconds << "s)";
    if (!failure.empty()) return {false, failure};
    return {dt < kGameSeconds && games > 0, os.str()};
}

// ---------------------------------------------------------------- 6

struct CoveringStats {
    std::size_t instances = 0, legal = 0, illegal = 0, failures = 0;
    std::string witness;
};

void cover(const Arena& X, const Arena& AB, const Arena& BB, const Arena& BC, const Arena& AC, const Position& s,
           CoveringStats& st) {
    if (s.size() >= kInteractionLength) return;
    auto visit = [&](const Move& m, std::optional<std::size_t> j) {
        Position t = s;
        t.push_back(Occ{m, j});
        auto comp = component_of(m);
        bool hyp_ab = is_legal(AB, restrict_AB1(t));
        bool hyp_bc = is_legal(BC, restrict_B2C(t));
        // m is an Opponent move of A -o C: the external part has odd length
        auto external = restrict_AC(t);
        if ((comp == Component::A || comp == Component::C) && external.size() % 2 == 1) {
            ++st.instances;
            bool lhs = is_legal(AC, external);
            bool rhs = hyp_ab && hyp_bc;
            (lhs ? st.legal : st.illegal)++;
            if (lhs != rhs && ++st.failures == 1) st.witness = to_string(t);
        }
        if (hyp_ab && hyp_bc && is_copycat_shaped(BB, restrict_B1B2(t))) cover(X, AB, BB, BC, AC, t, st);
    };
    if (s.empty())
        for (auto& m : X.initial_moves(0)) visit(m, std::nullopt);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (auto& m : X.enabled_by(s[j].move, 0)) visit(m, j);
}

GamePtr flat_n(unsigned k) {
    std::vector<std::string> ids;
    for (unsigned i = 0; i < k; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
    return flat_of(ids);
}

// Rewrites leading tags of every move; the first matching rule applies.
PositionSet retagged(const PositionSet& P, const std::vector<std::pair<std::string, std::string>>& rules) {
    PositionSet out;
    for (auto s : P) {
        for (auto& o : s)
            for (auto& [from, to] : rules)
                if (auto m = retag(o.move, from, to)) {
                    o.move = *m;
                    break;
                }
        out.insert(std::move(s));
    }
    return out;
}

Outcome covering_and_interaction() {
    CoveringStats st;
    for (unsigned k = 1; k <= kFlatAlphabet; ++k) {
        auto A = flat_n(k)->arena(), B = flat_n(k)->arena(), C = flat_n(k)->arena();
        auto X = lollipop_arena(lollipop_arena(lollipop_arena(A, B), B), C);
        auto AB = lollipop_arena(A, B), BB = B, BC = lollipop_arena(B, C), AC = lollipop_arena(A, C);
        cover(*X, *AB, *BB, *BC, *AC, {}, st);
    }
    if (st.failures) return {false, "covering lemma fails at " + st.witness};

    // tree forms commute with the constructions, over every strategy on N -o N at alphabet 2
    auto N = nat_game();
    auto nn = materialize(*lollipop_game(N, N), 2, 4);
    auto S = strategies_on(nn);
    struct Tally {
        std::size_t checked = 0, failed = 0;
        std::string witness;
    };
    std::map<std::string, Tally> by;
    auto expect = [&](const std::string& what, const PositionSet& lhs, const PositionSet& rhs) {
        auto& t = by[what];
        ++t.checked;
        if (lhs == rhs) return;
        ++t.failed;
        if (!t.witness.empty()) return;
        for (auto& p : lhs)
            if (!rhs.count(p)) return void(t.witness = "only in the construction on games: " + to_string(p));
        for (auto& p : rhs)
            if (!lhs.count(p)) return void(t.witness = "only in the tree form: " + to_string(p));
    };
    // agreement once the construction on games is cut down to positions of the target game
    std::map<std::string, std::size_t> inside;
    auto within = [](const PositionSet& P, const Game& g) {
        PositionSet out;
        for (auto& p : P)
            if (g.admits(p)) out.insert(p);
        return out;
    };
    auto tensor_big = materialize(*lollipop_game(tensor_game(N, N), tensor_game(N, N)), 2, 8);
    auto with_big = materialize(*lollipop_game(N, product_game(N, N)), 2, 4);
    for (auto& s : S)
        for (auto& t : S) {
            auto hs = game_of(s), ht = game_of(t);
            auto ss = table_strategy(s), ts = table_strategy(t);

            auto tl = materialize(*tensor_game(hs, ht), 2, 8);
            auto tr = game_of(table_of(*tensor_strategies(ss, ts), tensor_big));
            auto moved = retagged(tl->positions(), {{"L.L", "L.L"}, {"L.R", "R.L"}, {"R.L", "L.R"}, {"R.R", "R.R"}});
            expect("tensor", moved, tr->positions());
            inside["tensor"] += within(moved, *tensor_big) == tr->positions();

            auto wl = materialize(*product_game(hs, ht), 2, 4);
            auto wr = game_of(table_of(*pairing(ss, ts), with_big));
            expect("pairing", retagged(wl->positions(), {{"L.L", "L"}, {"L.R", "R.L"}, {"R.L", "L"}, {"R.R", "R.R"}}),
                   wr->positions());

            auto cl = compose_games(*hs, *ht);
            auto cr = game_of(table_of(*compose(ss, ts), nn));
            expect("composition", cl->positions(), cr->positions());
        }
    auto bang_nn = materialize(*lollipop_game(bang_game(N, 1), N), 2, 4);
    auto promoted_big = materialize(*lollipop_game(bang_game(N, 0), bang_game(N, 2)), 2, 8);
    for (auto& mu : strategies_on(bang_nn)) {
        auto pl = materialize(*bang_game(game_of(mu), 2), 2, 8);
        auto pr = game_of(table_of(*promotion(table_strategy(mu)), promoted_big));
        expect("promotion", pl->positions(), pr->positions());
        inside["promotion"] += within(pl->positions(), *promoted_big) == pr->positions();
    }
    std::ostringstream os;
    os << "covering: " << st.instances << " odd external extensions up to length " << kInteractionLength << " ("
       << st.legal << " legal, " << st.illegal << " illegal); constructions:";
    bool ok = st.legal > 0 && st.illegal > 0;
    for (auto& [name, t] : by) {
        os << " " << name << " " << t.checked - t.failed << "/" << t.checked;
        ok = ok && t.failed == 0;
    }
    for (auto& [name, t] : by)
        if (t.failed)
            os << "; " << name << " " << t.witness << " (agrees inside the target game on " << inside[name] << "/"
               << t.checked << ")";
    return {ok, os.str()};
}

// ---------------------------------------------------------------- 7

Outcome identity_games() {
    std::size_t pairs = 0;
    for (unsigned k = 1; k <= kIdAnswers; ++k) {
        auto g = materialize(*flat_n(k), 0, 2);
        auto S = strategies_on(g);
        if (S.size() != k + 1) return {false, "flat game with " + std::to_string(k) + " answers has " +
                                                  std::to_string(S.size()) + " strategies"};
        for (auto& s : S)
            for (auto& t : S) {
                ++pairs;
                if (has_total_strategy(id_hat(*g, s, t)) != (s == t))
                    return {false, "id game on " + g->describe() + " disagrees with equality"};
            }
    }
    return {true, std::to_string(pairs) + " ordered pairs on flat games with 1.." + std::to_string(kIdAnswers) + " answers"};
}

// ---------------------------------------------------------------- 8

Outcome paradox_freeness() {
    for (unsigned k = 0; k <= 2; ++k) universe_entry(k);
    for (unsigned k = 0; k <= 3; ++k) fs_entry(k);
    realize(ty_pi(ty_const("N"), ty_const("N")));
    realize(ty_sigma(ty_const("N"), ty_el(tm_code_fsn())));
    realize(ty_pi(ty_const("U", 0), ty_const("U", 0)));
    auto rep = check_paradox_free(Registry::global());
    if (!rep.ok) return {false, rep.witnesses.empty() ? "refuted" : rep.witnesses.front()};
    std::size_t checked = 0;
    for (auto& e : Registry::global().entries()) {
        if (!e.game) continue;
        ++checked;
        auto sup = e.game->arena()->rank_sup();
        if (sup && *sup >= e.rank) return {false, e.description + " has a move of rank " + std::to_string(*sup)};
        if (e.game->arena()->contains(name_of(e))) return {false, e.description + " contains its own name"};
    }
    return {checked > 0, std::to_string(checked) + " registered games"};
}

// ---------------------------------------------------------------- 9, 10

Outcome intensional() {
    auto cs = intensional_laws();
    auto t = tally(cs);
    for (auto law : {"EqRefl", "FunExt", "UIP", "Streicher-I", "Streicher-II", "Streicher-III", "UA"})
        if (!t.count(law)) return {false, std::string(law) + " missing"};
    if (t["EqRefl"].first < 2 || t["FunExt"].first < 2 || t["UA"].first < 2)
        return {false, "a two-sided check is missing"};
    if (auto f = first_failure(cs); !f.empty()) return {false, f};
    return {true, std::to_string(cs.size()) + " checks over 7 statements"};
}

Outcome engine() {
    auto t0 = std::chrono::steady_clock::now();
    LawOptions o;
    o.samples = kEngineSamples;
    o.depth = kEngineDepth;
    auto cs = engine_laws(o);
    double dt = seconds_since(t0);
    if (auto f = first_failure(cs); !f.empty()) return {false, f};
    std::ostringstream os;
    os << cs.size() << " laws on " << kEngineSamples << " samples in " << dt << "s (limit " << kEngineSeconds << "s)";
    return {cs.size() == 3 && dt < kEngineSeconds, os.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"numeral evaluation", numerals},
        {"succ ; double", succ_then_double},
        {"cwf equations", cwf_equations},
        {"type-former laws", type_former_laws_ok},
        {"games as strategy sets", games_as_strategy_sets},
        {"covering lemma and interaction theorem", covering_and_interaction},
        {"identity games", identity_games},
        {"paradox freeness", paradox_freeness},
        {"intensionality", intensional},
        {"engine laws", engine},
    };
    int failed = 0, i = 0;
    for (auto& c : criteria) {
        ++i;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << i << " " << c.name << ": " << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
