#include "ludic/game.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace ludic {

bool is_position(const Game& g, const Position& s) { return is_legal(*g.arena(), s) && g.admits(s); }

namespace {

class TerminalGame : public Game {
public:
    ArenaPtr arena() const override { return terminal_arena(); }
    bool admits(const Position& s) const override { return s.empty(); }
    std::string describe() const override { return "I"; }
};

class FlatGame : public Game {
public:
    explicit FlatGame(AnswerSet a) : text_(a.text), arena_(flat_arena(std::move(a))) {}
    ArenaPtr arena() const override { return arena_; }
    bool admits(const Position& s) const override { return s.size() <= 2; }
    std::string describe() const override { return "flat" + text_; }

private:
    std::string text_;
    ArenaPtr arena_;
};

class TensorGame : public Game {
public:
    TensorGame(GamePtr a, GamePtr b) : a_(std::move(a)), b_(std::move(b)), arena_(tensor_arena(a_->arena(), b_->arena())) {}
    ArenaPtr arena() const override { return arena_; }
    bool admits(const Position& s) const override {
        return is_position(*a_, restrict_tag(s, "L")) && is_position(*b_, restrict_tag(s, "R"));
    }
    std::string describe() const override { return "(" + a_->describe() + " (x) " + b_->describe() + ")"; }

private:
    GamePtr a_, b_;
    ArenaPtr arena_;
};

class LollipopGame : public Game {
public:
    LollipopGame(GamePtr a, GamePtr b) : a_(std::move(a)), b_(std::move(b)), arena_(lollipop_arena(a_->arena(), b_->arena())) {}
    ArenaPtr arena() const override { return arena_; }
    bool admits(const Position& s) const override {
        return is_position(*a_, restrict_tag(s, "L")) && is_position(*b_, restrict_tag(s, "R"));
    }
    std::string describe() const override { return "(" + a_->describe() + " -o " + b_->describe() + ")"; }

private:
    GamePtr a_, b_;
    ArenaPtr arena_;
};

class ProductGame : public Game {
public:
    ProductGame(GamePtr a, GamePtr b) : a_(std::move(a)), b_(std::move(b)), arena_(tensor_arena(a_->arena(), b_->arena())) {}
    ArenaPtr arena() const override { return arena_; }
    bool admits(const Position& s) const override {
        auto l = restrict_tag(s, "L");
        auto r = restrict_tag(s, "R");
        if (!l.empty() && !r.empty()) return false;
        return is_position(*a_, l) && is_position(*b_, r);
    }
    std::string describe() const override { return "(" + a_->describe() + " & " + b_->describe() + ")"; }

private:
    GamePtr a_, b_;
    ArenaPtr arena_;
};

class BangGame : public Game {
public:
    BangGame(GamePtr a, unsigned bound) : a_(std::move(a)), bound_(bound) {}
    ArenaPtr arena() const override { return a_->arena(); }
    bool admits(const Position& s) const override {
        auto inits = initial_occurrences(s);
        if (bound_ && inits.size() > bound_) return false;
        for (auto i : inits)
            if (!a_->admits(thread(s, {i}))) return false;
        return true;
    }
    std::string describe() const override { return "!" + a_->describe(); }

private:
    GamePtr a_;
    unsigned bound_;
};

}  // namespace

GamePtr terminal_game() {
    static GamePtr g = std::make_shared<TerminalGame>();
    return g;
}
GamePtr flat_game(AnswerSet answers) { return std::make_shared<FlatGame>(std::move(answers)); }
GamePtr tensor_game(GamePtr a, GamePtr b) { return std::make_shared<TensorGame>(std::move(a), std::move(b)); }
GamePtr lollipop_game(GamePtr a, GamePtr b) { return std::make_shared<LollipopGame>(std::move(a), std::move(b)); }
GamePtr product_game(GamePtr a, GamePtr b) { return std::make_shared<ProductGame>(std::move(a), std::move(b)); }
GamePtr bang_game(GamePtr a, unsigned thread_bound) { return std::make_shared<BangGame>(std::move(a), thread_bound); }
GamePtr flat_of(std::vector<std::string> idents) { return flat_game(AnswerSet::finite(std::move(idents))); }
GamePtr nat_game() {
    static GamePtr g = flat_game(AnswerSet::naturals());
    return g;
}

// ---------------------------------------------------------------- finite games

FiniteGame::FiniteGame(std::shared_ptr<const FiniteArena> arena, PositionSet positions)
    : arena_(std::move(arena)), positions_(std::move(positions)) {}

std::string FiniteGame::describe() const {
    std::ostringstream out;
    out << "finite game (" << arena_->entries().size() << " moves, " << positions_.size() << " positions)";
    return out.str();
}

std::shared_ptr<const FiniteArena> economical_arena(const Arena& labels, const PositionSet& positions) {
    std::map<Move, FiniteArena::Entry> entries;
    std::vector<std::pair<Move, Move>> enabling;
    for (const auto& s : positions) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto& m = s[i].move;
            auto it = entries.find(m);
            if (it == entries.end()) it = entries.emplace(m, FiniteArena::Entry{m, labels.label(m), false}).first;
            if (!s[i].just)
                it->second.initial = true;
            else
                enabling.emplace_back(s[*s[i].just].move, m);
        }
    }
    std::vector<FiniteArena::Entry> es;
    for (auto& [m, e] : entries) es.push_back(e);
    return std::make_shared<FiniteArena>(std::move(es), std::move(enabling));
}

FiniteGamePtr make_finite(const Arena& labels, PositionSet positions) {
    positions.insert(Position{});
    auto arena = economical_arena(labels, positions);
    return std::make_shared<FiniteGame>(std::move(arena), std::move(positions));
}

FiniteGamePtr materialize(const Game& g, unsigned alphabet, std::size_t max_len) {
    const Arena& a = *g.arena();
    PositionSet all{Position{}};
    std::vector<Position> frontier{Position{}};
    auto initials = a.initial_moves(alphabet);
    for (std::size_t len = 0; len < max_len && !frontier.empty(); ++len) {
        std::vector<Position> next;
        for (const auto& s : frontier) {
            auto consider = [&](const Move& m, std::optional<std::size_t> j) {
                Position t = s;
                t.push_back(Occ{m, j});
                if (!check_extension(a, t).ok() || !g.admits(t)) return;
                if (all.insert(t).second) next.push_back(std::move(t));
            };
            for (const auto& m : initials) consider(m, std::nullopt);
            for (std::size_t j = 0; j < s.size(); ++j)
                for (const auto& m : a.enabled_by(s[j].move, alphabet)) consider(m, j);
        }
        frontier = std::move(next);
    }
    return make_finite(a, std::move(all));
}

nlohmann::json to_json(const FiniteGame& g) {
    nlohmann::json moves = nlohmann::json::array(), enables = nlohmann::json::array(), positions = nlohmann::json::array();
    for (const auto& e : g.finite_arena().entries()) {
        auto j = to_json(e.move);
        j["label"] = to_string(e.label);
        j["initial"] = e.initial;
        moves.push_back(j);
    }
    for (const auto& [m, n] : g.finite_arena().enabling()) enables.push_back({to_json(m), to_json(n)});
    for (const auto& s : g.positions()) positions.push_back(to_json(s));
    return {{"moves", moves}, {"enables", enables}, {"positions", positions}};
}

static MoveLabel label_from_string(const std::string& s) {
    if (s == "OQ") return OQ;
    if (s == "OA") return OA;
    if (s == "PQ") return PQ;
    if (s == "PA") return PA;
    throw Error("unknown label " + s);
}

FiniteGamePtr finite_game_from_json(const nlohmann::json& j) {
    std::vector<FiniteArena::Entry> entries;
    for (const auto& m : j.at("moves"))
        entries.push_back({move_from_json(m), label_from_string(m.at("label").get<std::string>()), m.value("initial", false)});
    std::vector<std::pair<Move, Move>> enabling;
    for (const auto& e : j.at("enables")) enabling.emplace_back(move_from_json(e.at(0)), move_from_json(e.at(1)));
    PositionSet ps;
    for (const auto& p : j.at("positions")) ps.insert(position_from_json(p));
    return std::make_shared<FiniteGame>(std::make_shared<FiniteArena>(std::move(entries), std::move(enabling)), std::move(ps));
}

// ---------------------------------------------------------------- predicates

static Position drop_last(const Position& s) { return Position(s.begin(), s.end() - 1); }

GameReport validate_game(const FiniteGame& g) {
    GameReport r;
    const auto& P = g.positions();
    const auto& A = g.finite_arena();
    auto fail = [&](bool& flag, const std::string& why) {
        if (flag) r.witnesses.push_back(why);
        flag = false;
    };
    if (P.empty() || !P.count(Position{})) fail(r.v1, "V1: the empty position is missing");
    std::set<Move> used;
    std::set<std::pair<Move, Move>> used_pairs;
    for (const auto& s : P) {
        if (!s.empty() && !P.count(drop_last(s))) fail(r.v1, "V1: prefix of [" + to_string(s) + "] is missing");
        auto lr = check_legal(A, s);
        if (!lr.ok()) fail(r.legal, "illegal [" + to_string(s) + "]: " + lr.reason);
        auto inits = initial_occurrences(s);
        if (inits.size() <= 12) {
            for (unsigned mask = 0; mask < (1u << inits.size()); ++mask) {
                std::vector<std::size_t> I;
                for (std::size_t k = 0; k < inits.size(); ++k)
                    if (mask & (1u << k)) I.push_back(inits[k]);
                if (!P.count(thread(s, I))) {
                    fail(r.v2, "V2: a thread of [" + to_string(s) + "] is missing");
                    break;
                }
            }
        }
        if (s.size() > 1 && !s.back().just) fail(r.well_opened, "initial move after the opening in [" + to_string(s) + "]");
        for (std::size_t i = 0; i < s.size(); ++i) {
            used.insert(s[i].move);
            if (s[i].just && *s[i].just < i) used_pairs.insert({s[*s[i].just].move, s[i].move});
        }
    }
    for (const auto& e : A.entries())
        if (!used.count(e.move)) fail(r.economical, "move " + to_string(e.move) + " occurs in no position");
    for (const auto& p : A.enabling())
        if (!used_pairs.count(p)) fail(r.economical, "enabling " + to_string(p.first) + " |- " + to_string(p.second) + " is never used");

    // a cycle reachable from an initial move yields an infinite enabling chain
    std::map<Move, int> colour;
    std::function<bool(const Move&)> cyclic = [&](const Move& m) {
        colour[m] = 1;
        for (const auto& n : A.enabled_by(m, 0)) {
            int c = colour[n];
            if (c == 1) return true;
            if (c == 0 && cyclic(n)) return true;
        }
        colour[m] = 2;
        return false;
    };
    for (const auto& m : A.initial_moves(0))
        if (colour[m] == 0 && cyclic(m)) {
            fail(r.well_founded, "enabling cycle reachable from " + to_string(m));
            break;
        }
    return r;
}

bool is_well_opened(const FiniteGame& g) {
    for (const auto& s : g.positions())
        if (s.size() > 1 && !s.back().just) return false;
    return true;
}

bool is_subgame(const FiniteGame& h, const FiniteGame& g) {
    const auto& HA = h.finite_arena();
    const auto& GA = g.finite_arena();
    for (const auto& e : HA.entries()) {
        if (!GA.contains(e.move) || GA.label(e.move) != e.label) return false;
        if (e.initial && !GA.initial(e.move)) return false;
    }
    for (const auto& [m, n] : HA.enabling())
        if (!GA.enables(m, n)) return false;
    for (const auto& s : h.positions())
        if (!g.positions().count(s)) return false;
    return true;
}

// ---------------------------------------------------------------- strategies

static std::vector<Position> extensions(const PositionSet& P, const Position& s) {
    Position lo = s;
    lo.push_back(Occ{Move{"", 0, ""}, std::nullopt});
    std::vector<Position> out;
    for (auto it = P.lower_bound(lo); it != P.end() && it->size() == s.size() + 1; ++it) {
        if (!std::equal(s.begin(), s.end(), it->begin())) break;
        out.push_back(*it);
    }
    return out;
}

PositionSet StrategyTable::even() const {
    PositionSet out;
    for (const auto& s : plays)
        if (s.size() % 2 == 0) out.insert(s);
    return out;
}

std::optional<Occ> StrategyTable::respond(const Position& s) const {
    auto ext = extensions(plays, s);
    if (ext.empty()) return std::nullopt;
    return ext.front().back();
}

TreeReport check_tree_form(const PositionSet& plays, const FiniteGame& g) {
    TreeReport r;
    if (!plays.count(Position{})) {
        r.tree = false;
        r.witness = "missing the empty play";
        return r;
    }
    for (const auto& s : plays) {
        if (!g.positions().count(s)) {
            r.tree = false;
            r.witness = "[" + to_string(s) + "] is not a position of the game";
            return r;
        }
        if (!s.empty() && !plays.count(drop_last(s))) {
            r.tree = false;
            r.witness = "prefix of [" + to_string(s) + "] is missing";
            return r;
        }
        if (s.size() % 2 == 1) {
            if (extensions(plays, s).size() > 1) {
                r.edet = false;
                r.witness = "two responses at [" + to_string(s) + "]";
            }
        } else {
            for (const auto& t : extensions(g.positions(), s))
                if (!plays.count(t)) {
                    r.oinc = false;
                    r.witness = "odd extension [" + to_string(t) + "] is missing";
                }
        }
    }
    return r;
}

StrategyTable tree_form(const PositionSet& even_plays, FiniteGamePtr g) {
    if (even_plays.empty() || !even_plays.count(Position{})) throw Error("S1: a strategy must contain the empty play");
    std::map<Position, Occ> chosen;
    for (const auto& s : even_plays) {
        if (s.size() % 2) throw Error("S1: odd play [" + to_string(s) + "] in an even play set");
        if (!g->positions().count(s)) throw Error("S1: [" + to_string(s) + "] is not a position of the game");
        if (s.empty()) continue;
        Position pre(s.begin(), s.end() - 2);
        if (!even_plays.count(pre)) throw Error("S1: even prefix of [" + to_string(s) + "] is missing");
        Position odd = drop_last(s);
        auto [it, fresh] = chosen.emplace(odd, s.back());
        if (!fresh && !(it->second == s.back())) throw Error("S2: two responses at [" + to_string(odd) + "]");
    }
    StrategyTable t{g, even_plays};
    for (const auto& s : even_plays)
        for (auto& o : extensions(g->positions(), s)) t.plays.insert(std::move(o));
    return t;
}

std::vector<StrategyTable> strategies_on(FiniteGamePtr g) {
    const auto& P = g->positions();
    std::function<std::vector<PositionSet>(const Position&)> subtrees = [&](const Position& s) {
        std::vector<PositionSet> result{PositionSet{s}};
        for (const auto& o : extensions(P, s)) {
            std::vector<PositionSet> options{PositionSet{}};
            for (const auto& r : extensions(P, o))
                for (auto& t : subtrees(r)) options.push_back(std::move(t));
            std::vector<PositionSet> merged;
            merged.reserve(result.size() * options.size());
            for (const auto& x : result)
                for (const auto& y : options) {
                    PositionSet z = x;
                    z.insert(y.begin(), y.end());
                    merged.push_back(std::move(z));
                }
            result = std::move(merged);
        }
        return result;
    };
    std::vector<StrategyTable> out;
    for (const auto& even : subtrees(Position{})) out.push_back(tree_form(even, g));
    return out;
}

std::shared_ptr<const FiniteArena> strategy_arena(const StrategyTable& s) {
    std::set<Move> ms;
    for (const auto& p : s.plays)
        for (const auto& o : p) ms.insert(o.move);
    const auto& GA = s.game->finite_arena();
    std::vector<FiniteArena::Entry> es;
    for (const auto& m : ms) es.push_back({m, GA.label(m), GA.initial(m)});
    std::vector<std::pair<Move, Move>> en;
    for (const auto& p : GA.enabling())
        if (ms.count(p.first) && ms.count(p.second)) en.push_back(p);
    return std::make_shared<FiniteArena>(std::move(es), std::move(en));
}

Consistency check_consistent(const std::vector<StrategyTable>& S) {
    std::vector<std::shared_ptr<const FiniteArena>> arenas;
    for (const auto& s : S) arenas.push_back(strategy_arena(s));
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b) {
            const auto& X = *arenas[a];
            const auto& Y = *arenas[b];
            std::vector<Move> common;
            for (const auto& e : X.entries())
                if (Y.contains(e.move)) common.push_back(e.move);
            for (const auto& m : common)
                if (X.label(m) != Y.label(m)) return {1, "label of " + to_string(m)};
            for (const auto& m : common) {
                if (X.initial(m) != Y.initial(m)) return {2, "initiality of " + to_string(m)};
                for (const auto& n : common)
                    if (X.enables(m, n) != Y.enables(m, n)) return {2, to_string(m) + " |- " + to_string(n)};
            }
            for (const auto& s : S[a].plays) {
                if (s.size() % 2 || !S[b].plays.count(s)) continue;
                auto ea = extensions(S[a].plays, s);
                auto eb = extensions(S[b].plays, s);
                if (ea != eb) return {3, "odd extensions of [" + to_string(s) + "]"};
            }
        }
    return {};
}

FiniteGamePtr union_game(const std::vector<StrategyTable>& S) {
    if (S.empty()) throw Error("the union of an empty set of strategies is undefined");
    auto c = check_consistent(S);
    if (!c.ok())
        throw Error("inconsistent strategies: clause " + std::to_string(c.violated_clause) + " fails (" + c.witness + ")");
    std::map<Move, FiniteArena::Entry> entries;
    std::vector<std::pair<Move, Move>> enabling;
    PositionSet P;
    for (const auto& s : S) {
        auto a = strategy_arena(s);
        for (const auto& e : a->entries()) entries.emplace(e.move, e);
        enabling.insert(enabling.end(), a->enabling().begin(), a->enabling().end());
        P.insert(s.plays.begin(), s.plays.end());
    }
    std::vector<FiniteArena::Entry> es;
    for (auto& [m, e] : entries) es.push_back(e);
    return std::make_shared<FiniteGame>(std::make_shared<FiniteArena>(std::move(es), std::move(enabling)), std::move(P));
}

bool same_strategy_set(const std::vector<StrategyTable>& a, const std::vector<StrategyTable>& b) {
    std::set<PositionSet> x, y;
    for (const auto& s : a) x.insert(s.plays);
    for (const auto& s : b) y.insert(s.plays);
    return x == y;
}

bool is_complete(const std::vector<StrategyTable>& S) {
    if (S.empty() || !check_consistent(S).ok()) return false;
    std::set<PositionSet> have;
    for (const auto& s : S) have.insert(s.plays);
    // patchworks of S are exactly the strategies on the union game
    for (const auto& p : strategies_on(union_game(S)))
        if (!have.count(p.plays)) return false;
    return true;
}

// ---------------------------------------------------------------- composition of games

Component component_of(const Move& m) {
    if (has_prefix(m, "L.L.L")) return Component::A;
    if (has_prefix(m, "L.L.R")) return Component::B1;
    if (has_prefix(m, "L.R")) return Component::B2;
    if (has_prefix(m, "R")) return Component::C;
    throw Error("move " + to_string(m) + " is not in an interaction arena");
}

static Position restrict_two(const Position& u, Component x, std::string_view px, Component y, std::string_view py) {
    std::vector<bool> keep(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto c = component_of(u[i].move);
        keep[i] = c == x || c == y;
    }
    Position r = restrict_positions(u, keep);
    for (auto& o : r) {
        auto c = component_of(o.move);
        o.move = c == x ? *retag(o.move, px, "L") : *retag(o.move, py, "R");
    }
    return r;
}

Position restrict_AB1(const Position& u) { return restrict_two(u, Component::A, "L.L.L", Component::B1, "L.L.R"); }
Position restrict_B2C(const Position& u) { return restrict_two(u, Component::B2, "L.R", Component::C, "R"); }
Position restrict_B1B2(const Position& u) { return restrict_two(u, Component::B1, "L.L.R", Component::B2, "L.R"); }

Position restrict_AC(const Position& u) {
    auto external = [&](std::size_t i) {
        auto c = component_of(u[i].move);
        return c == Component::A || c == Component::C;
    };
    std::vector<std::optional<std::size_t>> where(u.size());
    Position r;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!external(i)) continue;
        where[i] = r.size();
        Occ o = u[i];
        auto j = o.just;
        while (j && !external(*j)) j = u[*j].just;
        o.just = j ? where[*j] : std::nullopt;
        o.move = component_of(o.move) == Component::A ? *retag(o.move, "L.L.L", "L") : o.move;
        r.push_back(std::move(o));
    }
    return r;
}

bool is_copycat_shaped(const Arena& b_arena, const Position& s) {
    if (!is_legal(*lollipop_arena(std::shared_ptr<const Arena>(&b_arena, [](const Arena*) {}),
                                  std::shared_ptr<const Arena>(&b_arena, [](const Arena*) {})),
                  s))
        return false;
    for (std::size_t k = 0; k <= s.size(); k += 2) {
        Position t(s.begin(), s.begin() + k);
        if (restrict_tag(t, "L") != restrict_tag(t, "R")) return false;
    }
    return true;
}

namespace {

// B as seen from one side of a linear implication, labels restored to B's own.
std::shared_ptr<const FiniteArena> side_arena(const FiniteArena& a, std::string_view t, bool flipped) {
    std::vector<FiniteArena::Entry> es;
    for (const auto& e : a.entries())
        if (e.move.head() == t) {
            auto m = untag(e.move);
            es.push_back({m, flipped ? flip(e.label) : e.label, false});
        }
    std::vector<std::pair<Move, Move>> en;
    for (const auto& [m, n] : a.enabling())
        if (m.head() == t && n.head() == t) en.emplace_back(untag(m), untag(n));
    return std::make_shared<FiniteArena>(std::move(es), std::move(en));
}

}  // namespace

FiniteGamePtr compose_games(const FiniteGame& J, const FiniteGame& K) {
    const auto& JA = J.finite_arena();
    const auto& KA = K.finite_arena();
    for (const auto& e : JA.entries())
        if (e.move.head() != "L" && e.move.head() != "R") throw Error("left game is not of the shape A -o B");
    for (const auto& e : KA.entries())
        if (e.move.head() != "L" && e.move.head() != "R") throw Error("right game is not of the shape B -o C");

    // B's arena, assembled from both sides; initial B-moves are those J opens with.
    auto bj = side_arena(JA, "R", false);
    auto bk = side_arena(KA, "L", true);
    std::map<Move, FiniteArena::Entry> bent;
    for (const auto& e : bj->entries()) bent[e.move] = {e.move, e.label, JA.initial(tag("R", e.move))};
    for (const auto& e : bk->entries())
        if (!bent.count(e.move)) bent[e.move] = {e.move, e.label, false};
    for (const auto& [m, n] : KA.enabling())
        if (m.head() == "R" && n.head() == "L" && bent.count(untag(n))) bent[untag(n)].initial = true;
    std::vector<FiniteArena::Entry> bes;
    for (auto& [m, e] : bent) bes.push_back(e);
    auto ben = bj->enabling();
    ben.insert(ben.end(), bk->enabling().begin(), bk->enabling().end());
    auto B = std::make_shared<FiniteArena>(std::move(bes), std::move(ben));

    std::vector<Move> moves;
    for (const auto& e : JA.entries()) moves.push_back(*retag(e.move, "", "L.L"));
    for (const auto& e : KA.entries()) moves.push_back(e.move.head() == "L" ? *retag(e.move, "L", "L.R") : e.move);

    auto to_j = [](const Move& m) { return *retag(m, "L.L", ""); };
    auto to_k = [](const Move& m) { return component_of(m) == Component::B2 ? *retag(m, "L.R", "L") : m; };
    auto enables4 = [&](const Move& m, const Move& n) {
        auto cm = component_of(m), cn = component_of(n);
        bool mj = cm == Component::A || cm == Component::B1, nj = cn == Component::A || cn == Component::B1;
        if (mj && nj) return JA.enables(to_j(m), to_j(n));
        if (!mj && !nj) return KA.enables(to_k(m), to_k(n));
        if (cm == Component::B2 && cn == Component::B1) {
            auto b2 = untag(to_k(m));
            return B->initial(b2) && JA.initial(to_j(n));
        }
        return false;
    };

    auto ok = [&](const Position& u) {
        if (!J.positions().count(restrict_AB1(u))) return false;
        if (!K.positions().count(restrict_B2C(u))) return false;
        auto bb = restrict_B1B2(u);
        return is_copycat_shaped(*B, bb);
    };

    PositionSet external{Position{}};
    std::set<Position> seen{Position{}};
    std::deque<Position> work{Position{}};
    while (!work.empty()) {
        Position u = std::move(work.front());
        work.pop_front();
        auto consider = [&](const Move& m, std::optional<std::size_t> j) {
            Position v = u;
            v.push_back(Occ{m, j});
            if (seen.count(v) || !ok(v)) return;
            seen.insert(v);
            external.insert(restrict_AC(v));
            work.push_back(std::move(v));
        };
        for (const auto& m : moves)
            if (component_of(m) == Component::C && KA.initial(m)) consider(m, std::nullopt);
        for (std::size_t j = 0; j < u.size(); ++j)
            for (const auto& m : moves)
                if (enables4(u[j].move, m)) consider(m, j);
    }

    std::vector<FiniteArena::Entry> les;
    for (const auto& e : JA.entries())
        if (e.move.head() == "L") les.push_back(e);
    for (const auto& e : KA.entries())
        if (e.move.head() == "R") les.push_back(e);
    FiniteArena labels(std::move(les), {});
    return make_finite(labels, std::move(external));
}

}  // namespace ludic
