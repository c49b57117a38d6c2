#pragma once

#include <map>
#include <set>

#include "ludic/arena.hpp"

namespace ludic {

using PositionSet = std::set<Position, PositionLess>;

// A game given by its arena and a decision procedure for valid positions.
// `admits` may assume that s is legal in arena().
class Game {
public:
    virtual ~Game() = default;
    virtual ArenaPtr arena() const = 0;
    virtual bool admits(const Position& s) const = 0;
    virtual std::string describe() const = 0;
};

using GamePtr = std::shared_ptr<const Game>;

bool is_position(const Game& g, const Position& s);

GamePtr terminal_game();
GamePtr flat_game(AnswerSet answers);
GamePtr tensor_game(GamePtr a, GamePtr b);
GamePtr lollipop_game(GamePtr a, GamePtr b);
GamePtr product_game(GamePtr a, GamePtr b);
// Threads share the moves of A; at most `thread_bound` initial occurrences (0 = unbounded).
GamePtr bang_game(GamePtr a, unsigned thread_bound = 3);
// Flat game over a finite set of rank-0 identifiers.
GamePtr flat_of(std::vector<std::string> idents);
GamePtr nat_game();

class FiniteGame : public Game {
public:
    FiniteGame(std::shared_ptr<const FiniteArena> arena, PositionSet positions);

    ArenaPtr arena() const override { return arena_; }
    const FiniteArena& finite_arena() const { return *arena_; }
    bool admits(const Position& s) const override { return positions_.count(s) > 0; }
    std::string describe() const override;
    const PositionSet& positions() const { return positions_; }

private:
    std::shared_ptr<const FiniteArena> arena_;
    PositionSet positions_;
};

using FiniteGamePtr = std::shared_ptr<const FiniteGame>;

// The smallest arena supporting the given positions, with labels taken from `labels`.
std::shared_ptr<const FiniteArena> economical_arena(const Arena& labels, const PositionSet& positions);
FiniteGamePtr make_finite(const Arena& labels, PositionSet positions);

// All valid positions of length <= max_len whose numeric identifiers lie below `alphabet`.
FiniteGamePtr materialize(const Game& g, unsigned alphabet, std::size_t max_len);

nlohmann::json to_json(const FiniteGame& g);
FiniteGamePtr finite_game_from_json(const nlohmann::json& j);

struct GameReport {
    bool v1 = true, v2 = true, legal = true, economical = true, well_opened = true, well_founded = true;
    std::vector<std::string> witnesses;
    bool all() const { return v1 && v2 && legal && economical && well_opened && well_founded; }
};

GameReport validate_game(const FiniteGame& g);
bool is_well_opened(const FiniteGame& g);
bool is_subgame(const FiniteGame& h, const FiniteGame& g);

// A strategy in tree form: its even plays together with their one-step odd extensions.
struct StrategyTable {
    FiniteGamePtr game;
    PositionSet plays;

    PositionSet even() const;
    // nullopt when undefined at s; s must be an odd play of the table.
    std::optional<Occ> respond(const Position& s) const;
    bool operator==(const StrategyTable& o) const { return plays == o.plays; }
};

struct TreeReport {
    bool tree = true, edet = true, oinc = true;
    std::string witness;
    bool ok() const { return tree && edet && oinc; }
};

TreeReport check_tree_form(const PositionSet& plays, const FiniteGame& g);
// Throws Error when S1 (non-empty, even-prefix-closed, valid) or S2 (determinism) fails.
StrategyTable tree_form(const PositionSet& even_plays, FiniteGamePtr g);
std::vector<StrategyTable> strategies_on(FiniteGamePtr g);

// The strategy viewed as a game: moves and enablings it actually uses.
std::shared_ptr<const FiniteArena> strategy_arena(const StrategyTable& s);

struct Consistency {
    int violated_clause = 0;  // 0 when consistent
    std::string witness;
    bool ok() const { return violated_clause == 0; }
};

Consistency check_consistent(const std::vector<StrategyTable>& S);
FiniteGamePtr union_game(const std::vector<StrategyTable>& S);
bool is_complete(const std::vector<StrategyTable>& S);
bool same_strategy_set(const std::vector<StrategyTable>& a, const std::vector<StrategyTable>& b);

// J ⊴ A -o B and K ⊴ B -o C, both tagged L/R. Result ⊴ A -o C, economical.
FiniteGamePtr compose_games(const FiniteGame& J, const FiniteGame& K);

// Interaction sequences over ((A -o B1) -o B2) -o C, tagged L.L.L / L.L.R / L.R / R.
enum class Component { A, B1, B2, C };
Component component_of(const Move& m);
Position restrict_AB1(const Position& u);
Position restrict_B2C(const Position& u);
Position restrict_B1B2(const Position& u);
// External part with the pointer of each A-initial move chased to its C justifier.
Position restrict_AC(const Position& u);
// Copy-cat condition on s ⊆ B1 -o B2 (tags L, R): every even prefix restricts equally.
bool is_copycat_shaped(const Arena& b_arena, const Position& s);

}  // namespace ludic
