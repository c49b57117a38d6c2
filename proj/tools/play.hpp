#pragma once

#include <iosfwd>

#include "ludic/laws.hpp"

namespace ludic::cli {

struct PlayTarget {
    std::string title;
    StrategyPtr strategy;
    GamePtr game;
};

// Reads an Opponent move written as `move [@ j]`. A bare identifier such as `q` or `3`
// is resolved against the legal O-moves when that is unambiguous; an omitted justifier
// defaults to the latest visible move that enables it. Returns the extended position, or
// nullopt with a diagnostic naming the failed legality condition.
std::optional<Position> extend_by_opponent(const Game& g, const Position& s, std::string_view text, unsigned alphabet,
                                           std::string& diagnostic);

// Appends the Player's answer, checking it. Throws Error when the engine emits an illegal move.
Response player_turn(const PlayTarget& t, Position& s);

// The interactive loop. Returns the process exit code.
int play_repl(const PlayTarget& t, unsigned alphabet, std::istream& in, std::ostream& out);

}  // namespace ludic::cli
