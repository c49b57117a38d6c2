#pragma once

#include <functional>
#include <mutex>
#include <unordered_map>

#include "ludic/game.hpp"

namespace ludic {

enum class ResponseKind { Move, None, Diverge };

struct Response {
    ResponseKind kind = ResponseKind::None;
    Occ occ;

    static Response move(Occ o) { return {ResponseKind::Move, std::move(o)}; }
    static Response none() { return {}; }
    static Response diverge() { return {ResponseKind::Diverge, {}}; }
    bool defined() const { return kind == ResponseKind::Move; }
    bool operator==(const Response& o) const { return kind == o.kind && (kind != ResponseKind::Move || occ == o.occ); }
};

std::string to_string(const Response& r);

// A next-move oracle. `respond` is called on odd-length legal positions.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual Response respond(const Position& s) const = 0;
    virtual std::string describe() const = 0;
};

using StrategyPtr = std::shared_ptr<const Strategy>;

StrategyPtr table_strategy(StrategyTable t);
StrategyPtr function_strategy(std::function<Response(const Position&)> f, std::string name);
StrategyPtr bottom_strategy();
// Answers the opening question with `m`, justified by it.
StrategyPtr answer_strategy(Move m);
StrategyPtr numeral(unsigned long n);

// N -o N
StrategyPtr succ_strategy();
StrategyPtr double_strategy();
// Asks its argument first and then answers 0 regardless.
StrategyPtr strict_zero_strategy();

// Copy-cat between prefix pairs: an O-move under one prefix is copied under the other.
StrategyPtr retag_copycat(std::vector<std::pair<std::string, std::string>> rules, std::string name);
StrategyPtr copy_cat();
StrategyPtr dereliction();

struct RetagRule {
    std::string outer;
    std::string inner;
};
// Runs `inner` through a bijective renaming of tag prefixes (outer <-> inner).
StrategyPtr retag_strategy(StrategyPtr inner, std::vector<RetagRule> rules, std::string name);

// sigma: C -o A, tau: C -o B  ==>  <sigma, tau>: C -o A & B.
StrategyPtr pairing(StrategyPtr sigma, StrategyPtr tau);
// sigma: A -o B, tau: C -o D  ==>  A (x) C -o B (x) D.
StrategyPtr tensor_strategies(StrategyPtr sigma, StrategyPtr tau);
// sigma: !A -o B  ==>  !A -o !B, one copy of sigma per thread.
StrategyPtr promotion(StrategyPtr sigma);

struct TraceEntry {
    Component component;
    Move move;
    std::optional<std::size_t> justifier;
    bool hidden = false;
};

nlohmann::json to_json(const TraceEntry& e);
std::string to_string(Component c);

struct InteractionOutcome {
    Response response;
    std::vector<TraceEntry> trace;
    std::size_t steps = 0;
};

constexpr std::size_t kDefaultSteps = 4096;

// sigma: A -o B, tau: B -o C  ==>  sigma ; tau : A -o C.
StrategyPtr compose(StrategyPtr sigma, StrategyPtr tau, std::size_t budget = kDefaultSteps);
// Runs the interaction on an external position, recording every move.
InteractionOutcome interact(const StrategyPtr& sigma, const StrategyPtr& tau, const Position& s,
                            std::size_t budget = kDefaultSteps);

// ---------------------------------------------------------------- bounded checks

struct ExploreOptions {
    unsigned alphabet = 4;
    std::size_t depth = 10;
    std::size_t max_positions = 250000;
};

enum class Verdict { Holds, Refuted, BoundExceeded };
std::string to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::Holds;
    std::string witness;
    std::size_t explored = 0;
    bool ok() const { return verdict == Verdict::Holds; }
};

// Opponent moves that extend the even position s within the game.
std::vector<Position> opponent_moves(const Game& g, const Position& s, unsigned alphabet);

CheckResult check_innocent(const Strategy& s, const Game& g, ExploreOptions o = {});
CheckResult check_well_bracketed(const Strategy& s, const Game& g, ExploreOptions o = {});
CheckResult check_total(const Strategy& s, const Game& g, ExploreOptions o = {});
CheckResult check_noetherian(const Strategy& s, const Game& g, ExploreOptions o = {});
// Every response extends to a valid position of g.
CheckResult check_responses_valid(const Strategy& s, const Game& g, ExploreOptions o = {});

struct EquivResult {
    bool equal = true;
    bool exhausted = false;  // the position budget ran out before the depth was covered
    std::optional<Position> witness;
    std::string detail;
    std::size_t explored = 0;
};

// Breadth-first, so the witness is a shortest distinguishing odd position.
EquivResult equiv_at_depth(const Strategy& a, const Strategy& b, const Game& g, ExploreOptions o = {});

// The tree form of a strategy on a finite game, built by playing against every Opponent.
StrategyTable table_of(const Strategy& s, FiniteGamePtr g);
// Even plays reachable within the bounds.
PositionSet even_plays(const Strategy& s, const Game& g, ExploreOptions o = {});

}  // namespace ludic
