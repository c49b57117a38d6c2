#pragma once

#include <cstdint>
#include <deque>

#include "ludic/strategy.hpp"

namespace ludic {

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

// 1 + the supremum of move ranks; 1 for a game without moves.
unsigned game_rank(const Arena& a);

struct RegistryEntry {
    std::uint64_t number = 0;  // cantor_pair(index, rank)
    unsigned rank = 1;
    std::uint64_t index = 0;   // registration order among games of the same rank
    std::string key;           // canonical JSON of the construction
    std::string description;
    GamePtr game;              // null for entries loaded from disk and not yet rebuilt
};

// The name of a registered game: its construction number at its rank.
Move name_of(const RegistryEntry& e);

// Append-only table of constructed games. Construction numbers never change once assigned.
class Registry {
public:
    Registry();

    static Registry& global();

    // Idempotent on the key: a second registration returns the first entry.
    RegistryEntry add(const nlohmann::json& key, std::string description, GamePtr game);
    std::optional<RegistryEntry> find(std::uint64_t number) const;
    std::optional<RegistryEntry> find_key(const nlohmann::json& key) const;
    std::optional<RegistryEntry> find_name(const Move& m) const;
    std::vector<RegistryEntry> entries() const;

    nlohmann::json to_json() const;
    // Merges a persisted table; throws Error when a key is already bound to another number.
    void merge(const nlohmann::json& j);
    void load(const std::string& path);
    void save(const std::string& path) const;

private:
    mutable std::mutex mu_;
    std::deque<RegistryEntry> entries_;
    std::map<std::string, std::size_t> by_key_;
    std::map<std::uint64_t, std::size_t> by_number_;
    std::map<unsigned, std::uint64_t> next_index_;
};

// Base games, registered in this order when the global registry is created.
RegistryEntry terminal_entry();
RegistryEntry empty_entry();
RegistryEntry unit_entry();
RegistryEntry nat_entry();
GamePtr empty_game();
GamePtr unit_game();

// The k-th universe: a flat game whose answers are the names of registered games of rank <= k+1.
GamePtr universe_game(unsigned k);
RegistryEntry universe_entry(unsigned k);

// k sequential rounds of N: maximal plays q.n1.q.n2...q.nk. One round is exactly N.
GamePtr fs_game(std::optional<unsigned> k);
RegistryEntry fs_entry(unsigned k);

// The code of a registered game: answers the universe's question with its name.
StrategyPtr code_of(const RegistryEntry& e);
// Decodes a strategy on a universe; throws Error when its answer is not a registered name.
RegistryEntry el(const Strategy& mu);
// mu answers with a name of rank <= k+1.
bool is_code_in(const Strategy& mu, unsigned k);

struct ParadoxReport {
    bool ok = true;
    std::vector<std::string> witnesses;
};
// Every registered game's name outranks its moves and is not itself a move.
ParadoxReport check_paradox_free(const Registry& r, unsigned alphabet = 8);

// ---------------------------------------------------------------- predicative games

// A strategy of a predicative game, in tree form, with the tag that disambiguates its moves.
struct PStrategy {
    std::string name;
    StrategyTable table;
};

// A game given by its set of strategies. Explicit sets come from predicative union; infinite
// ones are described by a membership test plus a sampler bounded by the move alphabet.
class PredicativeGame {
public:
    using Member = std::function<bool(const StrategyTable&)>;
    using Sampler = std::function<std::vector<PStrategy>(unsigned)>;

    PredicativeGame(std::string name, Member member, Sampler sample, unsigned rank, FiniteGamePtr carrier = nullptr);

    const std::string& name() const { return name_; }
    unsigned rank() const { return rank_; }
    bool contains(const StrategyTable& t) const { return member_(t); }
    std::vector<PStrategy> strategies(unsigned alphabet) const { return sample_(alphabet); }
    // An ordinary game holding every strategy, when one is known; used to tabulate oracles.
    FiniteGamePtr carrier() const { return carrier_; }

    // External plays: each strategy's plays with moves tagged by the strategy's name.
    // The opening protocol (question, then the strategy's name) is not part of them.
    PositionSet plays(unsigned alphabet) const;

private:
    std::string name_;
    Member member_;
    Sampler sample_;
    unsigned rank_;
    FiniteGamePtr carrier_;
};

unsigned strategy_rank(const StrategyTable& t);

PredicativeGame predicative_union(std::string name, std::vector<PStrategy> S);
PredicativeGame parallel_union(std::string name, std::vector<PredicativeGame> S);
// Every strategy of a finite game, undefined ones included.
PredicativeGame lift(std::string name, FiniteGamePtr g);

// Common strategies on flat games.
StrategyTable answer_table(const std::string& answer);
StrategyTable answer_table(const Move& answer);
StrategyTable silent_table(bool has_question);  // bottom on a flat game, or the empty strategy on I
PredicativeGame nat_pgame(unsigned alphabet);
PredicativeGame evens_pgame();
PredicativeGame odds_pgame();
PredicativeGame universe_pgame(unsigned k);

// st(H) within st(G), on the strategies H samples below the alphabet.
bool is_predicative_subgame(const PredicativeGame& h, const PredicativeGame& g, unsigned alphabet = 8);

// ---------------------------------------------------------------- products of PLIs

// phi_sigma : sigma -o pi(sigma), tabulated.
struct PliComponent {
    StrategyTable domain;
    StrategyTable codomain;
    StrategyTable play;
};

struct PliFamily {
    std::vector<PliComponent> parts;
};

struct UniformityReport {
    bool ok = true;
    std::string witness;
};

// Components sharing an odd position must respond alike there.
UniformityReport check_uniform(const PliFamily& f);

// The strategy a finite game defines when viewed as a game.
FiniteGamePtr game_of(const StrategyTable& t);

// pi_phi(sigma): phi run against sigma, as a strategy on the codomain.
StrategyPtr apply_pli(StrategyPtr phi, StrategyPtr sigma);
// Tabulates an oracle phi : A -o B over A's sampled strategies. Throws Error when some
// pi(sigma) falls outside B.
PliFamily pli_of(StrategyPtr phi, const PredicativeGame& A, const PredicativeGame& B, unsigned alphabet);
// Every uniform family, by brute force over finite strategy sets.
std::vector<PliFamily> pli_strategies(const PredicativeGame& A, const PredicativeGame& B, unsigned alphabet);
bool is_total(const StrategyTable& t);

StrategyPtr generalized_copy_cat();
StrategyPtr generalized_dereliction();
// sigma with every play holding more than one initial move removed.
StrategyTable single_thread(const StrategyTable& sigma);

}  // namespace ludic
