#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ludic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Polarity { O, P };
enum class Kind { Q, A };

struct MoveLabel {
    Polarity polarity = Polarity::O;
    Kind kind = Kind::Q;
    auto operator<=>(const MoveLabel&) const = default;
};

inline constexpr MoveLabel OQ{Polarity::O, Kind::Q};
inline constexpr MoveLabel OA{Polarity::O, Kind::A};
inline constexpr MoveLabel PQ{Polarity::P, Kind::Q};
inline constexpr MoveLabel PA{Polarity::P, Kind::A};

MoveLabel flip(MoveLabel l);
std::string to_string(MoveLabel l);

// A ranked move. The tag path records disjoint-union provenance, outermost
// tag first, as a dot-separated string ("L.R" is the right part of the left part).
struct Move {
    std::string ident;
    unsigned rank = 0;
    std::string path;

    auto operator<=>(const Move&) const = default;

    std::vector<std::string> tag_path() const;
    std::string head() const;
};

Move tag(std::string_view t, const Move& m);
Move untag(const Move& m);
// Replaces a leading tag prefix ("L.R") by another; nullopt when the prefix does not match.
std::optional<Move> retag(const Move& m, std::string_view from, std::string_view to);
bool has_prefix(const Move& m, std::string_view prefix);

std::string to_string(const Move& m);
Move parse_move(std::string_view text);

struct Occ {
    Move move;
    std::optional<std::size_t> just;
    auto operator<=>(const Occ&) const = default;
};

using Position = std::vector<Occ>;

// Canonical order: length first, then lexicographic on occurrences.
struct PositionLess {
    bool operator()(const Position& a, const Position& b) const;
};

std::string to_string(const Position& s);
std::string key_of(const Position& s);
nlohmann::json to_json(const Position& s);
Position position_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Move& m);
Move move_from_json(const nlohmann::json& j);

// Symbolic arena: decision procedures plus a bounded enumerator. Numeric
// identifiers are enumerated below `alphabet`; named moves are always listed.
class Arena {
public:
    virtual ~Arena() = default;
    virtual bool contains(const Move& m) const = 0;
    virtual MoveLabel label(const Move& m) const = 0;
    virtual bool initial(const Move& m) const = 0;
    virtual bool enables(const Move& m, const Move& n) const = 0;
    virtual std::vector<Move> initial_moves(unsigned alphabet) const = 0;
    virtual std::vector<Move> enabled_by(const Move& m, unsigned alphabet) const = 0;
    // Supremum of move ranks, nullopt when there are no moves at all.
    virtual std::optional<unsigned> rank_sup() const = 0;
    virtual std::string describe() const = 0;

    std::vector<Move> enumerate(unsigned alphabet) const;
};

using ArenaPtr = std::shared_ptr<const Arena>;

// Answer sets of flat arenas.
struct AnswerSet {
    std::function<bool(const Move&)> member;
    std::function<std::vector<Move>(unsigned)> list;
    std::optional<unsigned> rank_sup;
    std::string text;

    static AnswerSet naturals();
    static AnswerSet finite(std::vector<std::string> idents);
    static AnswerSet moves(std::vector<Move> ms);
};

ArenaPtr terminal_arena();
ArenaPtr flat_arena(AnswerSet answers);
ArenaPtr tensor_arena(ArenaPtr a, ArenaPtr b);
ArenaPtr lollipop_arena(ArenaPtr a, ArenaPtr b);
ArenaPtr union_arena(std::vector<ArenaPtr> parts);

class FiniteArena : public Arena {
public:
    struct Entry {
        Move move;
        MoveLabel label;
        bool initial = false;
    };
    FiniteArena(std::vector<Entry> entries, std::vector<std::pair<Move, Move>> enabling);

    bool contains(const Move& m) const override;
    MoveLabel label(const Move& m) const override;
    bool initial(const Move& m) const override;
    bool enables(const Move& m, const Move& n) const override;
    std::vector<Move> initial_moves(unsigned alphabet) const override;
    std::vector<Move> enabled_by(const Move& m, unsigned alphabet) const override;
    std::optional<unsigned> rank_sup() const override;
    std::string describe() const override;

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::pair<Move, Move>>& enabling() const { return enabling_; }

private:
    const Entry* find(const Move& m) const;
    std::vector<Entry> entries_;
    std::vector<std::pair<Move, Move>> enabling_;
};

// E1-E3 violations on the enumerated fragment.
std::vector<std::string> validate_arena(const Arena& a, unsigned alphabet = 32);

bool is_justified(const Arena& a, const Position& s, std::string* why = nullptr);
// Views may carry non-initial occurrences whose justifier was elided.
bool is_justified_relaxed(const Arena& a, const Position& s, std::string* why = nullptr);

// Indices of the occurrences of s[0..len) that survive in the view.
std::vector<std::size_t> p_view_indices(const Arena& a, const Position& s, std::size_t len);
std::vector<std::size_t> o_view_indices(const Arena& a, const Position& s, std::size_t len);
Position p_view(const Arena& a, const Position& s);
Position o_view(const Arena& a, const Position& s);

enum class LegalityFailure { None, Justification, Alternation, Visibility };
struct LegalityReport {
    LegalityFailure failure = LegalityFailure::None;
    std::size_t at = 0;
    std::string reason;
    bool ok() const { return failure == LegalityFailure::None; }
};

LegalityReport check_legal(const Arena& a, const Position& s);
bool is_legal(const Arena& a, const Position& s);
// Checks only the last occurrence, assuming the prefix is legal.
LegalityReport check_extension(const Arena& a, const Position& s);

std::vector<std::size_t> initial_occurrences(const Position& s);
std::size_t root_of(const Position& s, std::size_t i);
// Keeps the occurrences selected by `keep`; pointers into dropped occurrences are removed.
Position restrict_positions(const Position& s, const std::vector<bool>& keep);
Position thread(const Position& s, const std::vector<std::size_t>& initials);

// Restriction to the moves tagged `t`, with the tag stripped.
Position restrict_tag(const Position& s, std::string_view t);

}  // namespace ludic
