#pragma once

// Helpers shared by the unit tests: position builders and random generators.

#include <random>

#include "ludic/laws.hpp"

namespace ludic::test {

inline Move mv(std::string_view text) { return parse_move(text); }

// "R.q L.q@0 L.3@1" -> Position
inline Position pos(std::string_view text) {
    Position s;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        auto j = text.find(' ', i);
        if (j == std::string_view::npos) j = text.size();
        auto tok = text.substr(i, j - i);
        Occ o;
        if (auto at = tok.find('@'); at != std::string_view::npos) {
            o.move = parse_move(tok.substr(0, at));
            o.just = std::stoul(std::string(tok.substr(at + 1)));
        } else {
            o.move = parse_move(tok);
        }
        s.push_back(o);
        i = j;
    }
    return s;
}

// Every legal one-move extension of s in the arena, numeric moves below `alphabet`.
inline std::vector<Position> legal_extensions(const Arena& a, const Position& s, unsigned alphabet) {
    std::vector<Position> out;
    auto try_add = [&](const Move& m, std::optional<std::size_t> j) {
        Position t = s;
        t.push_back(Occ{m, j});
        if (check_extension(a, t).ok()) out.push_back(std::move(t));
    };
    for (auto& m : a.initial_moves(alphabet)) try_add(m, std::nullopt);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (auto& m : a.enabled_by(s[j].move, alphabet)) try_add(m, j);
    return out;
}

// A random legal position built by uniform choice among legal extensions.
inline Position random_legal(const Arena& a, std::mt19937& rng, std::size_t max_len, unsigned alphabet) {
    Position s;
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::size_t n = len(rng);
    while (s.size() < n) {
        auto next = legal_extensions(a, s, alphabet);
        if (next.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        s = next[pick(rng)];
    }
    return s;
}

// A random valid position of a game, by walking the game's own positions.
inline Position random_valid(const Game& g, std::mt19937& rng, std::size_t max_len, unsigned alphabet) {
    Position s;
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::size_t n = len(rng);
    while (s.size() < n) {
        std::vector<Position> next;
        for (auto& t : legal_extensions(*g.arena(), s, alphabet))
            if (g.admits(t)) next.push_back(std::move(t));
        if (next.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        s = next[pick(rng)];
    }
    return s;
}

inline Move random_move(std::mt19937& rng) {
    static const char* idents[] = {"q", "0", "7", "42", "*", "a", "tt"};
    static const char* paths[] = {"", "L", "R", "L.R", "R.R.L", "B1"};
    std::uniform_int_distribution<int> i(0, 6), p(0, 5), r(0, 3);
    return Move{idents[i(rng)], static_cast<unsigned>(r(rng)), paths[p(rng)]};
}

// Plays the Opponent on N: after each Player question in the domain, answer `arg`.
// Returns the value Player finally gives, or nullopt.
inline std::optional<unsigned long> run_on_nat(const Strategy& f, unsigned long arg, std::size_t max_moves = 64) {
    Position s{Occ{mv("R.q"), std::nullopt}};
    while (s.size() < max_moves) {
        auto r = f.respond(s);
        if (!r.defined()) return std::nullopt;
        s.push_back(r.occ);
        const Move& m = r.occ.move;
        if (m.path == "R" && m.ident != "q") return std::stoul(m.ident);
        if (m.ident != "q") return std::nullopt;
        s.push_back(Occ{Move{std::to_string(arg), 0, m.path}, s.size() - 1});
    }
    return std::nullopt;
}

inline ExploreOptions explore(unsigned alphabet, std::size_t depth) {
    ExploreOptions o;
    o.alphabet = alphabet;
    o.depth = depth;
    return o;
}

}  // namespace ludic::test
