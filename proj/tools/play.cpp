#include "play.hpp"

#include <iostream>
#include <set>
#include <sstream>

namespace ludic::cli {

namespace {

std::string failure_name(LegalityFailure f) {
    switch (f) {
    case LegalityFailure::Justification: return "justification";
    case LegalityFailure::Alternation: return "alternation";
    case LegalityFailure::Visibility: return "visibility";
    case LegalityFailure::None: break;
    }
    return "none";
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string show(const Position& s) { return s.empty() ? "(empty)" : to_string(s); }

unsigned numeric_bound(const Move& m, unsigned alphabet) {
    if (!m.ident.empty() && std::all_of(m.ident.begin(), m.ident.end(), ::isdigit) && m.ident.size() < 9)
        return std::max<unsigned>(alphabet, static_cast<unsigned>(std::stoul(m.ident)) + 1);
    return alphabet;
}

}  // namespace

std::optional<Position> extend_by_opponent(const Game& g, const Position& s, std::string_view text, unsigned alphabet,
                                           std::string& diagnostic) {
    const Arena& a = *g.arena();
    auto line = trim(text);
    std::optional<std::size_t> just;
    if (auto at = line.find('@'); at != std::string::npos) {
        auto j = trim(std::string_view(line).substr(at + 1));
        line = trim(std::string_view(line).substr(0, at));
        try {
            just = std::stoul(j);
        } catch (const std::exception&) {
            diagnostic = "justifier '" + j + "' is not an index";
            return std::nullopt;
        }
    }
    Move m;
    try {
        m = parse_move(line);
    } catch (const Error& e) {
        diagnostic = e.what();
        return std::nullopt;
    }

    if (m.path.empty() && !a.contains(m)) {
        std::vector<Position> matches;
        for (auto& t : opponent_moves(g, s, numeric_bound(m, alphabet))) {
            const auto& o = t.back();
            if (o.move.ident == m.ident && o.move.rank == m.rank && (!just || o.just == just)) matches.push_back(t);
        }
        if (matches.size() == 1) return matches.front();
        if (matches.size() > 1) {
            diagnostic = "'" + line + "' is ambiguous:";
            for (auto& t : matches) diagnostic += " " + to_string(t.back().move) + (t.back().just ? "@" + std::to_string(*t.back().just) : "");
            return std::nullopt;
        }
        // no legal reading: pick the arena move it names so the failure below is specific
        std::set<Move> named;
        auto bound = numeric_bound(m, alphabet);
        auto collect = [&](const std::vector<Move>& ms) {
            for (auto& n : ms)
                if (n.ident == m.ident && n.rank == m.rank && a.label(n).polarity == Polarity::O) named.insert(n);
        };
        collect(a.initial_moves(bound));
        for (auto& o : s) collect(a.enabled_by(o.move, bound));
        if (named.size() == 1) m = *named.begin();
    }

    if (!a.contains(m)) {
        diagnostic = "justification: " + to_string(m) + " is not a move of the game";
        return std::nullopt;
    }
    if (a.label(m).polarity != Polarity::O) {
        diagnostic = "alternation: " + to_string(m) + " is a Player move";
        return std::nullopt;
    }
    if (!just && !a.initial(m)) {
        auto view = o_view_indices(a, s, s.size());
        for (auto it = view.rbegin(); it != view.rend(); ++it)
            if (a.enables(s[*it].move, m)) {
                just = *it;
                break;
            }
    }
    if (just && *just >= s.size()) {
        diagnostic = "justification: there is no occurrence " + std::to_string(*just);
        return std::nullopt;
    }
    Position t = s;
    t.push_back(Occ{m, just});
    auto rep = check_extension(a, t);
    if (!rep.ok()) {
        diagnostic = failure_name(rep.failure) + ": " + rep.reason;
        return std::nullopt;
    }
    if (!g.admits(t)) {
        diagnostic = "[" + to_string(t) + "] is legal but not a position of the game";
        return std::nullopt;
    }
    return t;
}

Response player_turn(const PlayTarget& t, Position& s) {
    auto r = t.strategy->respond(s);
    if (!r.defined()) return r;
    Position u = s;
    u.push_back(r.occ);
    auto rep = check_extension(*t.game->arena(), u);
    if (!rep.ok() || !t.game->admits(u))
        throw std::logic_error("engine reply " + to_string(r) + " is illegal after [" + to_string(s) + "]: " +
                               (rep.ok() ? "not a position of the game" : rep.reason));
    s = std::move(u);
    return r;
}

int play_repl(const PlayTarget& t, unsigned alphabet, std::istream& in, std::ostream& out) {
    const Arena& a = *t.game->arena();
    Position s;
    out << "playing against " << t.title << "\n"
        << "enter O-moves as `move [@ justifier]`; commands: moves, view, undo, quit\n";
    std::string line;
    while (true) {
        out << "position: " << show(s) << "\nO> " << std::flush;
        if (!std::getline(in, line)) break;
        auto cmd = trim(line);
        if (cmd.empty()) continue;
        if (cmd == "quit" || cmd == "exit") break;
        if (cmd == "undo") {
            if (s.empty()) {
                out << "nothing to undo\n";
                continue;
            }
            bool last_p = a.label(s.back().move).polarity == Polarity::P;
            s.pop_back();
            if (last_p && !s.empty()) s.pop_back();
            continue;
        }
        if (cmd == "moves") {
            auto ms = opponent_moves(*t.game, s, alphabet);
            if (ms.empty()) out << "no legal O-moves below alphabet " << alphabet << "\n";
            for (auto& m : ms) out << "  " << to_string(m.back().move) << (m.back().just ? "@" + std::to_string(*m.back().just) : "") << "\n";
            continue;
        }
        if (cmd == "view") {
            out << "P-view: " << show(p_view(a, s)) << "\nO-view: " << show(o_view(a, s)) << "\n";
            continue;
        }
        std::string diag;
        auto next = extend_by_opponent(*t.game, s, cmd, alphabet, diag);
        if (!next) {
            out << "illegal move, " << diag << "\n";
            continue;
        }
        s = std::move(*next);
        out << "O: " << to_string(s.back().move) << (s.back().just ? "@" + std::to_string(*s.back().just) : "") << "\n";
        auto r = player_turn(t, s);
        switch (r.kind) {
        case ResponseKind::Move:
            out << "P: " << to_string(r.occ.move) << (r.occ.just ? "@" + std::to_string(*r.occ.just) : "") << "\n";
            break;
        case ResponseKind::None: out << "P: no response\n"; break;
        case ResponseKind::Diverge: out << "P: diverges (budget exhausted)\n"; break;
        }
    }
    out << "\n";
    return 0;
}

}  // namespace ludic::cli
