#include <deque>
#include <map>

#include "ludic/strategy.hpp"

namespace ludic {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Refuted: return "refuted";
    case Verdict::BoundExceeded: return "bound exceeded";
    }
    return "?";
}

std::vector<Position> opponent_moves(const Game& g, const Position& s, unsigned alphabet) {
    const Arena& a = *g.arena();
    std::vector<Position> out;
    auto consider = [&](const Move& m, std::optional<std::size_t> j) {
        if (!a.contains(m) || a.label(m).polarity != Polarity::O) return;
        Position t = s;
        t.push_back(Occ{m, j});
        if (check_extension(a, t).ok() && g.admits(t)) out.push_back(std::move(t));
    };
    for (const auto& m : a.initial_moves(alphabet)) consider(m, std::nullopt);
    // justifiers of O-moves must be P-moves visible in the O-view
    for (auto j : o_view_indices(a, s, s.size()))
        if (a.label(s[j].move).polarity == Polarity::P)
            for (const auto& m : a.enabled_by(s[j].move, alphabet)) consider(m, j);
    return out;
}

namespace {

// Visits every odd position reachable within the bounds, in breadth-first order.
// The visitor returns false to stop the search.
std::size_t explore(const Strategy& s, const Game& g, const ExploreOptions& o,
                    const std::function<bool(const Position&, const Response&)>& visit) {
    std::deque<Position> work{Position{}};
    std::size_t count = 0;
    while (!work.empty()) {
        Position e = std::move(work.front());
        work.pop_front();
        if (e.size() + 1 > o.depth) continue;
        for (auto& t : opponent_moves(g, e, o.alphabet)) {
            if (++count > o.max_positions) return count;
            Response r = s.respond(t);
            if (!visit(t, r)) return count;
            if (r.defined() && t.size() + 1 <= o.depth) {
                t.push_back(r.occ);
                if (t.size() < o.depth) work.push_back(std::move(t));
            }
        }
    }
    return count;
}

CheckResult finish(CheckResult r, std::size_t explored, const ExploreOptions& o) {
    r.explored = explored;
    if (r.verdict == Verdict::Holds && explored > o.max_positions) {
        r.verdict = Verdict::BoundExceeded;
        r.witness = "position budget exhausted";
    }
    return r;
}

struct RelativeResponse {
    ResponseKind kind;
    Move move;
    long just;
    bool operator==(const RelativeResponse& o) const {
        return kind == o.kind && (kind != ResponseKind::Move || (move == o.move && just == o.just));
    }
};

}  // namespace

CheckResult check_responses_valid(const Strategy& s, const Game& g, ExploreOptions o) {
    CheckResult res;
    auto n = explore(s, g, o, [&](const Position& t, const Response& r) {
        if (!r.defined()) return true;
        Position u = t;
        u.push_back(r.occ);
        if (!is_position(g, u)) {
            res.verdict = Verdict::Refuted;
            res.witness = "response " + to_string(r) + " at [" + to_string(t) + "] leaves the game";
            return false;
        }
        return true;
    });
    return finish(res, n, o);
}

CheckResult check_innocent(const Strategy& s, const Game& g, ExploreOptions o) {
    CheckResult res;
    const Arena& a = *g.arena();
    std::map<std::string, std::pair<Position, RelativeResponse>> seen;
    auto n = explore(s, g, o, [&](const Position& t, const Response& r) {
        auto idx = p_view_indices(a, t, t.size());
        Position view = p_view(a, t);
        RelativeResponse rel{r.kind, r.occ.move, -1};
        if (r.defined() && r.occ.just) {
            auto it = std::find(idx.begin(), idx.end(), *r.occ.just);
            rel.just = it == idx.end() ? -2 : static_cast<long>(it - idx.begin());
        }
        auto key = key_of(view);
        auto [it, fresh] = seen.emplace(key, std::make_pair(t, rel));
        if (!fresh && !(it->second.second == rel)) {
            res.verdict = Verdict::Refuted;
            res.witness = "[" + to_string(it->second.first) + "] and [" + to_string(t) + "] share the P-view [" +
                          to_string(view) + "] but get different responses";
            return false;
        }
        return true;
    });
    return finish(res, n, o);
}

CheckResult check_well_bracketed(const Strategy& s, const Game& g, ExploreOptions o) {
    CheckResult res;
    const Arena& a = *g.arena();
    auto n = explore(s, g, o, [&](const Position& t, const Response& r) {
        if (!r.defined() || a.label(r.occ.move).kind != Kind::A) return true;
        auto idx = p_view_indices(a, t, t.size());
        std::set<std::size_t> answered;
        for (auto i : idx)
            if (a.label(t[i].move).kind == Kind::A && t[i].just) answered.insert(*t[i].just);
        std::optional<std::size_t> pending;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
            if (a.label(t[*it].move).kind == Kind::Q && !answered.count(*it)) {
                pending = *it;
                break;
            }
        if (r.occ.just != pending) {
            res.verdict = Verdict::Refuted;
            res.witness = "answer " + to_string(r) + " at [" + to_string(t) + "] skips the pending question";
            return false;
        }
        return true;
    });
    return finish(res, n, o);
}

CheckResult check_total(const Strategy& s, const Game& g, ExploreOptions o) {
    CheckResult res;
    auto n = explore(s, g, o, [&](const Position& t, const Response& r) {
        if (r.defined()) return true;
        res.verdict = Verdict::Refuted;
        res.witness = "no response at [" + to_string(t) + "] " + to_string(r);
        return false;
    });
    return finish(res, n, o);
}

CheckResult check_noetherian(const Strategy& s, const Game& g, ExploreOptions o) {
    CheckResult res;
    const Arena& a = *g.arena();
    bool long_view = false;
    std::string long_witness;
    auto n = explore(s, g, o, [&](const Position& t, const Response& r) {
        if (r.kind == ResponseKind::Diverge) {
            res.verdict = Verdict::Refuted;
            res.witness = "infinite chattering at [" + to_string(t) + "]";
            return false;
        }
        if (r.defined() && !long_view) {
            Position u = t;
            u.push_back(r.occ);
            if (p_view_indices(a, u, u.size()).size() >= o.depth) {
                long_view = true;
                long_witness = "P-view of [" + to_string(u) + "] reaches the depth bound";
            }
        }
        return true;
    });
    if (res.verdict == Verdict::Holds && long_view) {
        res.verdict = Verdict::BoundExceeded;
        res.witness = long_witness;
    }
    return finish(res, n, o);
}

EquivResult equiv_at_depth(const Strategy& a, const Strategy& b, const Game& g, ExploreOptions o) {
    EquivResult res;
    std::deque<Position> work{Position{}};
    while (!work.empty()) {
        Position e = std::move(work.front());
        work.pop_front();
        if (e.size() + 1 > o.depth) continue;
        for (auto& t : opponent_moves(g, e, o.alphabet)) {
            if (++res.explored > o.max_positions) {
                res.exhausted = true;
                res.detail = "position budget exhausted; agreement holds on the explored part";
                return res;
            }
            auto ra = a.respond(t);
            auto rb = b.respond(t);
            if (!(ra == rb)) {
                res.equal = false;
                res.witness = t;
                res.detail = "at [" + to_string(t) + "]: " + to_string(ra) + " vs " + to_string(rb);
                return res;
            }
            if (ra.defined() && t.size() + 1 < o.depth) {
                t.push_back(ra.occ);
                work.push_back(std::move(t));
            }
        }
    }
    return res;
}

PositionSet even_plays(const Strategy& s, const Game& g, ExploreOptions o) {
    PositionSet out{Position{}};
    explore(s, g, o, [&](const Position& t, const Response& r) {
        if (r.defined()) {
            Position u = t;
            u.push_back(r.occ);
            out.insert(std::move(u));
        }
        return true;
    });
    return out;
}

StrategyTable table_of(const Strategy& s, FiniteGamePtr g) {
    std::size_t depth = 0;
    for (const auto& p : g->positions()) depth = std::max(depth, p.size());
    ExploreOptions o;
    o.depth = depth;
    o.alphabet = 0;
    PositionSet even{Position{}};
    explore(s, *g, o, [&](const Position& t, const Response& r) {
        if (!r.defined()) return true;
        Position u = t;
        u.push_back(r.occ);
        if (!g->positions().count(u)) throw Error("response " + to_string(r) + " at [" + to_string(t) + "] leaves the game");
        even.insert(std::move(u));
        return true;
    });
    return tree_form(even, g);
}

}  // namespace ludic
