#include <algorithm>

#include "ludic/predicative.hpp"

namespace ludic {

PredicativeGame::PredicativeGame(std::string name, Member member, Sampler sample, unsigned rank, FiniteGamePtr carrier)
    : name_(std::move(name)), member_(std::move(member)), sample_(std::move(sample)), rank_(rank), carrier_(std::move(carrier)) {}

PositionSet PredicativeGame::plays(unsigned alphabet) const {
    PositionSet out{Position{}};
    auto S = strategies(alphabet);
    for (std::size_t i = 0; i < S.size(); ++i) {
        std::string t = "s" + std::to_string(i);
        for (auto p : S[i].table.plays) {
            for (auto& o : p) o.move = tag(t, o.move);
            out.insert(std::move(p));
        }
    }
    return out;
}

unsigned strategy_rank(const StrategyTable& t) {
    std::optional<unsigned> sup;
    for (const auto& p : t.plays)
        for (const auto& o : p) sup = std::max(sup.value_or(0), o.move.rank);
    return sup ? *sup + 1 : 1;
}

namespace {

bool member_of(const std::vector<PStrategy>& S, const StrategyTable& t) {
    return std::any_of(S.begin(), S.end(), [&](const PStrategy& s) { return s.table == t; });
}

FiniteGamePtr try_union(const std::vector<PStrategy>& S) {
    if (S.empty()) return nullptr;
    std::vector<StrategyTable> tables;
    for (const auto& s : S) tables.push_back(s.table);
    if (!check_consistent(tables).ok()) return nullptr;
    return union_game(tables);
}

const Move kQ{"q", 0, ""};

// The answer of a flat strategy, if its plays are {e, q, q.a}.
std::optional<Move> flat_answer(const StrategyTable& t) {
    if (t.plays.size() != 3) return std::nullopt;
    const Position& last = *t.plays.rbegin();
    if (last.size() != 2 || !(last[0].move == kQ) || last[0].just || last[1].just != std::size_t{0}) return std::nullopt;
    return last[1].move;
}

bool is_flat_bottom(const StrategyTable& t) {
    return t.plays.size() == 2 && t.plays.rbegin()->size() == 1 && t.plays.rbegin()->front().move == kQ;
}

std::optional<unsigned long> numeral_value(const Move& m) {
    if (m.rank != 0 || !m.path.empty() || m.ident.empty() || m.ident.size() > 18) return std::nullopt;
    for (char c : m.ident)
        if (c < '0' || c > '9') return std::nullopt;
    if (m.ident.size() > 1 && m.ident[0] == '0') return std::nullopt;
    return std::stoul(m.ident);
}

PredicativeGame numerals_where(std::string name, std::function<bool(unsigned long)> keep) {
    auto member = [keep](const StrategyTable& t) {
        auto a = flat_answer(t);
        if (!a) return false;
        auto n = numeral_value(*a);
        return n && keep(*n);
    };
    auto sample = [keep](unsigned alphabet) {
        std::vector<PStrategy> out;
        for (unsigned n = 0; n < alphabet; ++n)
            if (keep(n)) out.push_back({std::to_string(n), answer_table(std::to_string(n))});
        return out;
    };
    return PredicativeGame(std::move(name), member, sample, 1);
}

}  // namespace

PredicativeGame predicative_union(std::string name, std::vector<PStrategy> S) {
    unsigned rank = 1;
    for (const auto& s : S) rank = std::max(rank, strategy_rank(s.table));
    auto carrier = try_union(S);
    auto shared = std::make_shared<std::vector<PStrategy>>(std::move(S));
    return PredicativeGame(
        std::move(name), [shared](const StrategyTable& t) { return member_of(*shared, t); },
        [shared](unsigned) { return *shared; }, rank, carrier);
}

PredicativeGame parallel_union(std::string name, std::vector<PredicativeGame> S) {
    unsigned rank = 1;
    for (const auto& g : S) rank = std::max(rank, g.rank());
    auto shared = std::make_shared<std::vector<PredicativeGame>>(std::move(S));
    auto member = [shared](const StrategyTable& t) {
        return std::any_of(shared->begin(), shared->end(), [&](const PredicativeGame& g) { return g.contains(t); });
    };
    auto sample = [shared](unsigned alphabet) {
        std::vector<PStrategy> out;
        for (const auto& g : *shared)
            for (auto& s : g.strategies(alphabet))
                if (!member_of(out, s.table)) out.push_back(std::move(s));
        return out;
    };
    return PredicativeGame(std::move(name), member, sample, rank);
}

PredicativeGame lift(std::string name, FiniteGamePtr g) {
    std::vector<PStrategy> S;
    auto all = strategies_on(g);
    for (std::size_t i = 0; i < all.size(); ++i) S.push_back({"s" + std::to_string(i), all[i]});
    auto shared = std::make_shared<std::vector<PStrategy>>(std::move(S));
    return PredicativeGame(
        std::move(name), [shared](const StrategyTable& t) { return member_of(*shared, t); },
        [shared](unsigned) { return *shared; }, game_rank(g->finite_arena()), g);
}

StrategyTable answer_table(const std::string& answer) { return answer_table(Move{answer, 0, ""}); }

StrategyTable answer_table(const Move& answer) {
    auto arena = flat_arena(AnswerSet::moves({answer}));
    Position q{Occ{kQ, std::nullopt}};
    Position qa = q;
    qa.push_back(Occ{answer, 0});
    auto g = make_finite(*arena, PositionSet{Position{}, q, qa});
    return tree_form(PositionSet{Position{}, qa}, g);
}

StrategyTable silent_table(bool has_question) {
    if (!has_question) {
        auto g = make_finite(*terminal_arena(), PositionSet{Position{}});
        return tree_form(PositionSet{Position{}}, g);
    }
    auto arena = flat_arena(AnswerSet::finite({}));
    auto g = make_finite(*arena, PositionSet{Position{}, Position{Occ{kQ, std::nullopt}}});
    return tree_form(PositionSet{Position{}}, g);
}

PredicativeGame nat_pgame(unsigned alphabet) {
    auto member = [](const StrategyTable& t) {
        if (is_flat_bottom(t)) return true;
        auto a = flat_answer(t);
        return a && numeral_value(*a).has_value();
    };
    auto sample = [](unsigned alpha) {
        std::vector<PStrategy> out{{"bottom", silent_table(true)}};
        for (unsigned n = 0; n < alpha; ++n) out.push_back({std::to_string(n), answer_table(std::to_string(n))});
        return out;
    };
    return PredicativeGame("N", member, sample, 1, materialize(*nat_game(), alphabet, 2));
}

PredicativeGame evens_pgame() {
    return numerals_where("2N", [](unsigned long n) { return n % 2 == 0; });
}

PredicativeGame odds_pgame() {
    return numerals_where("2N+1", [](unsigned long n) { return n % 2 == 1; });
}

PredicativeGame universe_pgame(unsigned k) {
    auto member = [k](const StrategyTable& t) {
        auto a = flat_answer(t);
        if (!a) return false;
        auto e = Registry::global().find_name(*a);
        return e && e->rank <= k + 1;
    };
    auto sample = [k](unsigned) {
        std::vector<PStrategy> out;
        for (const auto& e : Registry::global().entries())
            if (e.rank <= k + 1) out.push_back({e.description, answer_table(name_of(e))});
        return out;
    };
    return PredicativeGame("U" + std::to_string(k), member, sample, k + 2);
}

bool is_predicative_subgame(const PredicativeGame& h, const PredicativeGame& g, unsigned alphabet) {
    for (const auto& s : h.strategies(alphabet))
        if (!g.contains(s.table)) return false;
    return true;
}

// ---------------------------------------------------------------- PLI

UniformityReport check_uniform(const PliFamily& f) {
    UniformityReport rep;
    for (std::size_t i = 0; i < f.parts.size(); ++i)
        for (std::size_t j = i + 1; j < f.parts.size(); ++j) {
            const auto& a = f.parts[i].play;
            const auto& b = f.parts[j].play;
            for (const auto& s : a.plays) {
                if (s.size() % 2 == 0 || !b.plays.count(s)) continue;
                auto ra = a.respond(s), rb = b.respond(s);
                if (ra != rb) {
                    rep.ok = false;
                    rep.witness = "components " + std::to_string(i) + " and " + std::to_string(j) + " disagree at [" +
                                  to_string(s) + "]";
                    return rep;
                }
            }
        }
    return rep;
}

FiniteGamePtr game_of(const StrategyTable& t) { return make_finite(*t.game->arena(), t.plays); }

StrategyPtr apply_pli(StrategyPtr phi, StrategyPtr sigma) {
    auto lifted = retag_strategy(std::move(sigma), {{"R", ""}}, "point");
    return retag_strategy(compose(std::move(lifted), std::move(phi)), {{"", "R"}}, "pi");
}

namespace {

std::size_t longest(const PositionSet& P) {
    std::size_t n = 0;
    for (const auto& p : P) n = std::max(n, p.size());
    return n;
}

FiniteGamePtr component_game(const StrategyTable& dom, const StrategyTable& cod) {
    auto g = lollipop_game(game_of(dom), game_of(cod));
    return materialize(*g, 0, longest(dom.plays) + longest(cod.plays));
}

}  // namespace

PliFamily pli_of(StrategyPtr phi, const PredicativeGame& A, const PredicativeGame& B, unsigned alphabet) {
    if (!B.carrier()) throw Error("codomain " + B.name() + " has no carrier game to tabulate into");
    PliFamily f;
    for (const auto& s : A.strategies(alphabet)) {
        auto pi = table_of(*apply_pli(phi, table_strategy(s.table)), B.carrier());
        if (!B.contains(pi)) throw Error(phi->describe() + " sends " + s.name + " outside " + B.name());
        auto play = table_of(*phi, component_game(s.table, pi));
        f.parts.push_back({s.table, pi, play});
    }
    return f;
}

std::vector<PliFamily> pli_strategies(const PredicativeGame& A, const PredicativeGame& B, unsigned alphabet) {
    auto SA = A.strategies(alphabet);
    auto SB = B.strategies(alphabet);
    std::vector<PliFamily> out;
    if (SB.empty() && !SA.empty()) return out;
    std::vector<std::size_t> pi(SA.size(), 0);
    while (true) {
        std::vector<std::vector<StrategyTable>> options;
        for (std::size_t i = 0; i < SA.size(); ++i) options.push_back(strategies_on(component_game(SA[i].table, SB[pi[i]].table)));
        std::vector<std::size_t> pick(SA.size(), 0);
        bool empty = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
        while (!empty) {
            PliFamily f;
            for (std::size_t i = 0; i < SA.size(); ++i) f.parts.push_back({SA[i].table, SB[pi[i]].table, options[i][pick[i]]});
            if (check_uniform(f).ok) out.push_back(std::move(f));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
        std::size_t i = 0;
        while (i < pi.size() && ++pi[i] == SB.size()) pi[i++] = 0;
        if (i == pi.size()) break;
    }
    return out;
}

bool is_total(const StrategyTable& t) {
    for (const auto& s : t.plays)
        if (s.size() % 2 == 1 && !t.respond(s)) return false;
    return true;
}

StrategyPtr generalized_copy_cat() { return copy_cat(); }
StrategyPtr generalized_dereliction() { return dereliction(); }

StrategyTable single_thread(const StrategyTable& sigma) {
    StrategyTable out{sigma.game, {}};
    for (const auto& p : sigma.plays)
        if (initial_occurrences(p).size() <= 1) out.plays.insert(p);
    return out;
}

}  // namespace ludic
