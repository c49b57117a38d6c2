#include <algorithm>

#include "ludic/cwf.hpp"

namespace ludic {

namespace {

const Move kRq{"q", 0, "R"};
const Move kLRq{"q", 0, "L.R"};

std::optional<std::uint64_t> numeral_in(const Move& m, std::string_view path) {
    if (m.path != path || m.rank != 0 || m.ident.empty() || m.ident.size() > 18) return std::nullopt;
    for (char c : m.ident)
        if (c < '0' || c > '9') return std::nullopt;
    return std::stoull(m.ident);
}

StrategyPtr answer_r(Move m, std::string name) {
    Move tagged = tag("R", m);
    return function_strategy(
        [tagged](const Position& s) {
            return s.size() == 1 && s[0].move == kRq ? Response::move({tagged, 0}) : Response::none();
        },
        std::move(name));
}

// Gamma.N |- f(v): asks the last variable, then answers f(n).
StrategyPtr ask_last(std::function<Move(std::uint64_t)> f, std::string name) {
    return function_strategy(
        [f](const Position& s) {
            if (s.size() == 1 && s[0].move == kRq) return Response::move({kLRq, 0});
            if (s.size() == 3 && s[0].move == kRq && s[1].move == kLRq && s[2].just == std::size_t{1})
                if (auto n = numeral_in(s[2].move, "L.R")) return Response::move({tag("R", f(*n)), 0});
            return Response::none();
        },
        std::move(name));
}

// R^N(cz, cs) on !(Gamma & N) -o C. Reads the natural number once, then plays
// F_n with F_0 = cz and F_{k+1} = cs . <<id, k>, F_k> on the remaining context.
class RNatStrategy : public Strategy {
public:
    RNatStrategy(StrategyPtr cz, StrategyPtr cs, EvalOptions o) : cz_(std::move(cz)), cs_(std::move(cs)), o_(o) {}

    Response respond(const Position& s) const override {
        if (s.empty() || s.size() % 2 == 0 || !has_prefix(s[0].move, "R")) return Response::none();
        if (o_.unfold == 0) return Response::diverge();
        if (s.size() == 1) return Response::move({kLRq, 0});
        if (!(s[1].move == kLRq) || s[1].just != std::size_t{0} || s[2].just != std::size_t{1}) return Response::none();
        auto n = numeral_in(s[2].move, "L.R");
        if (!n) return Response::none();
        if (*n + 1 > o_.unfold) return Response::diverge();

        Position t{s[0]};
        for (std::size_t i = 3; i < s.size(); ++i) {
            Occ o = s[i];
            if (has_prefix(o.move, "L.L"))
                o.move = *retag(o.move, "L.L", "L");
            else if (!has_prefix(o.move, "R"))
                return Response::none();
            if (o.just) {
                if (*o.just == 0)
                    o.just = 0;
                else if (*o.just >= 3)
                    o.just = *o.just - 2;
                else
                    return Response::none();
            }
            t.push_back(std::move(o));
        }
        auto r = unfolding(*n)->respond(t);
        if (!r.defined()) return r;
        if (has_prefix(r.occ.move, "L")) r.occ.move = *retag(r.occ.move, "L", "L.L");
        if (r.occ.just && *r.occ.just > 0) r.occ.just = *r.occ.just + 2;
        return r;
    }

    std::string describe() const override { return "R_N(" + cz_->describe() + ", " + cs_->describe() + ")"; }

private:
    StrategyPtr unfolding(std::uint64_t n) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (cache_.empty()) cache_.push_back(cz_);
        while (cache_.size() <= n) {
            std::uint64_t k = cache_.size() - 1;
            auto env = pairing(pairing(dereliction(), answer_r(Move{std::to_string(k), 0, ""}, std::to_string(k))), cache_.back());
            cache_.push_back(compose(promotion(env), cs_, o_.steps));
        }
        return cache_[n];
    }

    StrategyPtr cz_, cs_;
    EvalOptions o_;
    mutable std::mutex mu_;
    mutable std::vector<StrategyPtr> cache_;
};

// R^0(tau): tau's question on 0 stands in for the opening move of C.
class REmptyStrategy : public Strategy {
public:
    explicit REmptyStrategy(StrategyPtr tau) : tau_(std::move(tau)) {}
    Response respond(const Position& s) const override {
        if (s.empty() || !has_prefix(s[0].move, "R")) return Response::none();
        Position t = s;
        t[0].move = kRq;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!has_prefix(t[i].move, "L")) return Response::none();
        auto r = tau_->respond(t);
        if (r.defined() && !has_prefix(r.occ.move, "L")) return Response::none();
        return r;
    }
    std::string describe() const override { return "R_0(" + tau_->describe() + ")"; }

private:
    StrategyPtr tau_;
};

bool mentions(const TmPtr& t, TmKind k) {
    if (t->kind == k) return true;
    return std::any_of(t->args.begin(), t->args.end(), [k](const TmPtr& a) { return mentions(a, k); });
}

RegistryEntry entry_of_const(const Ty& a) {
    if (a.base == "I") return terminal_entry();
    if (a.base == "0") return empty_entry();
    if (a.base == "1") return unit_entry();
    if (a.base == "N") return nat_entry();
    if (a.base == "U") return universe_entry(a.level);
    if (auto e = Registry::global().find(a.level)) return *e;
    throw Error("no registered game numbered " + std::to_string(a.level));
}

GamePtr game_of_entry(const RegistryEntry& e) {
    if (!e.game) throw Error("registered game " + e.description + " was loaded without its construction");
    return e.game;
}

}  // namespace

StrategyPtr compile(const TmPtr& t, const EvalOptions& o) {
    auto arg = [&](std::size_t i) { return compile(t->args[i], o); };
    switch (t->kind) {
    case TmKind::Id: return dereliction();
    case TmKind::Comp: return compose(promotion(arg(1)), arg(0), o.steps);
    case TmKind::P: return retag_copycat({{"R", "L.L"}}, "p");
    case TmKind::V: return retag_copycat({{"R", "L.R"}}, "v");
    case TmKind::Ext: return pairing(arg(0), arg(1));
    case TmKind::Top: return bottom_strategy();
    case TmKind::Star: return answer_r(Move{"*", 0, ""}, "*");
    case TmKind::Numeral: return answer_r(Move{std::to_string(t->value), 0, ""}, std::to_string(t->value));
    case TmKind::SuccV:
        return ask_last([](std::uint64_t n) { return Move{std::to_string(n + 1), 0, ""}; }, "succ(v)");
    case TmKind::Code: {
        auto e = Registry::global().find(t->value);
        if (!e) throw Error("code names an unregistered game: " + std::to_string(t->value));
        return answer_r(name_of(*e), "code(" + e->description + ")");
    }
    case TmKind::CodeFSN:
        return ask_last([](std::uint64_t n) { return name_of(fs_entry(static_cast<unsigned>(n))); }, "FSN(v)");
    case TmKind::Lambda: return retag_strategy(arg(0), {{"L", "L.L"}, {"R.L", "L.R"}, {"R.R", "R"}}, "lam");
    case TmKind::LambdaInv: return retag_strategy(arg(0), {{"L.L", "L"}, {"L.R", "R.L"}, {"R", "R.R"}}, "lam^-1");
    case TmKind::UPi:
    case TmKind::USigma:
    case TmKind::UId: {
        auto e = realize(ty_el(t), o);
        return answer_r(name_of(e), "code(" + e.description + ")");
    }
    case TmKind::PairTm: return pairing(arg(0), arg(1));
    case TmKind::Proj1: return retag_copycat({{"R", "L.R.L"}}, "fst");
    case TmKind::Proj2: return retag_copycat({{"R", "L.R.R"}}, "snd");
    case TmKind::Refl: return retag_copycat({{"R.R.L", "R.L.R"}, {"R.R.R", "R.L.L"}}, "refl");
    case TmKind::ReflInv: return retag_copycat({{"R.L", "L.L.L.L"}, {"R.R", "L.L.L.R"}}, "refl^-1");
    case TmKind::RNat: return std::make_shared<RNatStrategy>(arg(0), arg(1), o);
    case TmKind::REmpty: return std::make_shared<REmptyStrategy>(arg(0));
    }
    throw Error("unknown strategy term");
}

GamePtr ty_game(const TyPtr& a0, const Ctx& ctx, const EvalOptions& o) {
    auto a = normalize(a0);
    switch (a->kind) {
    case TyKind::Const:
        if (a->base == "I") return terminal_game();
        if (a->base == "0") return empty_game();
        if (a->base == "1") return unit_game();
        if (a->base == "N") return nat_game();
        if (a->base == "U") return universe_game(a->level);
        return game_of_entry(entry_of_const(*a));
    case TyKind::El: {
        auto r = compile(a->t, o)->respond(Position{Occ{kRq, std::nullopt}});
        if (r.defined() && has_prefix(r.occ.move, "R")) {
            auto e = Registry::global().find_name(untag(r.occ.move));
            if (!e) throw Error("code " + to_string(a->t) + " answers " + to_string(r.occ.move) + ", not a registered name");
            return game_of_entry(*e);
        }
        // the family n |-> FS(n), summed over its index
        if (mentions(a->t, TmKind::CodeFSN)) return fs_game(std::nullopt);
        throw Error("El(" + to_string(a->t) + ") depends on its context; instantiate the code first");
    }
    case TyKind::Pi: {
        Ctx inner = ctx;
        inner.push_back(a->a);
        return lollipop_game(bang_game(ty_game(a->a, ctx, o), o.threads), ty_game(a->b, inner, o));
    }
    case TyKind::Sigma: {
        Ctx inner = ctx;
        inner.push_back(a->a);
        return product_game(ty_game(a->a, ctx, o), ty_game(a->b, inner, o));
    }
    case TyKind::Id: {
        auto g = ty_game(a->a, ctx, o);
        auto gg = product_game(g, g);
        return lollipop_game(bang_game(gg, o.threads), gg);
    }
    case TyKind::Subst: break;
    }
    throw Error("substitution survived normalization in " + to_string(a));
}

GamePtr ctx_game(const Ctx& ctx, const EvalOptions& o) {
    GamePtr g = terminal_game();
    Ctx prefix;
    for (const auto& a : ctx) {
        g = product_game(g, ty_game(a, prefix, o));
        prefix.push_back(a);
    }
    return g;
}

GamePtr term_game(const Ctx& ctx, const TyPtr& a, const EvalOptions& o) {
    return lollipop_game(bang_game(ctx_game(ctx, o), o.threads), ty_game(a, ctx, o));
}

GamePtr morphism_game(const Ctx& from, const Ctx& to, const EvalOptions& o) {
    return lollipop_game(bang_game(ctx_game(from, o), o.threads), ctx_game(to, o));
}

RegistryEntry realize(const TyPtr& a0, const EvalOptions& o) {
    auto a = normalize(a0);
    if (a->kind == TyKind::Const) return entry_of_const(*a);
    return Registry::global().add({{"ty", to_json(a)}}, to_string(a), ty_game(a, {}, o));
}

RegistryEntry eval_dependent(const TyPtr& b, const TmPtr& sigma, const EvalOptions& o) {
    return realize(ty_subst(b, tm_bar(sigma)), o);
}

Response run_closed(const TmPtr& t, const EvalOptions& o) {
    return compile(t, o)->respond(Position{Occ{kRq, std::nullopt}});
}

// ---------------------------------------------------------------- identity games

StrategyPtr flip_strategy() {
    static StrategyPtr f = retag_copycat({{"R.L", "L.R"}, {"R.R", "L.L"}}, "flip");
    return f;
}

namespace {

bool in_tree(const StrategyTable& t, const Position& p) {
    if (t.plays.count(p)) return true;
    if (p.size() % 2 == 0) return false;
    Position prefix(p.begin(), p.end() - 1);
    return t.plays.count(prefix) && t.game->positions().count(p);
}

bool crosswise(const Position& s) {
    return restrict_tag(s, "R.L") == restrict_tag(s, "L.R") && restrict_tag(s, "R.R") == restrict_tag(s, "L.L");
}

}  // namespace

FiniteGamePtr id_hat(const FiniteGame& g, const StrategyTable& sigma, const StrategyTable& tau) {
    std::size_t longest = 0;
    for (const auto& p : g.positions()) longest = std::max(longest, p.size());
    auto gp = make_finite(g.finite_arena(), g.positions());
    auto gg = product_game(gp, gp);
    auto full = materialize(*lollipop_game(bang_game(gg, 1), gg), 32, 2 * longest);
    PositionSet keep;
    for (const auto& s : full->positions()) {
        if (!in_tree(sigma, restrict_tag(s, "L.L")) || !in_tree(tau, restrict_tag(s, "L.R")) ||
            !in_tree(sigma, restrict_tag(s, "R.L")) || !in_tree(tau, restrict_tag(s, "R.R")))
            continue;
        Position even(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() - s.size() % 2));
        bool ok = true;
        for (std::size_t k = 0; k <= even.size() && ok; k += 2)
            ok = crosswise(Position(even.begin(), even.begin() + static_cast<std::ptrdiff_t>(k)));
        if (ok) keep.insert(s);
    }
    return make_finite(full->finite_arena(), std::move(keep));
}

bool has_total_strategy(FiniteGamePtr g) {
    auto all = strategies_on(std::move(g));
    return std::any_of(all.begin(), all.end(), [](const StrategyTable& t) { return is_total(t); });
}

}  // namespace ludic
