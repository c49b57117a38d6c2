#include "ludic/syntax.hpp"

namespace ludic {

unsigned binders_of(ExprKind k, std::size_t i) {
    switch (k) {
    case ExprKind::Pi:
    case ExprKind::Sigma:
    case ExprKind::Lam: return i == 1 ? 1 : 0;
    case ExprKind::R1:
    case ExprKind::R0: return i == 0 ? 1 : 0;
    case ExprKind::RN: return i == 0 ? 1 : i == 2 ? 2 : 0;
    case ExprKind::RS: return i == 0 ? 1 : i == 1 ? 2 : 0;
    case ExprKind::RId: return i == 0 ? 3 : i == 1 ? 1 : 0;
    default: return 0;
    }
}

namespace {

ExprPtr with_kids(const ExprPtr& e, std::vector<ExprPtr> kids) {
    auto c = std::make_shared<Expr>(*e);
    c->kids = std::move(kids);
    return c;
}

template <class F>
ExprPtr map_vars(const ExprPtr& e, unsigned depth, const F& f) {
    if (e->kind == ExprKind::Var) return f(e, depth);
    if (e->kids.empty()) return e;
    std::vector<ExprPtr> kids;
    for (std::size_t i = 0; i < e->kids.size(); ++i) kids.push_back(map_vars(e->kids[i], depth + binders_of(e->kind, i), f));
    return with_kids(e, std::move(kids));
}

bool mentions_at(const ExprPtr& e, unsigned i, unsigned depth) {
    if (e->kind == ExprKind::Var) return e->index == i + depth;
    for (std::size_t k = 0; k < e->kids.size(); ++k)
        if (mentions_at(e->kids[k], i, depth + binders_of(e->kind, k))) return true;
    return false;
}

}  // namespace

bool mentions_var(const ExprPtr& e, unsigned i) { return mentions_at(e, i, 0); }

ExprPtr shift(const ExprPtr& e, int by, unsigned cutoff) {
    if (by == 0) return e;
    return map_vars(e, cutoff, [by](const ExprPtr& v, unsigned c) -> ExprPtr {
        if (v->index < c) return v;
        auto n = std::make_shared<Expr>(*v);
        n->index = static_cast<unsigned>(static_cast<int>(v->index) + by);
        return n;
    });
}

ExprPtr subst_many(const ExprPtr& body, const std::vector<ExprPtr>& vals) {
    const unsigned k = static_cast<unsigned>(vals.size());
    return map_vars(body, 0, [&](const ExprPtr& v, unsigned depth) -> ExprPtr {
        if (v->index < depth) return v;
        unsigned j = v->index - depth;
        if (j < k) return shift(vals[k - 1 - j], static_cast<int>(depth));
        auto n = std::make_shared<Expr>(*v);
        n->index = v->index - k;
        return n;
    });
}

ExprPtr subst_top(const ExprPtr& body, const ExprPtr& v) { return subst_many(body, {v}); }

bool alpha_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->index != b->index || a->level != b->level || a->kids.size() != b->kids.size()) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!alpha_equal(a->kids[i], b->kids[i])) return false;
    return true;
}

ExprPtr nf(const ExprPtr& e) {
    auto kid = [&](std::size_t i) { return nf(e->kids[i]); };
    auto all = [&] {
        std::vector<ExprPtr> kids;
        for (std::size_t i = 0; i < e->kids.size(); ++i) kids.push_back(kid(i));
        return with_kids(e, std::move(kids));
    };
    switch (e->kind) {
    case ExprKind::En: return e;  // no congruence under En
    case ExprKind::App: {
        auto f = kid(0);
        auto a = kid(1);
        if (f->kind == ExprKind::Lam) return nf(subst_top(f->kids[1], a));
        return with_kids(e, {f, a});
    }
    case ExprKind::Lam: {
        auto a = kid(0);
        auto b = kid(1);
        if (b->kind == ExprKind::App && b->kids[1]->kind == ExprKind::Var && b->kids[1]->index == 0 &&
            !mentions_var(b->kids[0], 0))
            return shift(b->kids[0], -1);
        return with_kids(e, {a, b});
    }
    case ExprKind::RN: {
        auto n = kid(3);
        if (n->kind == ExprKind::Zero) return kid(1);
        if (n->kind == ExprKind::Succ) {
            auto m = n->kids[0];
            auto rec = with_kids(e, {e->kids[0], e->kids[1], e->kids[2], m});
            return nf(subst_many(e->kids[2], {m, rec}));
        }
        return with_kids(e, {kid(0), kid(1), kid(2), n});
    }
    case ExprKind::RS: {
        auto p = kid(2);
        if (p->kind == ExprKind::Pair) return nf(subst_many(e->kids[1], {p->kids[0], p->kids[1]}));
        auto c = kid(1);
        if (c->kind == ExprKind::Pair && c->kids[0]->kind == ExprKind::Var && c->kids[0]->index == 1 &&
            c->kids[1]->kind == ExprKind::Var && c->kids[1]->index == 0)
            return p;
        return with_kids(e, {kid(0), c, p});
    }
    case ExprKind::RId: {
        auto q = kid(4);
        if (q->kind == ExprKind::Refl) return nf(subst_top(e->kids[1], q->kids[0]));
        return with_kids(e, {kid(0), kid(1), kid(2), kid(3), q});
    }
    case ExprKind::R1: return kid(1);
    case ExprKind::El: {
        auto c = kid(0);
        if (c->kind == ExprKind::En) return nf(c->kids[0]);
        return with_kids(e, {c});
    }
    default: return e->kids.empty() ? e : all();
    }
}

// ---------------------------------------------------------------- checking

namespace {

std::vector<std::string> names_of(const Telescope& ctx) {
    std::vector<std::string> out;
    for (const auto& b : ctx) out.push_back(b.name);
    return out;
}

std::string show_in(const Telescope& ctx, const ExprPtr& e) { return pretty(e, names_of(ctx)); }

std::string judge(const Telescope& ctx, const std::string& rhs) {
    return (ctx.empty() ? std::string() : pretty(ctx) + " ") + "|- " + rhs;
}

[[noreturn]] void reject(const ExprPtr& at, const std::string& rule, const std::string& msg) {
    throw SyntaxError({at->loc, rule, msg});
}

Telescope extend(Telescope ctx, std::string name, ExprPtr type) {
    ctx.push_back({std::move(name), std::move(type)});
    return ctx;
}

std::string name_at(const ExprPtr& e, std::size_t i, const char* fallback) {
    return i < e->names.size() && e->names[i] != "_" ? e->names[i] : fallback;
}

bool is_type_former(ExprKind k) {
    switch (k) {
    case ExprKind::Unit:
    case ExprKind::Empty:
    case ExprKind::Nat:
    case ExprKind::Univ:
    case ExprKind::Pi:
    case ExprKind::Sigma:
    case ExprKind::Id:
    case ExprKind::El: return true;
    default: return false;
    }
}

Derivation check_as(const Telescope& ctx, const ExprPtr& t, const ExprPtr& type, const char* rule);

Derivation node(std::string rule, std::string judgement, std::vector<Derivation> premises = {}, unsigned rank = 0) {
    return Derivation{std::move(rule), std::move(judgement), rank, std::move(premises)};
}

}  // namespace

Derivation check_ctx(const Telescope& ctx) {
    Derivation d = node("ctx-Emp", "|- () ctx");
    Telescope prefix;
    for (const auto& b : ctx) {
        auto t = check_type(prefix, b.type);
        prefix.push_back(b);
        d = node("ctx-Ext", "|- " + pretty(prefix) + " ctx", {d, t.deriv});
    }
    return d;
}

TypeResult check_type(const Telescope& ctx, const ExprPtr& a) {
    auto done = [&](std::string rule, unsigned rank, std::vector<Derivation> prem = {}) {
        return TypeResult{rank, node(std::move(rule), judge(ctx, show_in(ctx, a) + " type_" + std::to_string(rank)),
                                     std::move(prem), rank)};
    };
    switch (a->kind) {
    case ExprKind::Unit: return done("1-Form", 1);
    case ExprKind::Empty: return done("0-Form", 1);
    case ExprKind::Nat: return done("N-Form", 1);
    case ExprKind::Univ: return done("U-Form", a->level + 2);
    case ExprKind::Pi:
    case ExprKind::Sigma: {
        auto da = check_type(ctx, a->kids[0]);
        auto db = check_type(extend(ctx, name_at(a, 0, "x"), a->kids[0]), a->kids[1]);
        return done(a->kind == ExprKind::Pi ? "Pi-Form" : "Sigma-Form", std::max(da.rank, db.rank), {da.deriv, db.deriv});
    }
    case ExprKind::Id: {
        auto da = check_type(ctx, a->kids[0]);
        auto dx = check_as(ctx, a->kids[1], a->kids[0], "Id-Form");
        auto dy = check_as(ctx, a->kids[2], a->kids[0], "Id-Form");
        return done("Id-Form", da.rank, {da.deriv, dx, dy});
    }
    case ExprKind::El: {
        auto dc = infer(ctx, a->kids[0]);
        auto t = nf(dc.type);
        if (t->kind != ExprKind::Univ)
            reject(a->kids[0], "U-Elim", "El expects a code in a universe, but " + show_in(ctx, a->kids[0]) + " has type " +
                                             show_in(ctx, dc.type));
        return done("U-Elim", t->level + 1, {dc.deriv});
    }
    default:
        reject(a, "Ty", show_in(ctx, a) + " is a term, not a type" +
                            (a->kind == ExprKind::Var ? "; decode a code with El" : ""));
    }
}

unsigned universe_level(const Telescope& ctx, const ExprPtr& c) {
    auto t = nf(infer(ctx, c).type);
    if (t->kind != ExprKind::Univ) reject(c, "U-Elim", show_in(ctx, c) + " is not a code");
    return t->level;
}

TermResult infer(const Telescope& ctx, const ExprPtr& t) {
    auto done = [&](std::string rule, ExprPtr type, std::vector<Derivation> prem = {}) {
        std::string j = judge(ctx, show_in(ctx, t) + " : " + show_in(ctx, type));
        return TermResult{type, node(std::move(rule), std::move(j), std::move(prem))};
    };
    const auto& k = t->kids;
    switch (t->kind) {
    case ExprKind::Var: {
        if (t->index >= ctx.size()) reject(t, "Var", "variable #" + std::to_string(t->index) + " is out of scope");
        const auto& b = ctx[ctx.size() - 1 - t->index];
        return done("Var", shift(b.type, static_cast<int>(t->index) + 1));
    }
    case ExprKind::Star: return done("1-Intro", mk(ExprKind::Unit));
    case ExprKind::Zero: return done("N-IntroZero", mk(ExprKind::Nat));
    case ExprKind::Succ: {
        auto d = check_as(ctx, k[0], mk(ExprKind::Nat), "N-IntroSucc");
        return done("N-IntroSucc", mk(ExprKind::Nat), {d});
    }
    case ExprKind::FSN: {
        auto d = check_as(ctx, k[0], mk(ExprKind::Nat), "FSN-Intro");
        return done("FSN-Intro", mk_univ(0), {d});
    }
    case ExprKind::En: {
        auto d = check_type(ctx, k[0]);
        return done("U-Intro", mk_univ(d.rank - 1), {d.deriv});
    }
    case ExprKind::Lam: {
        auto da = check_type(ctx, k[0]);
        std::string x = name_at(t, 0, "x");
        auto db = infer(extend(ctx, x, k[0]), k[1]);
        return done("Pi-Intro", mk(ExprKind::Pi, {k[0], db.type}, {x}), {da.deriv, db.deriv});
    }
    case ExprKind::App: {
        auto df = infer(ctx, k[0]);
        auto f = nf(df.type);
        if (f->kind != ExprKind::Pi)
            reject(k[0], "Pi-Elim", show_in(ctx, k[0]) + " has type " + show_in(ctx, df.type) + ", not a function type");
        auto da = check_as(ctx, k[1], f->kids[0], "Pi-Elim");
        return done("Pi-Elim", subst_top(f->kids[1], k[1]), {df.deriv, da});
    }
    case ExprKind::Pair: {
        auto da = infer(ctx, k[0]);
        auto db = infer(ctx, k[1]);
        return done("Sigma-Intro", mk(ExprKind::Sigma, {da.type, shift(db.type, 1)}, {"_"}), {da.deriv, db.deriv});
    }
    case ExprKind::Refl: {
        auto da = infer(ctx, k[0]);
        return done("Id-Intro", mk(ExprKind::Id, {da.type, k[0], k[0]}), {da.deriv});
    }
    case ExprKind::R1: {
        auto dc = check_type(extend(ctx, name_at(t, 0, "z"), mk(ExprKind::Unit)), k[0]);
        auto dt = check_as(ctx, k[2], mk(ExprKind::Unit), "1-Elim");
        auto db = check_as(ctx, k[1], subst_top(k[0], mk(ExprKind::Star)), "1-Elim");
        return done("1-Elim", subst_top(k[0], k[2]), {dc.deriv, db, dt});
    }
    case ExprKind::R0: {
        auto dc = check_type(extend(ctx, name_at(t, 0, "z"), mk(ExprKind::Empty)), k[0]);
        auto dt = check_as(ctx, k[1], mk(ExprKind::Empty), "0-Elim");
        return done("0-Elim", subst_top(k[0], k[1]), {dc.deriv, dt});
    }
    case ExprKind::RN: {
        auto nat = mk(ExprKind::Nat);
        auto dc = check_type(extend(ctx, name_at(t, 0, "z"), nat), k[0]);
        auto d0 = check_as(ctx, k[1], subst_top(k[0], mk(ExprKind::Zero)), "N-Elim");
        auto cx = extend(ctx, name_at(t, 1, "x"), nat);
        cx = extend(cx, name_at(t, 2, "y"), subst_top(shift(k[0], 1, 1), mk_var(0)));
        auto ds = check_as(cx, k[2], subst_top(shift(k[0], 2, 1), mk(ExprKind::Succ, {mk_var(1)})), "N-Elim");
        auto dn = check_as(ctx, k[3], nat, "N-Elim");
        return done("N-Elim", subst_top(k[0], k[3]), {dc.deriv, d0, ds, dn});
    }
    case ExprKind::RS: {
        auto dp = infer(ctx, k[2]);
        auto s = nf(dp.type);
        if (s->kind != ExprKind::Sigma)
            reject(k[2], "Sigma-Elim", show_in(ctx, k[2]) + " has type " + show_in(ctx, dp.type) + ", not a Sigma type");
        auto dc = check_type(extend(ctx, name_at(t, 0, "z"), s), k[0]);
        auto cx = extend(extend(ctx, name_at(t, 1, "x"), s->kids[0]), name_at(t, 2, "y"), s->kids[1]);
        auto pair = mk(ExprKind::Pair, {mk_var(1), mk_var(0)});
        auto db = check_as(cx, k[1], subst_top(shift(k[0], 2, 1), pair), "Sigma-Elim");
        return done("Sigma-Elim", subst_top(k[0], k[2]), {dc.deriv, db, dp.deriv});
    }
    case ExprKind::RId: {
        auto da = infer(ctx, k[2]);
        const auto& A = da.type;
        auto db = check_as(ctx, k[3], A, "Id-Elim");
        auto dq = check_as(ctx, k[4], mk(ExprKind::Id, {A, k[2], k[3]}), "Id-Elim");
        auto cx = extend(ctx, name_at(t, 0, "x"), A);
        cx = extend(cx, name_at(t, 1, "y"), shift(A, 1));
        cx = extend(cx, name_at(t, 2, "p"), mk(ExprKind::Id, {shift(A, 2), mk_var(1), mk_var(0)}));
        auto dc = check_type(cx, k[0]);
        auto x = mk_var(0);
        auto dd = check_as(extend(ctx, name_at(t, 3, "x"), A), k[1],
                        subst_many(shift(k[0], 1, 3), {x, x, mk(ExprKind::Refl, {x})}), "Id-Elim");
        return done("Id-Elim", subst_many(k[0], {k[2], k[3], k[4]}), {dc.deriv, dd, da.deriv, db, dq});
    }
    default:
        if (is_type_former(t->kind))
            reject(t, "U-Intro", show_in(ctx, t) + " is a type; use En to obtain its code");
        reject(t, "Ty", "cannot infer a type for " + show_in(ctx, t));
    }
}

Derivation check(const Telescope& ctx, const ExprPtr& t, const ExprPtr& type) { return check_as(ctx, t, type, "Ty-Conv"); }

namespace {

Derivation check_as(const Telescope& ctx, const ExprPtr& t, const ExprPtr& type, const char* rule) {
    auto want = nf(type);
    if (t->kind == ExprKind::Pair && want->kind == ExprKind::Sigma) {
        auto da = check(ctx, t->kids[0], want->kids[0]);
        auto db = check(ctx, t->kids[1], subst_top(want->kids[1], t->kids[0]));
        return node("Sigma-Intro", judge(ctx, show_in(ctx, t) + " : " + show_in(ctx, type)), {da, db});
    }
    auto got = infer(ctx, t);
    auto have = nf(got.type);
    if (alpha_equal(have, want)) return got.deriv;
    if (have->kind == ExprKind::Univ && want->kind == ExprKind::Univ && have->level <= want->level)
        return node("U-Cumul", judge(ctx, show_in(ctx, t) + " : " + show_in(ctx, type)), {got.deriv});
    reject(t, rule, show_in(ctx, t) + " has type " + show_in(ctx, got.type) + " but " + show_in(ctx, type) + " was expected");
}

}  // namespace

bool judgmental_equal(const Telescope& ctx, const ExprPtr& a, const ExprPtr& b) {
    if (!is_type_former(a->kind)) {
        try {
            if (nf(infer(ctx, a).type)->kind == ExprKind::Unit) return true;
        } catch (const SyntaxError&) {
        }
    }
    return alpha_equal(nf(a), nf(b));
}

nlohmann::json to_json(const Derivation& d) {
    nlohmann::json j{{"rule", d.rule}, {"judgement", d.judgement}};
    if (d.rank) j["rank"] = d.rank;
    if (!d.premises.empty()) {
        j["premises"] = nlohmann::json::array();
        for (const auto& p : d.premises) j["premises"].push_back(to_json(p));
    }
    return j;
}

ContextualTerm contextual_term(const std::vector<ExprPtr>& ds, const Telescope& delta) {
    if (ds.size() != delta.size())
        throw Error("telescope mismatch: " + std::to_string(ds.size()) + " terms for " + std::to_string(delta.size()) +
                    " entries");
    ExprPtr type = mk(ExprKind::Unit);
    ExprPtr term = mk(ExprKind::Star);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (unsigned v = 0; v < i; ++v)
            if (mentions_var(delta[i].type, v))
                throw Error("telescope mismatch: the type of " + delta[i].name + " depends on earlier entries");
        try {
            check({}, ds[i], delta[i].type);
        } catch (const SyntaxError& e) {
            throw Error("telescope mismatch: " + delta[i].name + ": " + e.diagnostic().message);
        }
        type = mk(ExprKind::Sigma, {type, shift(delta[i].type, 1)}, {"_"});
        term = mk(ExprKind::Pair, {term, ds[i]});
    }
    return {type, term};
}

}  // namespace ludic
