#include "ludic/laws.hpp"

#include <sstream>

namespace ludic {

namespace {

TyPtr nat() { return ty_const("N"); }
TyPtr one() { return ty_const("1"); }
TyPtr zero() { return ty_const("0"); }

TmPtr num(std::uint64_t n) { return tm_numeral(n); }
// <top, tau> : Delta => (x : N)
TmPtr point(TmPtr tau) { return tm_ext(tm_top(), std::move(tau)); }
// R^N(0, succ (succ y)) : Gamma.N |- N
TmPtr doubler() { return tm_rnat(num(0), tm_succ(tm_succ(tm_v()))); }

ExploreOptions explore_of(const LawOptions& o, std::size_t depth) {
    ExploreOptions e;
    e.alphabet = o.alphabet;
    e.depth = depth;
    e.max_positions = o.max_positions;
    return e;
}

LawCheck syntactic(std::string suite, std::string law, std::string instance, bool ok, std::string detail = {}) {
    return {std::move(suite), std::move(law), std::move(instance), "normal form", ok, std::move(detail)};
}

LawCheck ty_law(const std::string& suite, const std::string& law, const TyPtr& lhs, const TyPtr& rhs) {
    auto l = normalize(lhs);
    auto r = normalize(rhs);
    bool ok = same(l, r);
    return syntactic(suite, law, to_string(lhs) + " = " + to_string(rhs), ok,
                     ok ? to_string(l) : to_string(l) + " vs " + to_string(r));
}

struct Corpus {
    const LawOptions& o;
    std::string suite;
    std::vector<LawCheck> out;

    void term(const std::string& law, const TmPtr& lhs, const TmPtr& rhs, const Ctx& ctx, const TyPtr& ty,
              std::size_t depth = 0) {
        auto inst = to_string(lhs) + " = " + to_string(rhs);
        try {
            auto g = term_game(ctx, ty, o.eval);
            auto d = depth ? depth : o.depth;
            LawOptions local = o;
            local.depth = d;
            out.push_back(compare_behaviour(suite, law, inst, compile(lhs, o.eval), compile(rhs, o.eval), *g, local));
        } catch (const Error& e) {
            out.push_back({suite, law, inst, "behaviour", false, e.what()});
        }
    }

    void morphism(const std::string& law, const TmPtr& lhs, const TmPtr& rhs, const Ctx& from, const Ctx& to) {
        auto inst = to_string(lhs) + " = " + to_string(rhs);
        try {
            auto g = morphism_game(from, to, o.eval);
            out.push_back(compare_behaviour(suite, law, inst, compile(lhs, o.eval), compile(rhs, o.eval), *g, o));
        } catch (const Error& e) {
            out.push_back({suite, law, inst, "behaviour", false, e.what()});
        }
    }

    void type(const std::string& law, const TyPtr& lhs, const TyPtr& rhs) { out.push_back(ty_law(suite, law, lhs, rhs)); }

    void tm_syntax(const std::string& law, const TmPtr& lhs, const TmPtr& rhs) {
        auto l = normalize(lhs);
        auto r = normalize(rhs);
        bool ok = same(l, r);
        out.push_back(syntactic(suite, law, to_string(lhs) + " = " + to_string(rhs), ok,
                                ok ? to_string(l) : to_string(l) + " vs " + to_string(r)));
    }
};

}  // namespace

LawCheck compare_behaviour(std::string suite, std::string law, std::string instance, const StrategyPtr& a,
                           const StrategyPtr& b, const Game& g, const LawOptions& o) {
    auto r = equiv_at_depth(*a, *b, g, explore_of(o, o.depth));
    LawCheck c{std::move(suite), std::move(law), std::move(instance), "behaviour@" + std::to_string(o.depth),
               r.equal && !r.exhausted, r.detail};
    if (c.ok) c.detail = std::to_string(r.explored) + " odd positions agree";
    return c;
}

// ---------------------------------------------------------------- CwF equations

std::vector<LawCheck> cwf_laws(const LawOptions& o) {
    Corpus c{o, "cwf", {}};
    const Ctx empty{}, n1{nat()}, n2{nat(), nat()}, un{one(), nat()}, nu{nat(), one()};
    auto fsn = ty_el(tm_code_fsn());

    // types, by normal form
    for (auto& a : {nat(), ty_pi(nat(), nat()), fsn, ty_id(nat(), tm_var(1), tm_v()), ty_sigma(nat(), fsn)})
        c.type("Ty-Id", ty_subst(a, tm_id()), a);

    struct TyComp {
        TyPtr a;
        TmPtr phi, psi;
    };
    std::vector<TyComp> tycomp{
        {fsn, point(num(2)), tm_top()},
        {fsn, point(tm_succ_v()), point(num(4))},
        {ty_pi(nat(), fsn), tm_p(), tm_bar(num(3))},
        {ty_id(nat(), tm_v(), tm_succ_v()), point(tm_v()), tm_ext(tm_top(), num(1))},
        {ty_sigma(fsn, nat()), tm_ext(tm_top(), tm_var(1)), tm_ext(point(num(5)), num(6))},
    };
    for (auto& t : tycomp) c.type("Ty-Comp", ty_subst(ty_subst(t.a, t.phi), t.psi), ty_subst(t.a, tm_comp(t.phi, t.psi)));

    // terms, behaviourally
    struct Open {
        TmPtr a;
        Ctx ctx;
        TyPtr ty;
    };
    std::vector<Open> terms{
        {tm_v(), n1, nat()},
        {tm_succ_v(), n1, nat()},
        {tm_var(1), n2, nat()},
        {num(3), empty, nat()},
        {tm_succ(tm_v()), un, nat()},
        {doubler(), n1, nat()},
        {tm_lambda(tm_succ_v()), empty, ty_pi(nat(), nat())},
    };
    for (auto& t : terms) c.term("Tm-Id", tm_comp(t.a, tm_id()), t.a, t.ctx, t.ty);

    struct TmComp {
        TmPtr a, phi, psi;
        Ctx ctx;
    };
    std::vector<TmComp> tmcomp{
        {tm_succ_v(), tm_p(), tm_bar(tm_succ_v()), n1},
        {tm_v(), point(tm_succ_v()), point(num(2)), empty},
        {tm_var(1), tm_ext(tm_p(), tm_succ_v()), point(tm_v()), n1},
        {doubler(), point(tm_succ(tm_v())), tm_ext(tm_top(), num(1)), empty},
        {tm_succ(tm_var(1)), tm_ext(point(tm_v()), tm_v()), tm_bar(num(2)), n1},
    };
    for (auto& t : tmcomp)
        c.term("Tm-Comp", tm_comp(tm_comp(t.a, t.phi), t.psi), tm_comp(t.a, tm_comp(t.phi, t.psi)), t.ctx, nat());

    // extensions <phi, tau> : Delta => Gamma.A
    struct Cons {
        TmPtr phi, tau;
        Ctx delta, gamma;
    };
    std::vector<Cons> cons{
        {tm_id(), tm_succ_v(), n1, n1},
        {tm_top(), num(4), n1, empty},
        {tm_p(), tm_v(), n2, n1},
        {point(tm_v()), tm_succ(tm_v()), n1, n1},
        {tm_ext(tm_top(), tm_var(1)), doubler(), n2, n1},
    };
    for (auto& k : cons) c.morphism("Cons-L", tm_comp(tm_p(), tm_ext(k.phi, k.tau)), k.phi, k.delta, k.gamma);
    for (auto& k : cons) c.term("Cons-R", tm_comp(tm_v(), tm_ext(k.phi, k.tau)), k.tau, k.delta, nat());

    std::vector<TmPtr> pre{tm_bar(num(2)), tm_p(), point(num(1)), tm_ext(tm_p(), tm_succ_v()), tm_bar(tm_v())};
    std::vector<Ctx> pre_from{n1, n2, empty, n2, n1};
    std::vector<Cons> nat_cases{
        {tm_top(), tm_v(), n2, empty},
        {tm_top(), tm_succ(tm_v()), n1, empty},
        {tm_id(), num(6), n1, n1},
        {tm_ext(tm_top(), tm_v()), tm_var(1), n2, n1},
        {tm_p(), tm_succ_v(), n2, n1},
    };
    for (std::size_t i = 0; i < nat_cases.size(); ++i) {
        auto& k = nat_cases[i];
        auto psi = pre[i];
        auto to = k.gamma;
        to.push_back(nat());
        c.morphism("Cons-Nat", tm_comp(tm_ext(k.phi, k.tau), psi), tm_ext(tm_comp(k.phi, psi), tm_comp(k.tau, psi)),
                   pre_from[i], to);
    }

    for (auto& g : std::vector<Ctx>{n1, n2, un, nu, {nat(), fsn}}) c.morphism("Cons-Id", tm_ext(tm_p(), tm_v()), tm_id(), g, g);
    return c.out;
}

// ---------------------------------------------------------------- type formers

std::vector<LawCheck> type_former_laws(const LawOptions& o) {
    Corpus c{o, "types", {}};
    const Ctx empty{}, n1{nat()}, n2{nat(), nat()};
    auto nn = ty_pi(nat(), nat());
    auto fsn = ty_el(tm_code_fsn());

    // Pi
    struct Beta {
        TmPtr b, tau;
        Ctx ctx;
    };
    for (auto& k : std::vector<Beta>{{tm_succ_v(), num(3), empty},
                                     {tm_var(1), num(5), n1},
                                     {doubler(), num(4), empty},
                                     {doubler(), tm_v(), n1}})
        c.term("Pi-Comp", tm_app(tm_lambda(k.b), k.tau), tm_comp(k.b, tm_bar(k.tau)), k.ctx, nat());

    for (auto& mu : {tm_lambda(tm_succ_v()), tm_lambda(doubler()), tm_lambda(tm_var(1))}) {
        c.tm_syntax("lambda-Uniq", tm_lambda(tm_lambda_inv(mu)), mu);
        c.term("lambda-Uniq", tm_lambda(tm_lambda_inv(mu)), mu, n1, nn);
    }
    for (auto& [a, b, phi] : std::vector<std::tuple<TyPtr, TyPtr, TmPtr>>{
             {nat(), fsn, tm_p()}, {fsn, nat(), point(num(2))}, {nat(), ty_id(nat(), tm_var(1), tm_v()), tm_bar(num(1))}})
        c.type("Pi-Subst", ty_subst(ty_pi(a, b), phi), ty_pi(ty_subst(a, phi), ty_subst(b, tm_lift(phi))));

    struct Sub {
        TmPtr a, phi;
        Ctx delta;
    };
    for (auto& k : std::vector<Sub>{{tm_var(1), point(tm_succ_v()), n1},
                                    {tm_succ(tm_var(1)), point(num(2)), empty},
                                    {doubler(), point(tm_v()), n1},
                                    {tm_succ_v(), tm_p(), n2}})
        c.term("lambda-Subst", tm_comp(tm_lambda(k.a), k.phi), tm_lambda(tm_comp(k.a, tm_lift(k.phi))), k.delta, nn);

    struct AppSub {
        TmPtr kappa, tau, phi;
        Ctx delta;
    };
    for (auto& k : std::vector<AppSub>{{tm_lambda(tm_succ_v()), tm_v(), point(num(3)), empty},
                                       {tm_lambda(tm_var(1)), tm_succ_v(), point(tm_succ_v()), n1},
                                       {tm_lambda(doubler()), tm_v(), tm_p(), n2}})
        c.term("App-Subst", tm_comp(tm_app(k.kappa, k.tau), k.phi),
               tm_app(tm_comp(k.kappa, k.phi), tm_comp(k.tau, k.phi)), k.delta, nat());

    // Sigma over Gamma = (x : N), A = N, B = N
    const Ctx nab{nat(), nat(), nat()};
    const Ctx nsig{nat(), ty_sigma(nat(), nat())};
    for (auto& psi : {tm_v(), tm_var(1), tm_succ(tm_var(2))})
        c.term("Sigma-Comp", tm_comp(tm_r_sigma(psi), tm_pair_mor()), psi, nab, nat());
    for (auto& rho : {tm_proj1(), tm_proj2(), tm_succ(tm_proj2()), tm_var(1)})
        c.term("R^Sigma-Uniq", tm_r_sigma(tm_comp(rho, tm_pair_mor())), rho, nsig, nat());
    for (auto& [a, b, phi] : std::vector<std::tuple<TyPtr, TyPtr, TmPtr>>{
             {nat(), nat(), tm_p()}, {nat(), fsn, point(num(2))}, {fsn, ty_id(nat(), tm_var(1), tm_v()), tm_bar(num(3))}})
        c.type("Sigma-Subst", ty_subst(ty_sigma(a, b), phi), ty_sigma(ty_subst(a, phi), ty_subst(b, tm_lift(phi))));
    for (auto& [x, y, phi, delta] : std::vector<std::tuple<TmPtr, TmPtr, TmPtr, Ctx>>{
             {tm_v(), num(1), point(num(4)), empty},
             {tm_succ_v(), tm_v(), point(tm_succ_v()), n1},
             {tm_var(1), doubler(), tm_ext(point(tm_v()), num(2)), n1}}) {
        auto sigma = ty_sigma(nat(), nat());
        c.term("Pair-Subst", tm_comp(tm_pair(x, y), phi), tm_pair(tm_comp(x, phi), tm_comp(y, phi)), delta, sigma);
    }
    for (auto& psi : {tm_var(2), tm_v(), tm_succ(tm_var(1))}) {
        auto phi = point(num(7));
        c.term("R^Sigma-Subst", tm_comp(tm_r_sigma(psi), tm_lift(phi)), tm_r_sigma(tm_comp(psi, tm_lift(tm_lift(phi)))),
               {ty_sigma(nat(), nat())}, nat());
    }

    // Id over Gamma = (x : N)
    for (auto& tau : {tm_v(), tm_succ_v(), num(4), doubler()})
        c.term("Id-Comp", tm_comp(tm_r_id(tau), tm_refl_mor()), tau, n1, nat());
    for (auto& [a, x, y, phi] : std::vector<std::tuple<TyPtr, TmPtr, TmPtr, TmPtr>>{
             {nat(), tm_v(), tm_succ_v(), point(num(2))},
             {fsn, tm_var(1), tm_v(), tm_bar(num(1))},
             {nat(), num(0), tm_v(), tm_p()}})
        c.type("Id-Subst", ty_subst(ty_id(a, x, y), phi), ty_id(ty_subst(a, phi), tm_comp(x, phi), tm_comp(y, phi)));
    for (auto& [phi, delta] : std::vector<std::pair<TmPtr, Ctx>>{{point(num(2)), empty}, {point(tm_succ_v()), n1}, {tm_p(), n2}}) {
        Ctx ctx = delta;
        ctx.push_back(nat());
        c.term("Refl-Subst", tm_comp(tm_refl(), tm_lift(phi)), tm_refl(), ctx, ty_id(nat(), tm_v(), tm_v()), 6);
    }
    for (auto& tau : {tm_v(), tm_var(1), tm_succ_v()}) {
        auto phi = point(num(3));
        Ctx idctx{nat(), nat(), ty_id(nat(), tm_var(1), tm_v())};
        c.term("R^Id-Subst", tm_comp(tm_r_id(tau), tm_lift(tm_lift(tm_lift(phi)))),
               tm_r_id(tm_comp(tau, tm_lift(phi))), idctx, nat(), 6);
    }

    // N
    struct Rec {
        TmPtr cz, cs;
        Ctx ctx;
    };
    std::vector<Rec> recs{
        {num(0), tm_succ(tm_succ(tm_v())), empty},
        {tm_v(), tm_succ(tm_v()), n1},
        {num(5), tm_var(1), empty},
        {tm_succ_v(), tm_succ(tm_var(1)), n1},
    };
    for (auto& r : recs) c.term("N-CompZero", tm_comp(tm_rnat(r.cz, r.cs), tm_bar(num(0))), r.cz, r.ctx, nat());
    for (auto& r : recs)
        for (auto& n : {num(0), num(2), r.ctx.empty() ? num(3) : tm_v()}) {
            auto rn = tm_rnat(r.cz, r.cs);
            c.term("N-CompSucc", tm_comp(rn, tm_bar(tm_succ(n))),
                   tm_comp(r.cs, tm_ext(tm_bar(n), tm_comp(rn, tm_bar(n)))), r.ctx, nat());
        }
    for (auto& phi : {tm_p(), point(num(1)), tm_bar(tm_v())}) c.type("N-Subst", ty_subst(nat(), phi), nat());
    for (auto& r : std::vector<Rec>{{tm_v(), tm_succ(tm_v()), n1}, {tm_succ_v(), tm_var(2), n1}, {num(1), tm_var(1), n1}}) {
        auto phi = point(num(2));
        c.term("R^N-Subst", tm_comp(tm_rnat(r.cz, r.cs), tm_lift(phi)),
               tm_rnat(tm_comp(r.cz, phi), tm_comp(r.cs, tm_lift(tm_lift(phi)))), n1, nat());
    }

    // unit and empty
    for (auto& tau : {tm_v(), tm_succ_v(), num(9)}) c.tm_syntax("R^1-Strict", tm_r_unit(tau), tau);
    for (auto& g : std::vector<Ctx>{empty, n1, {one(), nat()}}) {
        auto games = strategies_on(materialize(*morphism_game(g, {}, o.eval), o.alphabet, o.depth));
        c.out.push_back({"types", "Top-Uniq", "strategies on " + std::to_string(g.size()) + "-variable context => I",
                         "brute force", games.size() == 1, std::to_string(games.size()) + " strategies"});
    }
    for (auto& [tau, phi, delta] : std::vector<std::tuple<TmPtr, TmPtr, Ctx>>{
             {tm_v(), point(tm_v()), {nat(), zero()}},
             {tm_v(), point(tm_var(1)), {zero(), nat()}},
             {tm_var(1), tm_ext(point(tm_v()), tm_succ(tm_var(1))), {zero(), nat()}}}) {
        c.term("R^0-Subst", tm_comp(tm_rempty(tau), phi), tm_rempty(tm_comp(tau, phi)), delta, nat());
    }
    return c.out;
}

// ---------------------------------------------------------------- intensionality

namespace {

StrategyTable table_on(const StrategyPtr& s, FiniteGamePtr g) { return table_of(*s, std::move(g)); }

LawCheck bool_check(std::string law, std::string instance, std::string method, bool ok, std::string detail) {
    return {"intensional", std::move(law), std::move(instance), std::move(method), ok, std::move(detail)};
}

}  // namespace

std::vector<LawCheck> intensional_laws(const LawOptions& o) {
    std::vector<LawCheck> out;
    auto eo = [&](std::size_t d) { return explore_of(o, d); };

    // Equality reflection fails for open terms: x and succ x differ, yet the identity type
    // between them is inhabited through the empty variable.
    {
        Ctx ctx{nat(), zero()};
        auto x = compile(tm_var(1), o.eval);
        auto sx = compile(tm_succ(tm_var(1)), o.eval);
        auto g = term_game(ctx, nat(), o.eval);
        auto r = equiv_at_depth(*x, *sx, *g, eo(4));
        out.push_back(bool_check("EqRefl", "x, succ x in (x : N, y : 0)", "behaviour@4", !r.equal,
                                 r.equal ? "indistinguishable" : "distinguished " + r.detail));
        auto idty = ty_id(nat(), tm_var(1), tm_succ(tm_var(1)));
        auto proof = compile(tm_rempty(tm_v()), o.eval);
        auto gid = term_game(ctx, idty, o.eval);
        auto total = check_total(*proof, *gid, eo(o.depth));
        auto valid = check_responses_valid(*proof, *gid, eo(o.depth));
        out.push_back(bool_check("EqRefl", "R^0(y) : Id(N, x, succ x)", "total@" + std::to_string(o.depth),
                                 total.ok() && valid.ok(), total.ok() ? valid.witness : total.witness));
    }

    // Function extensionality: the constant and the strict zero agree on numerals but not as strategies.
    {
        auto zero_fn = elaborate_term(parse_expr("fun (x : N) -> 0"));
        auto strict_fn = elaborate_term(parse_expr("fun (x : N) -> R_N(z. N, 0, a b. 0, x)"));
        bool pointwise = true;
        std::string bad;
        for (unsigned n = 0; n <= 16; ++n) {
            auto a = run_closed(tm_app(zero_fn, num(n)), o.eval);
            auto b = run_closed(tm_app(strict_fn, num(n)), o.eval);
            if (!(a == b) || !a.defined() || a.occ.move.ident != "0") {
                pointwise = false;
                bad = "at " + std::to_string(n) + ": " + to_string(a) + " vs " + to_string(b);
                break;
            }
        }
        out.push_back(bool_check("FunExt", "0 and strict 0 applied to 0..16", "evaluation", pointwise,
                                 pointwise ? "both answer 0" : bad));
        auto g = term_game({}, ty_pi(nat(), nat()), o.eval);
        auto r = equiv_at_depth(*compile(zero_fn, o.eval), *compile(strict_fn, o.eval), *g, eo(2));
        bool at_q = !r.equal && r.witness && r.witness->size() == 1;
        out.push_back(bool_check("FunExt", "0 vs strict 0 on N => N", "behaviour@2", at_q,
                                 r.equal ? "indistinguishable" : "witness [" + to_string(*r.witness) + "] " + r.detail));
    }

    // Uniqueness of identity proofs: the crosswise copy-cat inhabits the iterated identity type.
    {
        auto idxy = ty_id(nat(), tm_var(1), tm_v());
        auto idxy2 = ty_id(nat(), tm_var(2), tm_var(1));
        auto idxy3 = ty_id(nat(), tm_var(3), tm_var(2));
        auto uip = ty_pi(nat(), ty_pi(nat(), ty_pi(idxy, ty_pi(idxy2, ty_id(idxy3, tm_var(1), tm_v())))));
        auto proof = compile(tm_lambda(tm_lambda(tm_lambda(tm_lambda(tm_refl())))), o.eval);
        auto g = term_game({}, uip, o.eval);
        auto e = eo(8);
        auto total = check_total(*proof, *g, e);
        auto valid = check_responses_valid(*proof, *g, e);
        auto inn = check_innocent(*proof, *g, e);
        bool ok = total.ok() && valid.ok() && inn.ok();
        out.push_back(bool_check("UIP", "Pi x y p q. Id(Id(N, x, y), p, q)", "total@8", ok,
                                 ok ? std::to_string(total.explored) + " positions"
                                    : total.witness + valid.witness + inn.witness));
    }

    // Streicher I: in (x y : A, z : Id(A, x, y)) the two variables are different strategies.
    for (auto& a : {nat(), one(), ty_el(tm_comp(tm_code_fsn(), tm_bar(num(2))))}) {
        Ctx ctx{a, a, ty_id(a, tm_var(1), tm_v())};
        auto g = term_game(ctx, a, o.eval);
        auto r = equiv_at_depth(*compile(tm_var(2), o.eval), *compile(tm_var(1), o.eval), *g, eo(o.depth));
        out.push_back(bool_check("Streicher-I", "x vs y : " + to_string(a), "behaviour", !r.equal,
                                 r.equal ? "indistinguishable" : r.detail));
    }
    {
        Telescope tel{{"x", mk(ExprKind::Nat)}, {"y", mk(ExprKind::Nat)}, {"z", parse_expr("Id N x y", {"x", "y"})}};
        auto bx = parse_expr("FSN x", {"x", "y", "z"});
        auto by = parse_expr("FSN y", {"x", "y", "z"});
        bool syntactic_ok = !judgmental_equal(tel, bx, by);
        Ctx ctx = elaborate(tel);
        auto g = term_game(ctx, ty_const("U", 0), o.eval);
        auto r = equiv_at_depth(*compile(elaborate_term(bx), o.eval), *compile(elaborate_term(by), o.eval), *g,
                                eo(o.depth));
        out.push_back(bool_check("Streicher-II", "FSN x vs FSN y : U0", "judgemental + behaviour",
                                 syntactic_ok && !r.equal,
                                 std::string(syntactic_ok ? "not convertible; " : "convertible; ") + r.detail));
    }
    {
        std::vector<std::string> closed{"2", "succ (succ zero)", "R_N(z. N, 0, a b. succ (succ b), 1)", "3",
                                        "(fun (x : N) -> succ x) 2", "R_S(z. N, a b. b, (1, 3))"};
        std::vector<std::uint64_t> values;
        std::uint64_t top = 0;
        for (auto& s : closed) {
            auto r = run_closed(elaborate_term(parse_expr(s)), o.eval);
            values.push_back(r.defined() ? std::stoull(r.occ.move.ident) : 0);
            top = std::max(top, values.back());
        }
        auto g = materialize(*nat_game(), static_cast<unsigned>(top + 1), 2);
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = 0; j < closed.size(); ++j) {
                auto proof = has_total_strategy(id_hat(*g, table_on(numeral(values[i]), g), table_on(numeral(values[j]), g)));
                bool conv = alpha_equal(nf(parse_expr(closed[i])), nf(parse_expr(closed[j])));
                if (proof != conv) {
                    ok = false;
                    detail = closed[i] + " / " + closed[j];
                }
            }
        out.push_back(bool_check("Streicher-III", std::to_string(closed.size()) + " closed numerals, pairwise",
                                 "brute force", ok, ok ? "proof exists iff convertible" : detail));
    }

    // Univalence: N and FS(1) are the same game with different names.
    {
        auto idn = elaborate_term(parse_expr("fun (x : N) -> x"));
        auto idfs = elaborate_term(parse_expr("fun (x : El (FSN 1)) -> x"));
        auto gn = term_game({}, ty_pi(nat(), nat()), o.eval);
        auto gfs = term_game({}, normalize(ty_pi(ty_el(tm_comp(tm_code_fsn(), tm_bar(num(1)))),
                                                  ty_el(tm_comp(tm_code_fsn(), tm_bar(num(1)))))),
                             o.eval);
        auto r = equiv_at_depth(*compile(idn, o.eval), *compile(idfs, o.eval), *gn, eo(o.depth));
        auto r2 = equiv_at_depth(*compile(idn, o.eval), *compile(idfs, o.eval), *gfs, eo(o.depth));
        auto mn = materialize(*nat_game(), o.alphabet + 1, 4);
        auto mfs = materialize(*fs_game(1u), o.alphabet + 1, 4);
        bool same_game = mn->positions() == mfs->positions();
        auto n = nat_entry();
        auto f = fs_entry(1);
        out.push_back(bool_check("UA", "copy-cats on N and FS(1)", "behaviour",
                                 r.equal && r2.equal && !r.exhausted && !r2.exhausted && same_game,
                                 std::string(same_game ? "same positions" : "different positions") + "; " +
                                     std::to_string(r.explored + r2.explored) + " odd positions agree"));
        out.push_back(bool_check("UA", "names of N and FS(1)", "registry", n.number != f.number,
                                 std::to_string(n.number) + " vs " + std::to_string(f.number)));
        auto u = materialize(*universe_game(0), o.alphabet, 2);
        bool refuted = !has_total_strategy(id_hat(*u, table_on(code_of(n), u), table_on(code_of(f), u)));
        bool diag = has_total_strategy(id_hat(*u, table_on(code_of(n), u), table_on(code_of(n), u)));
        out.push_back(bool_check("UA", "Id_U(En N, En FS(1))", "brute force", refuted && diag,
                                 refuted ? "no total proof" : "a total proof exists"));
    }
    return out;
}

// ---------------------------------------------------------------- engine laws

namespace {

NatProgramPtr node(NatProgram::Op op, unsigned v, std::vector<NatProgramPtr> kids = {}) {
    auto p = std::make_shared<NatProgram>();
    p->op = op;
    p->value = v;
    p->kids = std::move(kids);
    return p;
}

struct Reader {
    const std::vector<std::uint64_t>& answers;
    std::size_t used = 0;
    bool starved = false;

    std::uint64_t eval(const NatProgram& p) {
        if (starved) return 0;
        switch (p.op) {
        case NatProgram::Op::Const: return p.value;
        case NatProgram::Op::Arg:
            if (used == answers.size()) {
                starved = true;
                return 0;
            }
            return answers[used++];
        case NatProgram::Op::Succ: return eval(*p.kids[0]) + 1;
        case NatProgram::Op::Add: {
            auto a = eval(*p.kids[0]);
            return a + eval(*p.kids[1]);
        }
        case NatProgram::Op::IfZero: {
            auto c = eval(*p.kids[0]);
            if (starved) return 0;
            return c == 0 ? eval(*p.kids[1]) : eval(*p.kids[2]);
        }
        }
        return 0;
    }
};

class ProgramStrategy : public Strategy {
public:
    explicit ProgramStrategy(NatProgramPtr p) : p_(std::move(p)) {}

    Response respond(const Position& s) const override {
        if (s.empty() || s.size() % 2 == 0 || s[0].move.path != "R") return Response::none();
        std::vector<std::uint64_t> answers;
        for (std::size_t i = 1; i < s.size(); ++i) {
            const auto& m = s[i].move;
            if (m.path == "R") return Response::none();  // already answered
            if (m.path == "L" && m.ident != "q") {
                if (!std::all_of(m.ident.begin(), m.ident.end(), ::isdigit)) return Response::none();
                answers.push_back(std::stoull(m.ident));
            }
        }
        Reader r{answers};
        auto v = r.eval(*p_);
        if (r.starved) return Response::move({Move{"q", 0, "L"}, 0});
        return Response::move({Move{std::to_string(v), 0, "R"}, 0});
    }
    std::string describe() const override { return to_string(p_); }

private:
    NatProgramPtr p_;
};

}  // namespace

NatProgramPtr random_program(std::mt19937& rng, unsigned size) {
    using Op = NatProgram::Op;
    auto pick = [&](unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng); };
    if (size <= 1) return pick(2) ? node(Op::Arg, 0) : node(Op::Const, pick(3));
    switch (pick(3)) {
    case 0: return node(Op::Succ, 0, {random_program(rng, size - 1)});
    case 1: {
        auto l = 1 + pick(size - 1);
        return node(Op::Add, 0, {random_program(rng, l), random_program(rng, size - l)});
    }
    default: {
        auto rest = size - 1;
        auto c = 1 + pick(std::max(1u, rest / 2));
        auto t = std::max(1u, (rest - std::min(rest, c)) / 2);
        return node(Op::IfZero, 0, {random_program(rng, c), random_program(rng, t), random_program(rng, t)});
    }
    }
}

std::string to_string(const NatProgramPtr& p) {
    using Op = NatProgram::Op;
    switch (p->op) {
    case Op::Const: return std::to_string(p->value);
    case Op::Arg: return "x";
    case Op::Succ: return "succ(" + to_string(p->kids[0]) + ")";
    case Op::Add: return "(" + to_string(p->kids[0]) + " + " + to_string(p->kids[1]) + ")";
    case Op::IfZero:
        return "ifz(" + to_string(p->kids[0]) + ", " + to_string(p->kids[1]) + ", " + to_string(p->kids[2]) + ")";
    }
    return "?";
}

std::uint64_t run_program(const NatProgramPtr& p, std::uint64_t arg) {
    using Op = NatProgram::Op;
    switch (p->op) {
    case Op::Const: return p->value;
    case Op::Arg: return arg;
    case Op::Succ: return run_program(p->kids[0], arg) + 1;
    case Op::Add: return run_program(p->kids[0], arg) + run_program(p->kids[1], arg);
    case Op::IfZero:
        return run_program(p->kids[0], arg) == 0 ? run_program(p->kids[1], arg) : run_program(p->kids[2], arg);
    }
    return 0;
}

unsigned max_reads(const NatProgramPtr& p) {
    using Op = NatProgram::Op;
    switch (p->op) {
    case Op::Const: return 0;
    case Op::Arg: return 1;
    case Op::Succ: return max_reads(p->kids[0]);
    case Op::Add: return max_reads(p->kids[0]) + max_reads(p->kids[1]);
    case Op::IfZero: return max_reads(p->kids[0]) + std::max(max_reads(p->kids[1]), max_reads(p->kids[2]));
    }
    return 0;
}

StrategyPtr program_strategy(NatProgramPtr p) { return std::make_shared<ProgramStrategy>(std::move(p)); }

std::vector<LawCheck> engine_laws(const LawOptions& o) {
    std::vector<LawCheck> out;
    std::mt19937 rng(o.seed);
    auto game = lollipop_game(bang_game(nat_game(), 0), nat_game());
    auto e = explore_of(o, o.depth);
    auto then = [&](const StrategyPtr& s, const StrategyPtr& t) { return compose(promotion(s), t, o.eval.steps); };

    // Triples whose composites answer within the depth bound: a composite play reads its
    // argument at most reads(s) * reads(t) times and needs two moves per read.
    auto budget = o.depth < 4 ? 0u : static_cast<unsigned>((o.depth - 3) / 2);
    auto draw = [&] { return random_program(rng, 1 + std::uniform_int_distribution<unsigned>(0, 5)(rng)); };
    auto fits = [&](const NatProgramPtr& a, const NatProgramPtr& b) { return max_reads(a) * max_reads(b) <= budget; };

    unsigned assoc = 0, ident = 0, preserved = 0;
    std::string assoc_bad, ident_bad, pres_bad;
    for (unsigned i = 0; i < o.samples; ++i) {
        NatProgramPtr ps = draw(), pt, pu;
        do pt = draw(); while (!fits(ps, pt));
        do pu = draw(); while (!fits(ps, pu) || !fits(pt, pu) || max_reads(ps) * max_reads(pt) * max_reads(pu) > budget);
        auto s = program_strategy(ps);
        auto t = program_strategy(pt);
        auto u = program_strategy(pu);
        auto inst = s->describe() + " ; " + t->describe() + " ; " + u->describe();

        auto r = equiv_at_depth(*then(then(s, t), u), *then(s, then(t, u)), *game, e);
        if (r.equal && !r.exhausted) ++assoc;
        else if (assoc_bad.empty()) assoc_bad = inst + ": " + r.detail;

        auto d = dereliction();
        auto r1 = equiv_at_depth(*then(d, s), *s, *game, e);
        auto r2 = equiv_at_depth(*then(s, d), *s, *game, e);
        if (r1.equal && r2.equal && !r1.exhausted && !r2.exhausted) ++ident;
        else if (ident_bad.empty()) ident_bad = s->describe() + ": " + r1.detail + " " + r2.detail;

        auto st = then(s, t);
        auto c1 = check_innocent(*st, *game, e);
        auto c2 = check_well_bracketed(*st, *game, e);
        auto c3 = check_total(*st, *game, e);
        auto c4 = check_noetherian(*st, *game, e);
        if (c1.ok() && c2.ok() && c3.ok() && c4.ok()) ++preserved;
        else if (pres_bad.empty()) pres_bad = s->describe() + " ; " + t->describe() + ": " + c1.witness + c2.witness + c3.witness + c4.witness;
    }
    auto n = std::to_string(o.samples);
    out.push_back({"engine", "associativity", n + " random triples", "behaviour@" + std::to_string(o.depth),
                   assoc == o.samples, std::to_string(assoc) + "/" + n + (assoc_bad.empty() ? "" : "; " + assoc_bad)});
    out.push_back({"engine", "copy-cat identity", n + " random strategies", "behaviour@" + std::to_string(o.depth),
                   ident == o.samples, std::to_string(ident) + "/" + n + (ident_bad.empty() ? "" : "; " + ident_bad)});
    out.push_back({"engine", "innocent, well-bracketed, total, noetherian under composition", n + " random pairs",
                   "bounded check@" + std::to_string(o.depth), preserved == o.samples,
                   std::to_string(preserved) + "/" + n + (pres_bad.empty() ? "" : "; " + pres_bad)});
    return out;
}

std::vector<std::string> law_scopes() { return {"cwf", "types", "intensional", "engine", "all"}; }

std::vector<LawCheck> run_laws(const std::string& scope, const LawOptions& o) {
    if (scope == "cwf") return cwf_laws(o);
    if (scope == "types") return type_former_laws(o);
    if (scope == "intensional") return intensional_laws(o);
    if (scope == "engine") return engine_laws(o);
    if (scope == "all") {
        std::vector<LawCheck> all;
        for (auto& s : {"cwf", "types", "intensional", "engine"}) {
            auto part = run_laws(s, o);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw Error("unknown law scope '" + scope + "'");
}

}  // namespace ludic
