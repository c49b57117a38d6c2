#include "ludic/syntax.hpp"

namespace ludic {

Ctx elaborate(const Telescope& ctx) {
    Ctx out;
    for (const auto& b : ctx) out.push_back(elaborate_type(b.type));
    return out;
}

TyPtr elaborate_type(const ExprPtr& a) {
    const auto& k = a->kids;
    switch (a->kind) {
    case ExprKind::Unit: return ty_const("1");
    case ExprKind::Empty: return ty_const("0");
    case ExprKind::Nat: return ty_const("N");
    case ExprKind::Univ: return ty_const("U", a->level);
    case ExprKind::Pi: return ty_pi(elaborate_type(k[0]), elaborate_type(k[1]));
    case ExprKind::Sigma: return ty_sigma(elaborate_type(k[0]), elaborate_type(k[1]));
    case ExprKind::Id: return ty_id(elaborate_type(k[0]), elaborate_term(k[1]), elaborate_term(k[2]));
    case ExprKind::El: return ty_el(elaborate_term(k[0]));
    default: throw Error(pretty(a) + " is not a type");
    }
}

TmPtr elaborate_term(const ExprPtr& t) {
    auto kid = [&](std::size_t i) { return elaborate_term(t->kids[i]); };
    switch (t->kind) {
    case ExprKind::Var: return tm_var(t->index);
    case ExprKind::Star: return tm_star();
    case ExprKind::Zero: return tm_numeral(0);
    case ExprKind::Succ: return tm_succ(kid(0));
    case ExprKind::Lam: return tm_lambda(kid(1));
    case ExprKind::App: return tm_app(kid(0), kid(1));
    case ExprKind::Pair: return tm_pair(kid(0), kid(1));
    case ExprKind::Refl: return tm_comp(tm_refl(), tm_bar(kid(0)));
    case ExprKind::En: return en(elaborate_type(t->kids[0]));
    case ExprKind::FSN: return tm_comp(tm_code_fsn(), tm_bar(kid(0)));
    case ExprKind::R1: return tm_r_unit(kid(1));
    case ExprKind::R0: return tm_rempty(kid(1));
    case ExprKind::RN: return tm_comp(tm_rnat(kid(1), kid(2)), tm_bar(kid(3)));
    case ExprKind::RS: return tm_comp(tm_r_sigma(kid(1)), tm_bar(kid(2)));
    case ExprKind::RId: return tm_comp(tm_r_id(kid(1)), tm_ext(tm_ext(tm_ext(tm_id(), kid(2)), kid(3)), kid(4)));
    default: throw Error(pretty(t) + " is a type, not a term");
    }
}

}  // namespace ludic
