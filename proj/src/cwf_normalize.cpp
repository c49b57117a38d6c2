#include "ludic/cwf.hpp"

namespace ludic {

namespace {

bool is(const TmPtr& t, TmKind k) { return t->kind == k; }

bool context_free(const TmPtr& t) {
    switch (t->kind) {
    case TmKind::Top:
    case TmKind::Star:
    case TmKind::Numeral:
    case TmKind::Code:
    case TmKind::Refl: return true;
    default: return false;
    }
}

TyPtr const_of(const RegistryEntry& e) {
    auto key = nlohmann::json::parse(e.key);
    if (key.contains("base")) return ty_const(key["base"].get<std::string>());
    if (key.contains("U")) return ty_const("U", key["U"].get<unsigned>());
    return ty_const("G", static_cast<unsigned>(e.number));
}

TmPtr norm(const TmPtr& t);

// One root step on a term whose arguments are normal; nullptr when none applies.
TmPtr step(const TmPtr& t) {
    switch (t->kind) {
    case TmKind::Ext: {
        const auto& phi = t->args[0];
        const auto& tau = t->args[1];
        if (is(phi, TmKind::P) && is(tau, TmKind::V)) return tm_id();
        // <p . x, v . x> = x
        if (is(phi, TmKind::Comp) && is(tau, TmKind::Comp) && is(phi->args[0], TmKind::P) && is(tau->args[0], TmKind::V) &&
            same(phi->args[1], tau->args[1]))
            return phi->args[1];
        return nullptr;
    }
    case TmKind::Lambda:
        if (is(t->args[0], TmKind::LambdaInv)) return t->args[0]->args[0];
        return nullptr;
    case TmKind::LambdaInv:
        if (is(t->args[0], TmKind::Lambda)) return t->args[0]->args[0];
        return nullptr;
    case TmKind::Comp: break;
    default: return nullptr;
    }

    const auto& a = t->args[0];
    const auto& b = t->args[1];
    if (is(a, TmKind::Id)) return b;
    if (is(b, TmKind::Id)) return a;
    if (is(a, TmKind::Comp)) return tm_comp(a->args[0], tm_comp(a->args[1], b));
    if (context_free(a)) return a;
    if (is(a, TmKind::Ext)) return tm_ext(tm_comp(a->args[0], b), tm_comp(a->args[1], b));
    if (is(a, TmKind::Lambda)) return tm_lambda(tm_comp(a->args[0], tm_lift(b)));
    if (is(a, TmKind::PairTm)) return tm_pair(tm_comp(a->args[0], b), tm_comp(a->args[1], b));
    if (is(a, TmKind::REmpty)) return tm_rempty(tm_comp(a->args[0], b));
    if (is(a, TmKind::UPi)) return tm_upi(tm_comp(a->args[0], b), tm_comp(a->args[1], tm_lift(b)));
    if (is(a, TmKind::USigma)) return tm_usigma(tm_comp(a->args[0], b), tm_comp(a->args[1], tm_lift(b)));
    if (is(a, TmKind::UId)) return tm_uid(tm_comp(a->args[0], b), tm_comp(a->args[1], b), tm_comp(a->args[2], b));

    // projections out of an extension, possibly followed by more substitution
    const TmPtr* ext = nullptr;
    TmPtr rest;
    if (is(b, TmKind::Ext)) {
        ext = &b;
    } else if (is(b, TmKind::Comp) && is(b->args[0], TmKind::Ext)) {
        ext = &b->args[0];
        rest = b->args[1];
    }
    auto then = [&](const TmPtr& x) { return rest ? tm_comp(x, rest) : x; };
    if (ext) {
        const auto& phi = (*ext)->args[0];
        const auto& tau = (*ext)->args[1];
        if (is(a, TmKind::P)) return then(phi);
        if (is(a, TmKind::V)) return then(tau);
        if (!rest && is(tau, TmKind::Numeral)) {
            auto n = tau->value;
            if (is(a, TmKind::SuccV)) return tm_numeral(n + 1);
            if (is(a, TmKind::CodeFSN)) return tm_code(fs_entry(static_cast<unsigned>(n)));
            if (is(a, TmKind::RNat)) {
                if (n == 0) return tm_comp(a->args[0], phi);
                auto prev = tm_ext(phi, tm_numeral(n - 1));
                return tm_comp(a->args[1], tm_ext(prev, tm_comp(a, prev)));
            }
        }
        if (!rest && is(tau, TmKind::PairTm)) {
            if (is(a, TmKind::Proj1)) return tau->args[0];
            if (is(a, TmKind::Proj2)) return tau->args[1];
        }
    }
    return nullptr;
}

TmPtr norm(const TmPtr& t) {
    TmPtr cur = t;
    for (;;) {
        if (!cur->args.empty()) {
            auto c = std::make_shared<Tm>(*cur);
            for (auto& a : c->args) a = norm(a);
            cur = c;
        }
        auto next = step(cur);
        if (!next) return cur;
        cur = next;
    }
}

TyPtr norm_ty(const TyPtr& a);

TyPtr push(const TyPtr& a, const TmPtr& phi) {
    switch (a->kind) {
    case TyKind::Const: return a;
    case TyKind::El: return norm_ty(ty_el(tm_comp(a->t, phi)));
    case TyKind::Subst: return norm_ty(ty_subst(a->a, tm_comp(a->t, phi)));
    case TyKind::Pi: return norm_ty(ty_pi(ty_subst(a->a, phi), ty_subst(a->b, tm_lift(phi))));
    case TyKind::Sigma: return norm_ty(ty_sigma(ty_subst(a->a, phi), ty_subst(a->b, tm_lift(phi))));
    case TyKind::Id: return norm_ty(ty_id(ty_subst(a->a, phi), tm_comp(a->u, phi), tm_comp(a->w, phi)));
    }
    return a;
}

TyPtr norm_ty(const TyPtr& a) {
    switch (a->kind) {
    case TyKind::Const: return a;
    case TyKind::El: {
        auto c = norm(a->t);
        switch (c->kind) {
        case TmKind::Code: {
            auto e = Registry::global().find(c->value);
            if (!e) throw Error("code names an unregistered game: " + std::to_string(c->value));
            return const_of(*e);
        }
        case TmKind::UPi: return norm_ty(ty_pi(ty_el(c->args[0]), ty_el(c->args[1])));
        case TmKind::USigma: return norm_ty(ty_sigma(ty_el(c->args[0]), ty_el(c->args[1])));
        case TmKind::UId: return norm_ty(ty_id(ty_el(c->args[0]), c->args[1], c->args[2]));
        default: return ty_el(c);
        }
    }
    case TyKind::Subst: {
        auto phi = norm(a->t);
        if (is(phi, TmKind::Id)) return norm_ty(a->a);
        return push(a->a, phi);
    }
    case TyKind::Pi: return ty_pi(norm_ty(a->a), norm_ty(a->b));
    case TyKind::Sigma: return ty_sigma(norm_ty(a->a), norm_ty(a->b));
    case TyKind::Id: return ty_id(norm_ty(a->a), norm(a->u), norm(a->w));
    }
    return a;
}

}  // namespace

TmPtr normalize(const TmPtr& t) { return norm(t); }
TyPtr normalize(const TyPtr& t) { return norm_ty(t); }

}  // namespace ludic
