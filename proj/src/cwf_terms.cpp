#include "ludic/cwf.hpp"

namespace ludic {

namespace {

TmPtr make(TmKind k, std::vector<TmPtr> args = {}) {
    auto t = std::make_shared<Tm>();
    t->kind = k;
    t->args = std::move(args);
    return t;
}

TmPtr constant(TmKind k) { return make(k); }

const char* kind_name(TmKind k) {
    switch (k) {
    case TmKind::Id: return "id";
    case TmKind::Comp: return "comp";
    case TmKind::P: return "p";
    case TmKind::V: return "v";
    case TmKind::Ext: return "ext";
    case TmKind::Top: return "top";
    case TmKind::Star: return "star";
    case TmKind::Numeral: return "num";
    case TmKind::SuccV: return "succ";
    case TmKind::Code: return "code";
    case TmKind::CodeFSN: return "fsn";
    case TmKind::Lambda: return "lam";
    case TmKind::LambdaInv: return "unlam";
    case TmKind::UPi: return "upi";
    case TmKind::USigma: return "usigma";
    case TmKind::UId: return "uid";
    case TmKind::PairTm: return "pair";
    case TmKind::Proj1: return "fst";
    case TmKind::Proj2: return "snd";
    case TmKind::Refl: return "refl";
    case TmKind::ReflInv: return "unrefl";
    case TmKind::RNat: return "rnat";
    case TmKind::REmpty: return "rempty";
    }
    return "?";
}

const char* ty_kind_name(TyKind k) {
    switch (k) {
    case TyKind::Const: return "const";
    case TyKind::El: return "el";
    case TyKind::Subst: return "subst";
    case TyKind::Pi: return "pi";
    case TyKind::Sigma: return "sigma";
    case TyKind::Id: return "id";
    }
    return "?";
}

}  // namespace

TmPtr tm_id() { return constant(TmKind::Id); }
TmPtr tm_comp(TmPtr a, TmPtr b) { return make(TmKind::Comp, {std::move(a), std::move(b)}); }
TmPtr tm_p() { return constant(TmKind::P); }
TmPtr tm_v() { return constant(TmKind::V); }
TmPtr tm_ext(TmPtr phi, TmPtr tau) { return make(TmKind::Ext, {std::move(phi), std::move(tau)}); }
TmPtr tm_top() { return constant(TmKind::Top); }
TmPtr tm_star() { return constant(TmKind::Star); }

TmPtr tm_numeral(std::uint64_t n) {
    auto t = std::make_shared<Tm>();
    t->kind = TmKind::Numeral;
    t->value = n;
    return t;
}

TmPtr tm_succ_v() { return constant(TmKind::SuccV); }

TmPtr tm_code(const RegistryEntry& e) {
    auto t = std::make_shared<Tm>();
    t->kind = TmKind::Code;
    t->value = e.number;
    t->rank = e.rank;
    t->label = e.description;
    return t;
}

TmPtr tm_code_fsn() { return constant(TmKind::CodeFSN); }
TmPtr tm_lambda(TmPtr b) { return make(TmKind::Lambda, {std::move(b)}); }
TmPtr tm_lambda_inv(TmPtr f) { return make(TmKind::LambdaInv, {std::move(f)}); }
TmPtr tm_upi(TmPtr a, TmPtr b) { return make(TmKind::UPi, {std::move(a), std::move(b)}); }
TmPtr tm_usigma(TmPtr a, TmPtr b) { return make(TmKind::USigma, {std::move(a), std::move(b)}); }
TmPtr tm_uid(TmPtr a, TmPtr x, TmPtr y) { return make(TmKind::UId, {std::move(a), std::move(x), std::move(y)}); }
TmPtr tm_pair(TmPtr a, TmPtr b) { return make(TmKind::PairTm, {std::move(a), std::move(b)}); }
TmPtr tm_proj1() { return constant(TmKind::Proj1); }
TmPtr tm_proj2() { return constant(TmKind::Proj2); }
TmPtr tm_refl() { return constant(TmKind::Refl); }
TmPtr tm_refl_inv() { return constant(TmKind::ReflInv); }
TmPtr tm_rnat(TmPtr cz, TmPtr cs) { return make(TmKind::RNat, {std::move(cz), std::move(cs)}); }
TmPtr tm_rempty(TmPtr tau) { return make(TmKind::REmpty, {std::move(tau)}); }

TmPtr tm_var(unsigned i) {
    TmPtr w = tm_id();
    for (unsigned k = 0; k < i; ++k) w = k == 0 ? tm_p() : tm_comp(tm_p(), w);
    return i == 0 ? tm_v() : tm_comp(tm_v(), w);
}

TmPtr tm_subst(TmPtr a, TmPtr phi) { return tm_comp(std::move(a), std::move(phi)); }
TmPtr tm_bar(TmPtr tau) { return tm_ext(tm_id(), std::move(tau)); }
TmPtr tm_app(TmPtr kappa, TmPtr tau) { return tm_comp(tm_lambda_inv(std::move(kappa)), tm_bar(std::move(tau))); }
TmPtr tm_succ(TmPtr t) { return tm_comp(tm_succ_v(), tm_bar(std::move(t))); }
TmPtr tm_lift(TmPtr phi) { return tm_ext(tm_comp(std::move(phi), tm_p()), tm_v()); }

TmPtr tm_pair_mor() {
    return tm_ext(tm_comp(tm_p(), tm_p()), tm_pair(tm_comp(tm_v(), tm_p()), tm_v()));
}

TmPtr tm_pair_inv() { return tm_ext(tm_ext(tm_p(), tm_proj1()), tm_proj2()); }
TmPtr tm_r_sigma(TmPtr psi) { return tm_comp(std::move(psi), tm_pair_inv()); }
TmPtr tm_r_id(TmPtr tau) { return tm_comp(std::move(tau), tm_refl_inv()); }
TmPtr tm_r_unit(TmPtr tau) { return tau; }
TmPtr tm_refl_mor() { return tm_ext(tm_ext(tm_id(), tm_v()), tm_refl()); }

TyPtr ty_const(std::string base, unsigned level) {
    auto t = std::make_shared<Ty>();
    t->kind = TyKind::Const;
    t->base = std::move(base);
    t->level = level;
    return t;
}

TyPtr ty_el(TmPtr code) {
    auto t = std::make_shared<Ty>();
    t->kind = TyKind::El;
    t->t = std::move(code);
    return t;
}

TyPtr ty_subst(TyPtr a, TmPtr phi) {
    auto t = std::make_shared<Ty>();
    t->kind = TyKind::Subst;
    t->a = std::move(a);
    t->t = std::move(phi);
    return t;
}

TyPtr ty_pi(TyPtr a, TyPtr b) {
    auto t = std::make_shared<Ty>();
    t->kind = TyKind::Pi;
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

TyPtr ty_sigma(TyPtr a, TyPtr b) {
    auto t = std::make_shared<Ty>();
    t->kind = TyKind::Sigma;
    t->a = std::move(a);
    t->b = std::move(b);
    return t;
}

TyPtr ty_id(TyPtr a, TmPtr x, TmPtr y) {
    auto t = std::make_shared<Ty>();
    t->kind = TyKind::Id;
    t->a = std::move(a);
    t->u = std::move(x);
    t->w = std::move(y);
    return t;
}

nlohmann::json to_json(const TmPtr& t) {
    nlohmann::json j{{"k", kind_name(t->kind)}};
    if (t->kind == TmKind::Numeral) j["n"] = t->value;
    if (t->kind == TmKind::Code) j["n"] = t->value;
    if (!t->args.empty()) {
        j["args"] = nlohmann::json::array();
        for (const auto& a : t->args) j["args"].push_back(to_json(a));
    }
    return j;
}

nlohmann::json to_json(const TyPtr& t) {
    nlohmann::json j{{"k", ty_kind_name(t->kind)}};
    if (t->kind == TyKind::Const) {
        j["base"] = t->base;
        if (t->base == "U" || t->base == "G") j["level"] = t->level;
    }
    if (t->a) j["a"] = to_json(t->a);
    if (t->b) j["b"] = to_json(t->b);
    if (t->t) j["t"] = to_json(t->t);
    if (t->u) j["u"] = to_json(t->u);
    if (t->w) j["w"] = to_json(t->w);
    return j;
}

std::string to_string(const TmPtr& t) {
    auto arg = [&](std::size_t i) { return to_string(t->args[i]); };
    switch (t->kind) {
    case TmKind::Id: return "id";
    case TmKind::Comp: return arg(0) + "." + (t->args[1]->kind == TmKind::Comp ? "(" + arg(1) + ")" : arg(1));
    case TmKind::P: return "p";
    case TmKind::V: return "v";
    case TmKind::Ext: return "<" + arg(0) + ", " + arg(1) + ">";
    case TmKind::Top: return "!";
    case TmKind::Star: return "*";
    case TmKind::Numeral: return std::to_string(t->value);
    case TmKind::SuccV: return "succ(v)";
    case TmKind::Code: return "code(" + t->label + ")";
    case TmKind::CodeFSN: return "FSN(v)";
    case TmKind::Lambda: return "lam(" + arg(0) + ")";
    case TmKind::LambdaInv: return "lam^-1(" + arg(0) + ")";
    case TmKind::UPi: return "Pi^(" + arg(0) + ", " + arg(1) + ")";
    case TmKind::USigma: return "Sigma^(" + arg(0) + ", " + arg(1) + ")";
    case TmKind::UId: return "Id^(" + arg(0) + ", " + arg(1) + ", " + arg(2) + ")";
    case TmKind::PairTm: return "(" + arg(0) + ", " + arg(1) + ")";
    case TmKind::Proj1: return "fst(v)";
    case TmKind::Proj2: return "snd(v)";
    case TmKind::Refl: return "refl(v)";
    case TmKind::ReflInv: return "refl^-1";
    case TmKind::RNat: return "R_N(" + arg(0) + ", " + arg(1) + ")";
    case TmKind::REmpty: return "R_0(" + arg(0) + ")";
    }
    return "?";
}

std::string to_string(const TyPtr& t) {
    switch (t->kind) {
    case TyKind::Const:
        if (t->base == "U") return "U" + std::to_string(t->level);
        if (t->base == "G") {
            auto e = Registry::global().find(t->level);
            return e ? e->description : "#" + std::to_string(t->level);
        }
        return t->base;
    case TyKind::El: return "El(" + to_string(t->t) + ")";
    case TyKind::Subst: return to_string(t->a) + "{" + to_string(t->t) + "}";
    case TyKind::Pi: return "Pi(" + to_string(t->a) + ", " + to_string(t->b) + ")";
    case TyKind::Sigma: return "Sigma(" + to_string(t->a) + ", " + to_string(t->b) + ")";
    case TyKind::Id: return "Id(" + to_string(t->a) + ", " + to_string(t->u) + ", " + to_string(t->w) + ")";
    }
    return "?";
}

bool same(const TmPtr& a, const TmPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->value != b->value || a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!same(a->args[i], b->args[i])) return false;
    return true;
}

bool same(const TyPtr& a, const TyPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->base != b->base || a->level != b->level) return false;
    auto eq_ty = [](const TyPtr& x, const TyPtr& y) { return (!x && !y) || (x && y && same(x, y)); };
    auto eq_tm = [](const TmPtr& x, const TmPtr& y) { return (!x && !y) || (x && y && same(x, y)); };
    return eq_ty(a->a, b->a) && eq_ty(a->b, b->b) && eq_tm(a->t, b->t) && eq_tm(a->u, b->u) && eq_tm(a->w, b->w);
}

TmPtr en(const TyPtr& a) {
    switch (a->kind) {
    case TyKind::Const:
        if (a->base == "I") return tm_code(terminal_entry());
        if (a->base == "0") return tm_code(empty_entry());
        if (a->base == "1") return tm_code(unit_entry());
        if (a->base == "N") return tm_code(nat_entry());
        if (a->base == "U") return tm_code(universe_entry(a->level));
        if (auto e = Registry::global().find(a->level)) return tm_code(*e);
        throw Error("no registered game numbered " + std::to_string(a->level));
    case TyKind::El: return a->t;
    case TyKind::Subst: return tm_comp(en(a->a), a->t);
    case TyKind::Pi: return tm_upi(en(a->a), en(a->b));
    case TyKind::Sigma: return tm_usigma(en(a->a), en(a->b));
    case TyKind::Id: return tm_uid(en(a->a), a->u, a->w);
    }
    throw Error("unknown dependent game term");
}

}  // namespace ludic
