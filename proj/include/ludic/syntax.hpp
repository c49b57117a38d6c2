#pragma once

#include "ludic/cwf.hpp"

namespace ludic {

struct Loc {
    std::string file;
    unsigned line = 0;
    unsigned col = 0;
};

enum class ExprKind {
    Var,
    Unit, Empty, Nat, Univ,
    Pi, Sigma, Id, El, En, FSN,
    Star, Zero, Succ, Lam, App, Pair, Refl,
    R1, R0, RN, RS, RId,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// De Bruijn indexed. Binder layout of `kids`:
//   Pi/Sigma/Lam [A, B]: B binds one variable of type A
//   Id [A, a, b]; El [c]; En [A]; FSN [n]; Succ [n]; Refl [a]; App [f, a]; Pair [a, b]
//   R1 [C, c, t]         C binds z : 1
//   R0 [C, t]            C binds z : 0
//   RN [C, c0, cs, n]    C binds z : N; cs binds x : N, y : C[x]
//   RS [C, c, p]         C binds z : Sigma(A, B); c binds x : A, y : B
//   RId [C, d, a, b, q]  C binds x y : A, p : Id A x y; d binds x : A
struct Expr {
    ExprKind kind;
    std::vector<ExprPtr> kids;
    std::vector<std::string> names;  // binder names, for printing only
    unsigned index = 0;              // Var
    unsigned level = 0;              // Univ
    Loc loc;
};

ExprPtr mk(ExprKind k, std::vector<ExprPtr> kids = {}, std::vector<std::string> names = {});
ExprPtr mk_var(unsigned i, std::string name = "");
ExprPtr mk_univ(unsigned k);
ExprPtr mk_numeral(unsigned n);

struct Binding {
    std::string name;
    ExprPtr type;
};
using Telescope = std::vector<Binding>;

struct Diagnostic {
    Loc loc;
    std::string rule;  // the inference rule whose premise failed, or "parse"
    std::string message;
};
std::string to_string(const Diagnostic& d);

class SyntaxError : public Error {
public:
    explicit SyntaxError(Diagnostic d);
    const Diagnostic& diagnostic() const { return d_; }

private:
    Diagnostic d_;
};

// Closed definitions visible by name while parsing; references are inlined.
using DefScope = std::map<std::string, ExprPtr>;

ExprPtr parse_expr(std::string_view text, const std::vector<std::string>& scope = {}, const DefScope& defs = {});
std::string pretty(const ExprPtr& e, std::vector<std::string> scope = {});
std::string pretty(const Telescope& t);

// ---------------------------------------------------------------- rewriting

// Number of variables bound by the i-th child of a node of kind k.
unsigned binders_of(ExprKind k, std::size_t i);
bool mentions_var(const ExprPtr& e, unsigned i);

ExprPtr shift(const ExprPtr& e, int by, unsigned cutoff = 0);
// Replaces the innermost vals.size() variables (the last value for index 0); vals live in the outer scope.
ExprPtr subst_many(const ExprPtr& body, const std::vector<ExprPtr>& vals);
ExprPtr subst_top(const ExprPtr& body, const ExprPtr& v);
bool alpha_equal(const ExprPtr& a, const ExprPtr& b);
ExprPtr nf(const ExprPtr& e);

// ---------------------------------------------------------------- checking

struct Derivation {
    std::string rule;
    std::string judgement;
    unsigned rank = 0;  // for type judgements
    std::vector<Derivation> premises;
};

struct TypeResult {
    unsigned rank;
    Derivation deriv;
};

struct TermResult {
    ExprPtr type;
    Derivation deriv;
};

TypeResult check_type(const Telescope& ctx, const ExprPtr& a);
TermResult infer(const Telescope& ctx, const ExprPtr& t);
Derivation check(const Telescope& ctx, const ExprPtr& t, const ExprPtr& type);
Derivation check_ctx(const Telescope& ctx);
// Least k with ctx |- c : U_k.
unsigned universe_level(const Telescope& ctx, const ExprPtr& c);

bool judgmental_equal(const Telescope& ctx, const ExprPtr& a, const ExprPtr& b);

nlohmann::json to_json(const Derivation& d);

// ---------------------------------------------------------------- programs

struct Decl {
    std::string name;
    Telescope ctx;
    ExprPtr type;
    ExprPtr term;
    unsigned rank = 0;
    Derivation deriv;
    Loc loc;
};

struct Program {
    std::vector<Decl> defs;
    std::map<std::string, Telescope> contexts;
    std::vector<Diagnostic> diagnostics;

    const Decl* find(const std::string& name) const;
    bool ok() const { return diagnostics.empty(); }
};

// Parses and checks every declaration; failures are collected, not thrown.
Program load_program(std::string_view text, const std::string& file = "<input>");
Program load_program_file(const std::string& path);

// Sigma(Delta) and the tuple (...((*, d1), d2), ..., dn) for a closed-typed telescope.
struct ContextualTerm {
    ExprPtr type;
    ExprPtr term;
};
ContextualTerm contextual_term(const std::vector<ExprPtr>& ds, const Telescope& delta);

// ---------------------------------------------------------------- elaboration

Ctx elaborate(const Telescope& ctx);
TyPtr elaborate_type(const ExprPtr& a);
TmPtr elaborate_term(const ExprPtr& t);

}  // namespace ludic
