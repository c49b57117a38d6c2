#pragma once

#include "ludic/predicative.hpp"

namespace ludic {

struct Tm;
struct Ty;
using TmPtr = std::shared_ptr<const Tm>;
using TyPtr = std::shared_ptr<const Ty>;

// Elementary strategy terms. Morphisms Delta => Gamma and terms Gamma |- a : A share this
// type; both denote strategies on !Delta -o Gamma (resp. !Gamma -o A) with tags L / R.
enum class TmKind {
    Id,         // dereliction on the context
    Comp,       // a . b  (b first)
    P,          // Gamma.A => Gamma
    V,          // Gamma.A |- A{p}
    Ext,        // <phi, tau>
    Top,        // Gamma => I
    Star,       // Gamma |- * : 1
    Numeral,    // Gamma |- n : N
    SuccV,      // Gamma.N |- succ(v) : N
    Code,       // Gamma |- code of a registered game : U
    CodeFSN,    // Gamma.N |- FSN(v) : U0
    Lambda,     // Gamma.A |- b : B  ~>  Gamma |- Lambda(b) : Pi(A, B)
    LambdaInv,  // inverse of Lambda
    UPi,        // code of Pi(El a, El b)
    USigma,     // code of Sigma(El a, El b)
    UId,        // code of Id(El a, x, y)
    PairTm,     // Gamma |- (a, b) : Sigma(A, B)
    Proj1,      // Gamma.Sigma(A,B) |- A{p}
    Proj2,      // Gamma.Sigma(A,B) |- B{...}
    Refl,       // Gamma.A |- refl : Id(v, v), the crosswise copy-cat
    ReflInv,    // Gamma.A.A.Id => Gamma.A
    RNat,       // Gamma.N |- R^N(cz, cs) : C
    REmpty,     // Gamma |- R^0(tau) : C for tau : 0
};

struct Tm {
    TmKind kind;
    std::vector<TmPtr> args;
    std::uint64_t value = 0;  // numeral, or construction number of a code
    unsigned rank = 0;        // rank of a code's name
    std::string label;        // description of a code
};

enum class TyKind { Const, El, Subst, Pi, Sigma, Id };

// Dependent game terms.
struct Ty {
    TyKind kind;
    std::string base;   // Const: I, 0, 1, N, U, or G for any other registered game
    unsigned level = 0; // Const U: universe level; Const G: construction number
    TyPtr a, b;         // Pi/Sigma (b lives over a); Subst body in a; Id carrier in a
    TmPtr t, u, w;      // El code in t; Subst morphism in t; Id endpoints in u, w
};

// Constructors.
TmPtr tm_id();
TmPtr tm_comp(TmPtr a, TmPtr b);
TmPtr tm_p();
TmPtr tm_v();
TmPtr tm_ext(TmPtr phi, TmPtr tau);
TmPtr tm_top();
TmPtr tm_star();
TmPtr tm_numeral(std::uint64_t n);
TmPtr tm_succ_v();
TmPtr tm_code(const RegistryEntry& e);
TmPtr tm_code_fsn();
TmPtr tm_lambda(TmPtr b);
TmPtr tm_lambda_inv(TmPtr f);
TmPtr tm_upi(TmPtr a, TmPtr b);
TmPtr tm_usigma(TmPtr a, TmPtr b);
TmPtr tm_uid(TmPtr a, TmPtr x, TmPtr y);
TmPtr tm_pair(TmPtr a, TmPtr b);
TmPtr tm_proj1();
TmPtr tm_proj2();
TmPtr tm_refl();
TmPtr tm_refl_inv();
TmPtr tm_rnat(TmPtr cz, TmPtr cs);
TmPtr tm_rempty(TmPtr tau);

// Derived combinators.
TmPtr tm_var(unsigned i);                       // v{p^i}
TmPtr tm_app(TmPtr kappa, TmPtr tau);           // Lambda^-1(kappa) . <id, tau>
TmPtr tm_succ(TmPtr t);                         // succ(v) . <id, t>
TmPtr tm_lift(TmPtr phi);                       // phi+ = <phi . p, v>
TmPtr tm_bar(TmPtr tau);                        // <id, tau>
TmPtr tm_pair_mor();                            // <p . p, (v{p}, v)>
TmPtr tm_pair_inv();                            // <<p, fst>, snd>
TmPtr tm_r_sigma(TmPtr psi);                    // psi . Pair^-1
TmPtr tm_r_id(TmPtr tau);                       // tau . Refl^-1
TmPtr tm_r_unit(TmPtr tau);                     // strict: tau itself
TmPtr tm_refl_mor();                            // Gamma.A => Gamma.A.A.Id
TmPtr tm_subst(TmPtr a, TmPtr phi);             // a{phi} = a . phi

TyPtr ty_const(std::string base, unsigned level = 0);
TyPtr ty_el(TmPtr code);
TyPtr ty_subst(TyPtr a, TmPtr phi);
TyPtr ty_pi(TyPtr a, TyPtr b);
TyPtr ty_sigma(TyPtr a, TyPtr b);
TyPtr ty_id(TyPtr a, TmPtr x, TmPtr y);

nlohmann::json to_json(const TmPtr& t);
nlohmann::json to_json(const TyPtr& t);
std::string to_string(const TmPtr& t);
std::string to_string(const TyPtr& t);
bool same(const TmPtr& a, const TmPtr& b);
bool same(const TyPtr& a, const TyPtr& b);

// Normal forms: explicit substitutions pushed inward, compositions right-nested, the
// projection/extension and El/code equations applied.
TmPtr normalize(const TmPtr& t);
TyPtr normalize(const TyPtr& t);

// The code of a dependent game term (inverse of El up to normalization).
TmPtr en(const TyPtr& a);

// ---------------------------------------------------------------- evaluation

struct EvalOptions {
    std::size_t unfold = 64;   // unfoldings of R^N
    std::size_t steps = kDefaultSteps;
    unsigned threads = 3;      // thread bound of exponentials in exploration games
};

StrategyPtr compile(const TmPtr& t, const EvalOptions& o = {});

using Ctx = std::vector<TyPtr>;

// A game holding every play of the denotations: exact for constant families and closed
// codes, an over-approximation (union over the index) for dependent ones.
GamePtr ty_game(const TyPtr& a, const Ctx& ctx, const EvalOptions& o = {});
GamePtr ctx_game(const Ctx& ctx, const EvalOptions& o = {});
GamePtr term_game(const Ctx& ctx, const TyPtr& a, const EvalOptions& o = {});
GamePtr morphism_game(const Ctx& from, const Ctx& to, const EvalOptions& o = {});

// B{<id, sigma>} for a closed sigma : A, realized as a registered game.
RegistryEntry eval_dependent(const TyPtr& b, const TmPtr& sigma, const EvalOptions& o = {});
// The registered game of a closed type.
RegistryEntry realize(const TyPtr& a, const EvalOptions& o = {});

// Runs a closed term against the opening question of its type.
Response run_closed(const TmPtr& t, const EvalOptions& o = {});

// ---------------------------------------------------------------- identity games

// The crosswise copy-cat on !(G & G) -o (G & G).
StrategyPtr flip_strategy();
// Plays of flip against sigma (x) tau whose codomain stays inside <sigma, tau>.
FiniteGamePtr id_hat(const FiniteGame& g, const StrategyTable& sigma, const StrategyTable& tau);
bool has_total_strategy(FiniteGamePtr g);

}  // namespace ludic
