#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "play.hpp"

using namespace ludic;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kDiagnostics = 1, kDivergence = 2, kInternal = 3 };

struct Bounds {
    unsigned alphabet = 32;
    std::size_t depth = 10;
    std::size_t unfold = 64;
    std::size_t steps = kDefaultSteps;

    EvalOptions eval() const {
        EvalOptions o;
        o.unfold = unfold;
        o.steps = steps;
        return o;
    }
    ExploreOptions explore(std::size_t d = 0) const {
        ExploreOptions o;
        o.alphabet = alphabet;
        o.depth = d ? d : depth;
        return o;
    }
};

// A diagnostic for the user rather than a fault of the engine.
struct Failure {
    int code;
    std::string message;
};

Program load(const std::string& file) {
    auto p = load_program_file(file);
    if (!p.ok()) {
        std::ostringstream out;
        for (auto& d : p.diagnostics) out << to_string(d) << "\n";
        throw Failure{kDiagnostics, out.str()};
    }
    return p;
}

const Decl& lookup(const Program& p, const std::string& name) {
    if (auto d = p.find(name)) return *d;
    throw Failure{kDiagnostics, "no definition named '" + name + "'"};
}

std::vector<std::string> scope_of(const Telescope& t) {
    std::vector<std::string> s;
    for (auto& b : t) s.push_back(b.name);
    return s;
}

// Pi over the definition's context: the closed type its denotation inhabits.
ExprPtr closed_type(const Decl& d) {
    ExprPtr t = d.type;
    for (auto it = d.ctx.rbegin(); it != d.ctx.rend(); ++it) t = mk(ExprKind::Pi, {it->type, t}, {it->name});
    return t;
}

struct Denotation {
    Ctx ctx;
    TyPtr type;
    TmPtr term;
};

Denotation denote(const Decl& d) { return {elaborate(d.ctx), elaborate_type(d.type), elaborate_term(d.term)}; }

cli::PlayTarget target_of(const Decl& d, const Bounds& b) {
    auto den = denote(d);
    return {d.name + " : " + pretty(d.type, scope_of(d.ctx)), compile(den.term, b.eval()),
            term_game(den.ctx, den.type, b.eval())};
}

std::string occ_text(const Occ& o) { return to_string(o.move) + (o.just ? "@" + std::to_string(*o.just) : ""); }

// ---------------------------------------------------------------- commands

int cmd_check(const std::string& file, bool derivations) {
    auto p = load_program_file(file);
    for (auto& [name, tel] : p.contexts) std::cout << "ctx " << name << " = " << pretty(tel) << "\n";
    for (auto& d : p.defs) {
        std::cout << "def " << d.name;
        if (!d.ctx.empty()) std::cout << " " << pretty(d.ctx);
        std::cout << " : " << pretty(d.type, scope_of(d.ctx)) << "  [type_" << d.rank << "]\n";
        if (derivations) std::cout << to_json(d.deriv).dump(2) << "\n";
    }
    for (auto& d : p.diagnostics) std::cerr << to_string(d) << "\n";
    std::cout << p.defs.size() << " definition(s), " << p.diagnostics.size() << " diagnostic(s)\n";
    return p.ok() ? kOk : kDiagnostics;
}

int cmd_interp(const std::string& file, const std::string& name, const Bounds& b) {
    auto p = load(file);
    const auto& d = lookup(p, name);
    auto den = denote(d);
    json out{{"name", d.name}, {"rank", d.rank}, {"term", to_json(den.term)}, {"type", to_json(den.type)}};
    json ctx = json::array();
    for (auto& a : den.ctx) ctx.push_back(to_json(a));
    out["context"] = ctx;
    out["normal_form"] = to_json(normalize(den.term));
    try {
        auto e = realize(elaborate_type(closed_type(d)), b.eval());
        out["game"] = {{"number", e.number}, {"rank", e.rank}, {"name", to_string(name_of(e))}, {"description", e.description}};
    } catch (const Error& e) {
        out["game"] = {{"unavailable", e.what()}};
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

int cmd_eval(const std::string& file, const std::string& name, const Bounds& b) {
    auto p = load(file);
    const auto& d = lookup(p, name);
    if (!d.ctx.empty()) throw Failure{kDiagnostics, name + " is an open term; use play"};
    auto ty = nf(d.type);
    bool flat = ty->kind == ExprKind::Nat || ty->kind == ExprKind::Unit || ty->kind == ExprKind::Univ;
    if (!flat) throw Failure{kDiagnostics, name + " has type " + pretty(ty) + "; eval reads N, Unit or U_k, use play"};
    auto r = run_closed(elaborate_term(d.term), b.eval());
    if (r.kind == ResponseKind::Diverge) {
        std::cout << "diverged (unfold budget " << b.unfold << ", step budget " << b.steps << ")\n";
        return kDivergence;
    }
    if (r.kind == ResponseKind::None) {
        std::cout << "no response\n";
        return kDiagnostics;
    }
    auto m = untag(r.occ.move);
    switch (ty->kind) {
    case ExprKind::Nat: std::cout << m.ident << "\n"; break;
    case ExprKind::Unit: std::cout << "star\n"; break;
    default: {
        auto e = Registry::global().find_name(m);
        std::cout << to_string(m) << "  #" << (e ? std::to_string(e->number) : "?") << "  "
                  << (e ? e->description : std::string("unregistered")) << "\n";
    }
    }
    return kOk;
}

int cmd_equiv(const std::string& file, const std::string& n1, const std::string& n2, const Bounds& b) {
    auto p = load(file);
    const auto& d1 = lookup(p, n1);
    const auto& d2 = lookup(p, n2);
    if (!alpha_equal(closed_type(d1), closed_type(d2)) && !judgmental_equal({}, closed_type(d1), closed_type(d2)))
        throw Failure{kDiagnostics, n1 + " and " + n2 + " do not live in the same game"};
    auto t1 = target_of(d1, b);
    auto t2 = target_of(d2, b);
    auto r = equiv_at_depth(*t1.strategy, *t2.strategy, *t1.game, b.explore());
    if (r.equal) {
        std::cout << "equal up to depth " << b.depth << " (" << r.explored << " odd positions"
                  << (r.exhausted ? ", position budget exhausted" : "") << ")\n";
    } else {
        std::cout << "different\nwitness: " << to_string(*r.witness) << "\n" << r.detail << "\n";
    }
    return kOk;
}

std::vector<std::string> split_script(const std::string& script) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : script) {
        if (c == ';' || c == ',' || c == '\n') {
            if (cur.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.find_first_not_of(" \t\r") != std::string::npos) out.push_back(cur);
    return out;
}

int cmd_trace(const std::string& file, const std::string& name, const std::string& then, const std::string& script,
              bool hidden, const Bounds& b) {
    auto p = load(file);
    const auto& d = lookup(p, name);
    cli::PlayTarget t;
    TmPtr term;
    if (then.empty()) {
        t = target_of(d, b);
        term = elaborate_term(d.term);
    } else {
        // Lambda^-1(g) . <p, Lambda^-1(f)> : A |- C for closed f : A -> B and g : B -> C
        const auto& g = lookup(p, then);
        auto ft = nf(d.type), gt = nf(g.type);
        if (!d.ctx.empty() || !g.ctx.empty() || ft->kind != ExprKind::Pi || gt->kind != ExprKind::Pi)
            throw Failure{kDiagnostics, "--then composes closed functions"};
        if (mentions_var(ft->kids[1], 0) || mentions_var(gt->kids[1], 0))
            throw Failure{kDiagnostics, "--then needs non-dependent function types"};
        if (!judgmental_equal({}, shift(ft->kids[1], -1), gt->kids[0]))
            throw Failure{kDiagnostics, "codomain of " + name + " is not the domain of " + then};
        term = tm_comp(tm_lambda_inv(elaborate_term(g.term)), tm_ext(tm_p(), tm_lambda_inv(elaborate_term(d.term))));
        Ctx ctx{elaborate_type(ft->kids[0])};
        auto cod = elaborate_type(shift(gt->kids[1], -1));
        t = {name + " ; " + then, compile(term, b.eval()), term_game(ctx, cod, b.eval())};
    }

    json plays = json::array();
    json steps = json::array();
    Position s;
    auto moves = split_script(script);
    std::string outcome = "responded";
    for (std::size_t k = 0; k < moves.size(); ++k) {
        std::string diag;
        auto next = cli::extend_by_opponent(*t.game, s, moves[k], b.alphabet, diag);
        if (!next) throw Failure{kDiagnostics, "script illegal at step " + std::to_string(k + 1) + " ('" + moves[k] + "'): " + diag};
        s = std::move(*next);
        plays.push_back({{"index", s.size() - 1}, {"player", "O"}, {"move", to_json(s.back().move)},
                         {"text", occ_text(s.back())}, {"justifier", s.back().just ? json(*s.back().just) : json()}});
        if (hidden && term->kind == TmKind::Comp) {
            auto io = interact(promotion(compile(term->args[1], b.eval())), compile(term->args[0], b.eval()), s, b.steps);
            json entries = json::array();
            for (auto& e : io.trace) entries.push_back(to_json(e));
            steps.push_back({{"after", s.size() - 1}, {"interaction", entries}});
        }
        auto r = cli::player_turn(t, s);
        if (r.kind == ResponseKind::Diverge) {
            outcome = "diverged";
            break;
        }
        if (r.kind == ResponseKind::None) {
            outcome = "no response";
            if (k + 1 < moves.size()) throw Failure{kDiagnostics, "script illegal at step " + std::to_string(k + 2) + ": Player did not respond"};
            break;
        }
        plays.push_back({{"index", s.size() - 1}, {"player", "P"}, {"move", to_json(s.back().move)},
                         {"text", occ_text(s.back())}, {"justifier", s.back().just ? json(*s.back().just) : json()}});
    }
    json out{{"name", t.title}, {"game", t.game->describe()}, {"plays", plays}, {"outcome", outcome}};
    if (hidden) {
        if (term->kind != TmKind::Comp) out["hidden_note"] = "the denotation is not a composite at the root";
        out["hidden"] = steps;
    }
    std::cout << out.dump(2) << "\n";
    return outcome == "diverged" ? kDivergence : kOk;
}

int cmd_laws(const std::string& scope, bool verbose, const Bounds& b) {
    LawOptions o;
    o.eval = b.eval();
    o.depth = b.depth;
    o.alphabet = std::min(b.alphabet, o.alphabet);
    auto checks = run_laws(scope, o);
    std::map<std::string, std::map<std::string, bool>> laws;  // suite -> law -> all instances ok
    std::size_t failed = 0;
    for (auto& c : checks) {
        auto [it, fresh] = laws[c.suite].try_emplace(c.law, true);
        it->second = it->second && c.ok;
        if (!c.ok) ++failed;
        if (verbose || !c.ok)
            std::cout << (c.ok ? "pass " : "FAIL ") << c.suite << "/" << c.law << ": " << c.instance << " [" << c.method
                      << "] " << c.detail << "\n";
    }
    for (auto& [suite, ls] : laws) {
        std::size_t ok = 0;
        for (auto& [law, pass] : ls) ok += pass;
        std::cout << suite << ": " << ok << "/" << ls.size() << " laws pass\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " instances pass\n";
    return failed ? kDiagnostics : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ludic: games and strategies for dependent type theory"};
    app.require_subcommand(1);
    Bounds b;
    std::string registry;
    app.add_option("--registry", registry, "registry file, read at start and written back")->envname("LUDIC_REGISTRY");
    app.add_option("--alphabet", b.alphabet, "largest numeric move explored, exclusive")
        ->envname("LUDIC_ALPHABET")
        ->check(CLI::PositiveNumber);
    app.add_option("--depth", b.depth, "exploration depth")->envname("LUDIC_DEPTH")->check(CLI::PositiveNumber);
    app.add_option("--unfold", b.unfold, "unfoldings of N-recursion")->envname("LUDIC_UNFOLD")->check(CLI::PositiveNumber);
    app.add_option("--steps", b.steps, "interaction step budget")->envname("LUDIC_STEPS")->check(CLI::PositiveNumber);

    std::string file, name, name2, script, then, scope = "all";
    bool derivations = false, hidden = false, verbose = false;

    auto* check = app.add_subcommand("check", "parse and typecheck a file");
    check->add_option("file", file)->required();
    check->add_flag("--derivations", derivations, "print derivation trees as JSON");

    auto* interp = app.add_subcommand("interp", "print the denotation of a definition");
    interp->add_option("file", file)->required();
    interp->add_option("name", name)->required();

    auto* eval = app.add_subcommand("eval", "run a closed definition of type N, Unit or U_k");
    eval->add_option("file", file)->required();
    eval->add_option("name", name)->required();

    auto* play = app.add_subcommand("play", "play Opponent against a definition");
    play->add_option("file", file)->required();
    play->add_option("name", name)->required();

    auto* equiv = app.add_subcommand("equiv", "compare two definitions up to the exploration depth");
    equiv->add_option("file", file)->required();
    equiv->add_option("first", name)->required();
    equiv->add_option("second", name2)->required();

    auto* trace = app.add_subcommand("trace", "replay an Opponent script and print the play as JSON");
    trace->add_option("file", file)->required();
    trace->add_option("name", name)->required();
    trace->add_option("--script", script, "O-moves separated by ';' or ','")->required();
    trace->add_option("--then", then, "compose with a second closed function");
    trace->add_flag("--hidden", hidden, "include the internal moves of a composite");

    auto* laws = app.add_subcommand("laws", "run the law suites");
    laws->add_option("scope", scope, "cwf, types, intensional, engine or all")
        ->check(CLI::IsMember(law_scopes()));
    laws->add_flag("--verbose", verbose, "print passing instances too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kDiagnostics;
    }

    int code = kOk;
    try {
        if (!registry.empty()) Registry::global().load(registry);
        if (*check) code = cmd_check(file, derivations);
        else if (*interp) code = cmd_interp(file, name, b);
        else if (*eval) code = cmd_eval(file, name, b);
        else if (*play) code = cli::play_repl(target_of(lookup(load(file), name), b), b.alphabet, std::cin, std::cout);
        else if (*equiv) code = cmd_equiv(file, name, name2, b);
        else if (*trace) code = cmd_trace(file, name, then, script, hidden, b);
        else if (*laws) code = cmd_laws(scope, verbose, b);
        if (!registry.empty()) Registry::global().save(registry);
    } catch (const Failure& f) {
        std::cerr << f.message << (f.message.empty() || f.message.back() == '\n' ? "" : "\n");
        return f.code;
    } catch (const SyntaxError& e) {
        std::cerr << to_string(e.diagnostic()) << "\n";
        return kDiagnostics;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDiagnostics;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return code;
}
