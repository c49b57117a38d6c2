#include <cctype>
#include <fstream>
#include <sstream>

#include "ludic/syntax.hpp"

namespace ludic {

ExprPtr mk(ExprKind k, std::vector<ExprPtr> kids, std::vector<std::string> names) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->kids = std::move(kids);
    e->names = std::move(names);
    return e;
}

ExprPtr mk_var(unsigned i, std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Var;
    e->index = i;
    if (!name.empty()) e->names.push_back(std::move(name));
    return e;
}

ExprPtr mk_univ(unsigned k) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Univ;
    e->level = k;
    return e;
}

ExprPtr mk_numeral(unsigned n) {
    ExprPtr e = mk(ExprKind::Zero);
    for (unsigned i = 0; i < n; ++i) e = mk(ExprKind::Succ, {e});
    return e;
}

std::string to_string(const Diagnostic& d) {
    std::ostringstream os;
    os << (d.loc.file.empty() ? "<input>" : d.loc.file) << ":" << d.loc.line << ":" << d.loc.col << ": ";
    if (!d.rule.empty()) os << "[" << d.rule << "] ";
    os << d.message;
    return os.str();
}

SyntaxError::SyntaxError(Diagnostic d) : Error(to_string(d)), d_(std::move(d)) {}

namespace {

struct Token {
    enum Kind { Ident, Number, Sym, End } kind;
    std::string text;
    unsigned line, col;
};

std::vector<Token> lex(std::string_view src, const std::string& file) {
    std::vector<Token> out;
    unsigned line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#' || src.substr(i, 2) == "--") {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t{Token::Sym, "", line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
                ++j;
            t.kind = Token::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Number;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (src.substr(i, 2) == "->") {
            t.text = "->";
            advance(2);
        } else if (src.substr(i, 3) == "\xE2\x86\x92") {
            t.text = "->";
            advance(3);
        } else if (std::string_view("(),:.=").find(c) != std::string_view::npos) {
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw SyntaxError({{file, line, col}, "parse", "unexpected character '" + std::string(1, c) + "'"});
        }
        out.push_back(std::move(t));
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

const std::set<std::string> kReserved = {"def", "ctx", "in", "fun", "Pi", "Sigma"};

class Parser {
public:
    Parser(std::vector<Token> toks, std::string file, const DefScope& defs)
        : toks_(std::move(toks)), file_(std::move(file)), defs_(defs) {}

    std::vector<std::string> scope;

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::End; }
    bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Token::Sym && peek(k).text == s; }
    bool is_kw(const char* s) const { return peek().kind == Token::Ident && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
        const Token& t = at ? *at : peek();
        throw SyntaxError({{file_, t.line, t.col}, "parse", msg});
    }

    Loc loc() const { return {file_, peek().line, peek().col}; }

    void expect(const char* s) {
        if (!is_sym(s)) fail(std::string("expected '") + s + "'" + found());
        ++pos_;
    }

    std::string found() const {
        if (at_end()) return " before end of input";
        return ", found '" + peek().text + "'";
    }

    std::string ident() {
        if (peek().kind != Token::Ident || kReserved.count(peek().text)) fail("expected a name" + found());
        return toks_[pos_++].text;
    }

    void skip_to_decl(std::size_t start) {
        if (pos_ == start) ++pos_;
        while (!at_end() && !is_kw("def") && !is_kw("ctx")) ++pos_;
    }

    ExprPtr at(ExprPtr e, Loc l) {
        auto c = std::make_shared<Expr>(*e);
        c->loc = std::move(l);
        return c;
    }

    ExprPtr expr() {
        Loc l = loc();
        if (is_kw("fun") || is_kw("Pi") || is_kw("Sigma")) {
            std::string head = toks_[pos_++].text;
            auto bs = binders();
            if (head == "fun")
                expect("->");
            else
                expect(".");
            ExprPtr body = expr();
            scope.resize(scope.size() - bs.size());
            ExprKind k = head == "fun" ? ExprKind::Lam : head == "Pi" ? ExprKind::Pi : ExprKind::Sigma;
            for (auto it = bs.rbegin(); it != bs.rend(); ++it) body = at(mk(k, {it->type, body}, {it->name}), l);
            return body;
        }
        ExprPtr lhs = app();
        if (is_sym("->")) {
            ++pos_;
            scope.push_back("_");
            ExprPtr rhs = expr();
            scope.pop_back();
            return at(mk(ExprKind::Pi, {lhs, rhs}, {"_"}), l);
        }
        return lhs;
    }

    // (x y : A) (z : B) ...; the names stay in scope for the caller to pop.
    Telescope binders() {
        Telescope out;
        if (!is_sym("(")) fail("expected a binder '(x : A)'" + found());
        while (is_sym("(")) {
            ++pos_;
            std::vector<std::string> names{ident()};
            while (peek().kind == Token::Ident && !is_sym(":")) names.push_back(ident());
            expect(":");
            ExprPtr a = expr();
            expect(")");
            for (std::size_t i = 0; i < names.size(); ++i) {
                out.push_back({names[i], i == 0 ? a : shift(a, static_cast<int>(i))});
                scope.push_back(names[i]);
            }
        }
        return out;
    }

    bool starts_atom() const {
        const Token& t = peek();
        if (t.kind == Token::Number) return true;
        if (t.kind == Token::Sym) return t.text == "(";
        return t.kind == Token::Ident && !kReserved.count(t.text);
    }

    ExprPtr app() {
        Loc l = loc();
        ExprPtr f = atom();
        while (starts_atom()) f = at(mk(ExprKind::App, {f, atom()}), l);
        return f;
    }

    // A subterm binding k variables: either "x y . body" or a body that ignores them.
    ExprPtr bound(std::size_t k, std::vector<std::string>* names) {
        bool explicit_names = true;
        for (std::size_t i = 0; i < k; ++i)
            if (peek(i).kind != Token::Ident || kReserved.count(peek(i).text)) explicit_names = false;
        if (explicit_names && !is_sym(".", k)) explicit_names = false;
        if (explicit_names) {
            for (std::size_t i = 0; i < k; ++i) {
                names->push_back(toks_[pos_++].text);
                scope.push_back(names->back());
            }
            ++pos_;
            ExprPtr body = expr();
            scope.resize(scope.size() - k);
            return body;
        }
        for (std::size_t i = 0; i < k; ++i) names->push_back("_");
        return shift(expr(), static_cast<int>(k));
    }

    ExprPtr eliminator(ExprKind k, const std::vector<std::size_t>& binds, Loc l) {
        expect("(");
        std::vector<ExprPtr> kids;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < binds.size(); ++i) {
            if (i) expect(",");
            kids.push_back(binds[i] ? bound(binds[i], &names) : expr());
        }
        expect(")");
        return at(mk(k, std::move(kids), std::move(names)), l);
    }

    ExprPtr atom() {
        Loc l = loc();
        const Token& t = peek();
        if (t.kind == Token::Number) {
            ++pos_;
            unsigned long n = std::stoul(t.text);
            if (n > 100000) fail("numeral " + t.text + " is too large", &t);
            return at(mk_numeral(static_cast<unsigned>(n)), l);
        }
        if (is_sym("(")) {
            ++pos_;
            ExprPtr a = expr();
            if (is_sym(",")) {
                ++pos_;
                ExprPtr b = expr();
                expect(")");
                return at(mk(ExprKind::Pair, {a, b}), l);
            }
            expect(")");
            return a;
        }
        if (t.kind != Token::Ident || kReserved.count(t.text)) fail("expected a term" + found());
        std::string w = toks_[pos_++].text;
        if (w == "Unit") return at(mk(ExprKind::Unit), l);
        if (w == "Empty") return at(mk(ExprKind::Empty), l);
        if (w == "N") return at(mk(ExprKind::Nat), l);
        if (w == "star") return at(mk(ExprKind::Star), l);
        if (w == "zero") return at(mk(ExprKind::Zero), l);
        if (w == "U") {
            if (peek().kind != Token::Number) fail("expected a universe level after U" + found());
            return at(mk_univ(static_cast<unsigned>(std::stoul(toks_[pos_++].text))), l);
        }
        if (w.size() > 1 && w[0] == 'U' && std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(c); }))
            return at(mk_univ(static_cast<unsigned>(std::stoul(w.substr(1)))), l);
        if (w == "succ") return at(mk(ExprKind::Succ, {atom()}), l);
        if (w == "El") return at(mk(ExprKind::El, {atom()}), l);
        if (w == "En") return at(mk(ExprKind::En, {atom()}), l);
        if (w == "FSN") return at(mk(ExprKind::FSN, {atom()}), l);
        if (w == "refl") return at(mk(ExprKind::Refl, {atom()}), l);
        if (w == "Id") {
            ExprPtr a = atom();
            ExprPtr x = atom();
            ExprPtr y = atom();
            return at(mk(ExprKind::Id, {a, x, y}), l);
        }
        if (w == "R_1") return eliminator(ExprKind::R1, {1, 0, 0}, l);
        if (w == "R_0") return eliminator(ExprKind::R0, {1, 0}, l);
        if (w == "R_N") return eliminator(ExprKind::RN, {1, 0, 2, 0}, l);
        if (w == "R_S") return eliminator(ExprKind::RS, {1, 2, 0}, l);
        if (w == "R_Id") return eliminator(ExprKind::RId, {3, 1, 0, 0, 0}, l);
        for (std::size_t i = scope.size(); i-- > 0;)
            if (scope[i] == w && w != "_") return at(mk_var(static_cast<unsigned>(scope.size() - 1 - i), w), l);
        auto d = defs_.find(w);
        if (d != defs_.end()) return d->second;
        fail("unknown identifier '" + w + "'", &t);
    }

    std::size_t pos_ = 0;

private:
    std::vector<Token> toks_;
    std::string file_;
    const DefScope& defs_;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const std::vector<std::string>& scope, const DefScope& defs) {
    Parser p(lex(text, "<expr>"), "<expr>", defs);
    p.scope = scope;
    ExprPtr e = p.expr();
    if (!p.at_end()) p.fail("trailing input" + p.found());
    return e;
}

// ---------------------------------------------------------------- printing

namespace {

std::string fresh(std::string n, const std::vector<std::string>& scope) {
    if (n.empty() || n == "_") n = "x";
    while (std::find(scope.begin(), scope.end(), n) != scope.end()) n += "'";
    return n;
}

std::optional<unsigned> numeral_of(const ExprPtr& e) {
    unsigned n = 0;
    const Expr* cur = e.get();
    while (cur->kind == ExprKind::Succ) {
        ++n;
        cur = cur->kids[0].get();
    }
    if (cur->kind != ExprKind::Zero) return std::nullopt;
    return n;
}

std::string show(const ExprPtr& e, std::vector<std::string>& scope, int prec);

std::string show_bound(const ExprPtr& body, std::vector<std::string>& scope, const std::vector<std::string>& names,
                       std::size_t from, std::size_t k) {
    std::string head;
    std::vector<std::string> picked;
    for (std::size_t i = 0; i < k; ++i) {
        std::string n = fresh(from + i < names.size() ? names[from + i] : "x", scope);
        picked.push_back(n);
        scope.push_back(n);
        head += n + " ";
    }
    std::string s = head + ". " + show(body, scope, 0);
    scope.resize(scope.size() - k);
    return s;
}

std::string show(const ExprPtr& e, std::vector<std::string>& scope, int prec) {
    auto paren = [&](int p, std::string s) { return prec > p ? "(" + s + ")" : s; };
    auto kid = [&](std::size_t i, int p) { return show(e->kids[i], scope, p); };
    switch (e->kind) {
    case ExprKind::Var:
        if (e->index < scope.size()) return scope[scope.size() - 1 - e->index];
        return "#" + std::to_string(e->index);
    case ExprKind::Unit: return "Unit";
    case ExprKind::Empty: return "Empty";
    case ExprKind::Nat: return "N";
    case ExprKind::Univ: return "U" + std::to_string(e->level);
    case ExprKind::Star: return "star";
    case ExprKind::Zero: return "zero";
    case ExprKind::Succ:
        if (auto n = numeral_of(e)) return std::to_string(*n);
        return paren(1, "succ " + kid(0, 2));
    case ExprKind::El: return paren(1, "El " + kid(0, 2));
    case ExprKind::En: return paren(1, "En " + kid(0, 2));
    case ExprKind::FSN: return paren(1, "FSN " + kid(0, 2));
    case ExprKind::Refl: return paren(1, "refl " + kid(0, 2));
    case ExprKind::Id: return paren(1, "Id " + kid(0, 2) + " " + kid(1, 2) + " " + kid(2, 2));
    case ExprKind::App: return paren(1, kid(0, 1) + " " + kid(1, 2));
    case ExprKind::Pair: return "(" + kid(0, 0) + ", " + kid(1, 0) + ")";
    case ExprKind::Pi:
    case ExprKind::Sigma:
    case ExprKind::Lam: {
        std::string a = kid(0, 0);
        if (e->kind == ExprKind::Pi && !mentions_var(e->kids[1], 0)) {
            scope.push_back("_");
            std::string b = show(e->kids[1], scope, 0);
            scope.pop_back();
            return paren(0, show(e->kids[0], scope, 1) + " -> " + b);
        }
        std::string n = fresh(e->names.empty() ? "x" : e->names[0], scope);
        scope.push_back(n);
        std::string b = show(e->kids[1], scope, 0);
        scope.pop_back();
        const char* head = e->kind == ExprKind::Pi ? "Pi" : e->kind == ExprKind::Sigma ? "Sigma" : "fun";
        const char* sep = e->kind == ExprKind::Lam ? " -> " : " . ";
        return paren(0, std::string(head) + " (" + n + " : " + a + ")" + sep + b);
    }
    case ExprKind::R1:
    case ExprKind::R0:
    case ExprKind::RN:
    case ExprKind::RS:
    case ExprKind::RId: {
        const char* head = e->kind == ExprKind::R1   ? "R_1"
                           : e->kind == ExprKind::R0 ? "R_0"
                           : e->kind == ExprKind::RN ? "R_N"
                           : e->kind == ExprKind::RS ? "R_S"
                                                     : "R_Id";
        std::string s = std::string(head) + "(";
        std::size_t used = 0;
        for (std::size_t i = 0; i < e->kids.size(); ++i) {
            if (i) s += ", ";
            if (unsigned k = binders_of(e->kind, i)) {
                s += show_bound(e->kids[i], scope, e->names, used, k);
                used += k;
            } else {
                s += kid(i, 0);
            }
        }
        return s + ")";
    }
    }
    return "?";
}

}  // namespace

std::string pretty(const ExprPtr& e, std::vector<std::string> scope) { return show(e, scope, 0); }

std::string pretty(const Telescope& t) {
    std::vector<std::string> scope;
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ", ";
        std::string n = fresh(t[i].name, scope);
        s += n + " : " + show(t[i].type, scope, 0);
        scope.push_back(n);
    }
    return s + ")";
}

// ---------------------------------------------------------------- programs

const Decl* Program::find(const std::string& name) const {
    for (auto it = defs.rbegin(); it != defs.rend(); ++it)
        if (it->name == name) return &*it;
    return nullptr;
}

Program load_program(std::string_view text, const std::string& file) {
    Program prog;
    DefScope closed;
    std::vector<Token> toks;
    try {
        toks = lex(text, file);
    } catch (const SyntaxError& e) {
        prog.diagnostics.push_back(e.diagnostic());
        return prog;
    }
    Parser p(std::move(toks), file, closed);
    while (!p.at_end()) {
        Loc where = p.loc();
        std::size_t start = p.pos_;
        try {
            if (p.is_kw("ctx")) {
                ++p.pos_;
                std::string name = p.ident();
                p.expect("=");
                p.expect("(");
                Telescope tel;
                p.scope.clear();
                while (!p.is_sym(")")) {
                    if (!tel.empty()) p.expect(",");
                    std::string x = p.ident();
                    p.expect(":");
                    tel.push_back({x, p.expr()});
                    p.scope.push_back(x);
                }
                p.expect(")");
                p.scope.clear();
                check_ctx(tel);
                prog.contexts[name] = tel;
                continue;
            }
            if (!p.is_kw("def")) p.fail("expected 'def' or 'ctx'" + p.found());
            ++p.pos_;
            Decl d;
            d.loc = where;
            d.name = p.ident();
            p.scope.clear();
            if (p.is_sym("(")) d.ctx = p.binders();
            if (p.is_kw("in")) {
                ++p.pos_;
                if (!d.ctx.empty()) p.fail("a definition takes either binders or 'in', not both");
                std::string c = p.ident();
                auto it = prog.contexts.find(c);
                if (it == prog.contexts.end()) p.fail("unknown context '" + c + "'");
                d.ctx = it->second;
                for (const auto& b : d.ctx) p.scope.push_back(b.name);
            }
            p.expect(":");
            d.type = p.expr();
            p.expect("=");
            d.term = p.expr();
            p.scope.clear();
            check_ctx(d.ctx);
            d.rank = check_type(d.ctx, d.type).rank;
            d.deriv = check(d.ctx, d.term, d.type);
            if (d.ctx.empty()) closed[d.name] = d.term;
            prog.defs.push_back(std::move(d));
        } catch (const SyntaxError& e) {
            prog.diagnostics.push_back(e.diagnostic());
            p.scope.clear();
            p.skip_to_decl(start);
        }
    }
    return prog;
}

Program load_program_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_program(ss.str(), path);
}

}  // namespace ludic
