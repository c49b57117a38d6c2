#include "ludic/strategy.hpp"

#include <algorithm>

namespace ludic {

std::string to_string(const Response& r) {
    switch (r.kind) {
    case ResponseKind::Move: {
        std::string s = to_string(r.occ.move);
        if (r.occ.just) s += "@" + std::to_string(*r.occ.just);
        return s;
    }
    case ResponseKind::None: return "(no response)";
    case ResponseKind::Diverge: return "(diverges)";
    }
    return "?";
}

namespace {

class TableStrategy : public Strategy {
public:
    explicit TableStrategy(StrategyTable t) : t_(std::move(t)) {}
    Response respond(const Position& s) const override {
        if (!t_.plays.count(s)) return Response::none();
        auto r = t_.respond(s);
        return r ? Response::move(*r) : Response::none();
    }
    std::string describe() const override { return "table strategy (" + std::to_string(t_.plays.size()) + " plays)"; }

private:
    StrategyTable t_;
};

class FunctionStrategy : public Strategy {
public:
    FunctionStrategy(std::function<Response(const Position&)> f, std::string name) : f_(std::move(f)), name_(std::move(name)) {}
    Response respond(const Position& s) const override { return f_(s); }
    std::string describe() const override { return name_; }

private:
    std::function<Response(const Position&)> f_;
    std::string name_;
};

std::optional<unsigned long> numeral_of(const Move& m) {
    if (m.ident.empty() || m.rank != 0) return std::nullopt;
    if (!std::all_of(m.ident.begin(), m.ident.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
    if (m.ident.size() > 18) return std::nullopt;
    return std::stoul(m.ident);
}

// Unary function on N -o N: ask the argument, then answer f(n).
StrategyPtr unary(std::function<unsigned long(unsigned long)> f, std::string name) {
    return function_strategy(
        [f](const Position& s) {
            const Move rq{"q", 0, "R"}, lq{"q", 0, "L"};
            if (s.size() == 1 && s[0].move == rq) return Response::move({lq, 0});
            if (s.size() == 3 && s[0].move == rq && s[1].move == lq && s[2].move.path == "L" && s[2].just == std::size_t{1}) {
                auto n = numeral_of(untag(s[2].move));
                if (!n) return Response::none();
                return Response::move({Move{std::to_string(f(*n)), 0, "R"}, 0});
            }
            return Response::none();
        },
        std::move(name));
}

// Picks the rule whose prefix is longest among those matching m on the given side.
const std::pair<std::string, std::string>* match_rule(const std::vector<std::pair<std::string, std::string>>& rules,
                                                      const Move& m, bool first) {
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& r : rules) {
        const auto& p = first ? r.first : r.second;
        if (has_prefix(m, p) && (!best || p.size() > (first ? best->first : best->second).size())) best = &r;
    }
    return best;
}

std::optional<Move> copy_move(const std::vector<std::pair<std::string, std::string>>& rules, const Move& m) {
    auto a = match_rule(rules, m, true);
    auto b = match_rule(rules, m, false);
    if (a && (!b || a->first.size() >= b->second.size())) return retag(m, a->first, a->second);
    if (b) return retag(m, b->second, b->first);
    return std::nullopt;
}

class RetagCopyCat : public Strategy {
public:
    RetagCopyCat(std::vector<std::pair<std::string, std::string>> rules, std::string name)
        : rules_(std::move(rules)), name_(std::move(name)) {}

    Response respond(const Position& s) const override {
        if (s.size() % 2 == 0) return Response::none();
        // earlier pairs must already be copies of each other
        for (std::size_t k = 0; k + 1 < s.size(); k += 2) {
            auto c = copy_move(rules_, s[k].move);
            if (!c || !(*c == s[k + 1].move)) return Response::none();
            auto expect = s[k].just ? std::optional<std::size_t>(*s[k].just ^ 1u) : std::optional<std::size_t>(k);
            if (s[k + 1].just != expect) return Response::none();
        }
        std::size_t n = s.size() - 1;
        auto c = copy_move(rules_, s[n].move);
        if (!c) return Response::none();
        std::size_t j = s[n].just ? (*s[n].just ^ 1u) : n;
        return Response::move({*c, j});
    }
    std::string describe() const override { return name_; }

private:
    std::vector<std::pair<std::string, std::string>> rules_;
    std::string name_;
};

std::optional<Move> apply_rules(const std::vector<RetagRule>& rules, const Move& m, bool to_inner) {
    const RetagRule* best = nullptr;
    for (const auto& r : rules) {
        const auto& p = to_inner ? r.outer : r.inner;
        if (has_prefix(m, p) && (!best || p.size() > (to_inner ? best->outer : best->inner).size())) best = &r;
    }
    if (!best) return std::nullopt;
    return to_inner ? retag(m, best->outer, best->inner) : retag(m, best->inner, best->outer);
}

class RetagStrategy : public Strategy {
public:
    RetagStrategy(StrategyPtr inner, std::vector<RetagRule> rules, std::string name)
        : inner_(std::move(inner)), rules_(std::move(rules)), name_(std::move(name)) {}
    Response respond(const Position& s) const override {
        Position t = s;
        for (auto& o : t) {
            auto m = apply_rules(rules_, o.move, true);
            if (!m) return Response::none();
            o.move = *m;
        }
        auto r = inner_->respond(t);
        if (!r.defined()) return r;
        auto m = apply_rules(rules_, r.occ.move, false);
        if (!m) return Response::none();
        r.occ.move = *m;
        return r;
    }
    std::string describe() const override { return name_ + "(" + inner_->describe() + ")"; }

private:
    StrategyPtr inner_;
    std::vector<RetagRule> rules_;
    std::string name_;
};

// Runs `inner` on the occurrences selected by `keep`, renamed by `in`; maps the answer back with `out`.
Response delegate(const Strategy& inner, const Position& s, const std::vector<bool>& keep,
                  const std::function<std::optional<Move>(const Move&)>& in,
                  const std::function<std::optional<Move>(const Move&)>& out) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (keep[i]) idx.push_back(i);
    Position t = restrict_positions(s, keep);
    for (auto& o : t) {
        auto m = in(o.move);
        if (!m) return Response::none();
        o.move = *m;
    }
    auto r = inner.respond(t);
    if (!r.defined()) return r;
    auto m = out(r.occ.move);
    if (!m) return Response::none();
    Occ o{*m, std::nullopt};
    if (r.occ.just) {
        if (*r.occ.just >= idx.size()) return Response::none();
        o.just = idx[*r.occ.just];
    }
    return Response::move(o);
}

class Pairing : public Strategy {
public:
    Pairing(StrategyPtr a, StrategyPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    Response respond(const Position& s) const override {
        if (s.empty()) return Response::none();
        std::string side;
        if (has_prefix(s[0].move, "R.L"))
            side = "R.L";
        else if (has_prefix(s[0].move, "R.R"))
            side = "R.R";
        else
            return Response::none();
        const Strategy& inner = side == "R.L" ? *a_ : *b_;
        std::vector<bool> keep(s.size(), true);
        auto in = [&](const Move& m) -> std::optional<Move> {
            if (has_prefix(m, "L")) return m;
            return retag(m, side, "R");
        };
        auto out = [&](const Move& m) -> std::optional<Move> {
            if (has_prefix(m, "L")) return m;
            return retag(m, "R", side);
        };
        return delegate(inner, s, keep, in, out);
    }
    std::string describe() const override { return "<" + a_->describe() + ", " + b_->describe() + ">"; }

private:
    StrategyPtr a_, b_;
};

class TensorStrategy : public Strategy {
public:
    TensorStrategy(StrategyPtr a, StrategyPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    Response respond(const Position& s) const override {
        if (s.empty()) return Response::none();
        const Move& last = s.back().move;
        bool left = has_prefix(last, "L.L") || has_prefix(last, "R.L");
        bool right = has_prefix(last, "L.R") || has_prefix(last, "R.R");
        if (!left && !right) return Response::none();
        std::string dom = left ? "L.L" : "L.R", cod = left ? "R.L" : "R.R";
        std::vector<bool> keep(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) keep[i] = has_prefix(s[i].move, dom) || has_prefix(s[i].move, cod);
        auto in = [&](const Move& m) -> std::optional<Move> {
            if (has_prefix(m, dom)) return retag(m, dom, "L");
            return retag(m, cod, "R");
        };
        auto out = [&](const Move& m) -> std::optional<Move> {
            if (has_prefix(m, "L")) return retag(m, "L", dom);
            return retag(m, "R", cod);
        };
        return delegate(left ? *a_ : *b_, s, keep, in, out);
    }
    std::string describe() const override { return "(" + a_->describe() + " (x) " + b_->describe() + ")"; }

private:
    StrategyPtr a_, b_;
};

class Promotion : public Strategy {
public:
    explicit Promotion(StrategyPtr a) : a_(std::move(a)) {}
    Response respond(const Position& s) const override {
        if (s.empty()) return Response::none();
        std::size_t r = root_of(s, s.size() - 1);
        std::vector<bool> keep(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) keep[i] = root_of(s, i) == r;
        auto id = [](const Move& m) -> std::optional<Move> { return m; };
        return delegate(*a_, s, keep, id, id);
    }
    std::string describe() const override { return a_->describe() + "^+"; }

private:
    StrategyPtr a_;
};

}  // namespace

StrategyPtr table_strategy(StrategyTable t) { return std::make_shared<TableStrategy>(std::move(t)); }

StrategyPtr function_strategy(std::function<Response(const Position&)> f, std::string name) {
    return std::make_shared<FunctionStrategy>(std::move(f), std::move(name));
}

StrategyPtr bottom_strategy() {
    static StrategyPtr b = function_strategy([](const Position&) { return Response::none(); }, "bottom");
    return b;
}

StrategyPtr answer_strategy(Move m) {
    auto name = to_string(m);
    return function_strategy(
        [m](const Position& s) { return s.size() == 1 ? Response::move({m, 0}) : Response::none(); }, name);
}

StrategyPtr numeral(unsigned long n) { return answer_strategy(Move{std::to_string(n), 0, ""}); }

StrategyPtr succ_strategy() { return unary([](unsigned long n) { return n + 1; }, "succ"); }
StrategyPtr double_strategy() { return unary([](unsigned long n) { return 2 * n; }, "double"); }
StrategyPtr strict_zero_strategy() { return unary([](unsigned long) { return 0ul; }, "strict-zero"); }

StrategyPtr retag_copycat(std::vector<std::pair<std::string, std::string>> rules, std::string name) {
    return std::make_shared<RetagCopyCat>(std::move(rules), std::move(name));
}

StrategyPtr copy_cat() {
    static StrategyPtr c = retag_copycat({{"R", "L"}}, "cp");
    return c;
}

StrategyPtr dereliction() {
    static StrategyPtr d = retag_copycat({{"R", "L"}}, "der");
    return d;
}

StrategyPtr retag_strategy(StrategyPtr inner, std::vector<RetagRule> rules, std::string name) {
    return std::make_shared<RetagStrategy>(std::move(inner), std::move(rules), std::move(name));
}

StrategyPtr pairing(StrategyPtr sigma, StrategyPtr tau) { return std::make_shared<Pairing>(std::move(sigma), std::move(tau)); }

StrategyPtr tensor_strategies(StrategyPtr sigma, StrategyPtr tau) {
    return std::make_shared<TensorStrategy>(std::move(sigma), std::move(tau));
}

StrategyPtr promotion(StrategyPtr sigma) { return std::make_shared<Promotion>(std::move(sigma)); }

}  // namespace ludic
