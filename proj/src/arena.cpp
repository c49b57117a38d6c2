#include "ludic/arena.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ludic {

MoveLabel flip(MoveLabel l) {
    return {l.polarity == Polarity::O ? Polarity::P : Polarity::O, l.kind};
}

std::string to_string(MoveLabel l) {
    std::string s = l.polarity == Polarity::O ? "O" : "P";
    s += l.kind == Kind::Q ? "Q" : "A";
    return s;
}

std::vector<std::string> Move::tag_path() const {
    std::vector<std::string> out;
    if (path.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto dot = path.find('.', start);
        out.push_back(path.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

std::string Move::head() const {
    auto dot = path.find('.');
    return path.substr(0, dot);
}

Move tag(std::string_view t, const Move& m) {
    Move r = m;
    if (t.empty()) return r;
    r.path = m.path.empty() ? std::string(t) : std::string(t) + "." + m.path;
    return r;
}

Move untag(const Move& m) {
    Move r = m;
    auto dot = m.path.find('.');
    r.path = dot == std::string::npos ? std::string() : m.path.substr(dot + 1);
    return r;
}

bool has_prefix(const Move& m, std::string_view prefix) {
    if (prefix.empty()) return true;
    if (m.path.size() < prefix.size()) return false;
    if (m.path.compare(0, prefix.size(), prefix) != 0) return false;
    return m.path.size() == prefix.size() || m.path[prefix.size()] == '.';
}

std::optional<Move> retag(const Move& m, std::string_view from, std::string_view to) {
    if (!has_prefix(m, from)) return std::nullopt;
    std::string rest = from.empty() ? m.path
                       : m.path.size() == from.size() ? std::string()
                                                      : m.path.substr(from.size() + 1);
    Move r = m;
    if (to.empty())
        r.path = rest;
    else
        r.path = rest.empty() ? std::string(to) : std::string(to) + "." + rest;
    return r;
}

std::string to_string(const Move& m) {
    std::string s = m.path.empty() ? m.ident : m.path + "." + m.ident;
    if (m.rank > 0) s += ":" + std::to_string(m.rank);
    return s;
}

Move parse_move(std::string_view text) {
    Move m;
    std::string t(text);
    auto colon = t.rfind(':');
    if (colon != std::string::npos) {
        m.rank = static_cast<unsigned>(std::stoul(t.substr(colon + 1)));
        t = t.substr(0, colon);
    }
    auto dot = t.rfind('.');
    if (dot == std::string::npos) {
        m.ident = t;
    } else {
        m.ident = t.substr(dot + 1);
        m.path = t.substr(0, dot);
    }
    if (m.ident.empty()) throw Error("empty move identifier in '" + std::string(text) + "'");
    return m;
}

bool PositionLess::operator()(const Position& a, const Position& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::string to_string(const Position& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << to_string(s[i].move);
        if (s[i].just) out << '@' << *s[i].just;
    }
    return out.str();
}

std::string key_of(const Position& s) {
    std::string k;
    for (const auto& o : s) {
        k += o.move.ident;
        k += '\x1f';
        k += std::to_string(o.move.rank);
        k += '\x1f';
        k += o.move.path;
        k += '\x1f';
        if (o.just) k += std::to_string(*o.just);
        k += '\x1e';
    }
    return k;
}

nlohmann::json to_json(const Move& m) {
    return {{"ident", m.ident}, {"rank", m.rank}, {"tag_path", m.tag_path()}};
}

Move move_from_json(const nlohmann::json& j) {
    Move m;
    m.ident = j.at("ident").get<std::string>();
    m.rank = j.value("rank", 0u);
    std::string path;
    for (const auto& t : j.value("tag_path", std::vector<std::string>{})) {
        if (!path.empty()) path += '.';
        path += t;
    }
    m.path = path;
    return m;
}

nlohmann::json to_json(const Position& s) {
    auto arr = nlohmann::json::array();
    for (const auto& o : s) {
        auto j = to_json(o.move);
        j["justifier"] = o.just ? nlohmann::json(*o.just) : nlohmann::json(nullptr);
        arr.push_back(j);
    }
    return arr;
}

Position position_from_json(const nlohmann::json& j) {
    Position s;
    for (const auto& e : j) {
        Occ o{move_from_json(e), std::nullopt};
        if (e.contains("justifier") && !e["justifier"].is_null()) o.just = e["justifier"].get<std::size_t>();
        s.push_back(o);
    }
    return s;
}

std::vector<Move> Arena::enumerate(unsigned alphabet) const {
    std::set<Move> seen;
    std::vector<Move> order;
    std::vector<Move> work = initial_moves(alphabet);
    while (!work.empty()) {
        Move m = work.back();
        work.pop_back();
        if (!seen.insert(m).second) continue;
        order.push_back(m);
        for (auto& n : enabled_by(m, alphabet))
            if (!seen.count(n)) work.push_back(n);
    }
    std::sort(order.begin(), order.end());
    return order;
}

// ---------------------------------------------------------------- answer sets

static bool is_numeral(const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

AnswerSet AnswerSet::naturals() {
    AnswerSet a;
    a.member = [](const Move& m) { return m.rank == 0 && m.path.empty() && is_numeral(m.ident); };
    a.list = [](unsigned alphabet) {
        std::vector<Move> out;
        for (unsigned i = 0; i < alphabet; ++i) out.push_back(Move{std::to_string(i), 0, ""});
        return out;
    };
    a.rank_sup = 0;
    a.text = "N";
    return a;
}

AnswerSet AnswerSet::finite(std::vector<std::string> idents) {
    std::vector<Move> ms;
    for (auto& i : idents) ms.push_back(Move{i, 0, ""});
    auto a = moves(ms);
    std::string text = "{";
    for (std::size_t i = 0; i < idents.size(); ++i) text += (i ? "," : "") + idents[i];
    a.text = text + "}";
    return a;
}

AnswerSet AnswerSet::moves(std::vector<Move> ms) {
    auto set = std::make_shared<std::set<Move>>(ms.begin(), ms.end());
    AnswerSet a;
    a.member = [set](const Move& m) { return set->count(m) > 0; };
    a.list = [set](unsigned) { return std::vector<Move>(set->begin(), set->end()); };
    if (!ms.empty()) {
        unsigned r = 0;
        for (auto& m : ms) r = std::max(r, m.rank);
        a.rank_sup = r;
    }
    a.text = "{" + std::to_string(ms.size()) + " moves}";
    return a;
}

// ---------------------------------------------------------------- arenas

namespace {

const Move kQuestion{"q", 0, ""};

class TerminalArena : public Arena {
public:
    bool contains(const Move&) const override { return false; }
    MoveLabel label(const Move& m) const override { throw Error("terminal arena has no move " + to_string(m)); }
    bool initial(const Move&) const override { return false; }
    bool enables(const Move&, const Move&) const override { return false; }
    std::vector<Move> initial_moves(unsigned) const override { return {}; }
    std::vector<Move> enabled_by(const Move&, unsigned) const override { return {}; }
    std::optional<unsigned> rank_sup() const override { return std::nullopt; }
    std::string describe() const override { return "I"; }
};

class FlatArena : public Arena {
public:
    explicit FlatArena(AnswerSet a) : answers_(std::move(a)) {}
    bool contains(const Move& m) const override { return m == kQuestion || answers_.member(m); }
    MoveLabel label(const Move& m) const override {
        if (m == kQuestion) return OQ;
        if (answers_.member(m)) return PA;
        throw Error("flat arena has no move " + to_string(m));
    }
    bool initial(const Move& m) const override { return m == kQuestion; }
    bool enables(const Move& m, const Move& n) const override { return m == kQuestion && answers_.member(n); }
    std::vector<Move> initial_moves(unsigned) const override { return {kQuestion}; }
    std::vector<Move> enabled_by(const Move& m, unsigned alphabet) const override {
        if (m == kQuestion) return answers_.list(alphabet);
        return {};
    }
    std::optional<unsigned> rank_sup() const override { return std::max(0u, answers_.rank_sup.value_or(0)); }
    std::string describe() const override { return "flat" + answers_.text; }

private:
    AnswerSet answers_;
};

std::optional<unsigned> max_rank(std::optional<unsigned> a, std::optional<unsigned> b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

class TensorArena : public Arena {
public:
    TensorArena(ArenaPtr a, ArenaPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    bool contains(const Move& m) const override {
        auto h = m.head();
        if (h == "L") return a_->contains(untag(m));
        if (h == "R") return b_->contains(untag(m));
        return false;
    }
    MoveLabel label(const Move& m) const override { return side(m).label(untag(m)); }
    bool initial(const Move& m) const override { return contains(m) && side(m).initial(untag(m)); }
    bool enables(const Move& m, const Move& n) const override {
        if (m.head() != n.head() || !contains(m) || !contains(n)) return false;
        return side(m).enables(untag(m), untag(n));
    }
    std::vector<Move> initial_moves(unsigned alphabet) const override {
        std::vector<Move> out;
        for (auto& m : a_->initial_moves(alphabet)) out.push_back(tag("L", m));
        for (auto& m : b_->initial_moves(alphabet)) out.push_back(tag("R", m));
        return out;
    }
    std::vector<Move> enabled_by(const Move& m, unsigned alphabet) const override {
        std::vector<Move> out;
        if (!contains(m)) return out;
        auto h = m.head();
        for (auto& n : side(m).enabled_by(untag(m), alphabet)) out.push_back(tag(h, n));
        return out;
    }
    std::optional<unsigned> rank_sup() const override { return max_rank(a_->rank_sup(), b_->rank_sup()); }
    std::string describe() const override { return "(" + a_->describe() + " x " + b_->describe() + ")"; }

private:
    const Arena& side(const Move& m) const {
        auto h = m.head();
        if (h == "L") return *a_;
        if (h == "R") return *b_;
        throw Error("move " + to_string(m) + " carries no L/R tag");
    }
    ArenaPtr a_, b_;
};

class LollipopArena : public Arena {
public:
    LollipopArena(ArenaPtr a, ArenaPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    bool contains(const Move& m) const override {
        auto h = m.head();
        if (h == "L") return a_->contains(untag(m));
        if (h == "R") return b_->contains(untag(m));
        return false;
    }
    MoveLabel label(const Move& m) const override {
        auto h = m.head();
        if (h == "L") return flip(a_->label(untag(m)));
        if (h == "R") return b_->label(untag(m));
        throw Error("move " + to_string(m) + " carries no L/R tag");
    }
    bool initial(const Move& m) const override { return m.head() == "R" && b_->contains(untag(m)) && b_->initial(untag(m)); }
    bool enables(const Move& m, const Move& n) const override {
        auto hm = m.head(), hn = n.head();
        if (hm == "L" && hn == "L") return a_->contains(untag(m)) && a_->contains(untag(n)) && a_->enables(untag(m), untag(n));
        if (hm == "R" && hn == "R") return b_->contains(untag(m)) && b_->contains(untag(n)) && b_->enables(untag(m), untag(n));
        if (hm == "R" && hn == "L") return initial(m) && a_->contains(untag(n)) && a_->initial(untag(n));
        return false;
    }
    std::vector<Move> initial_moves(unsigned alphabet) const override {
        std::vector<Move> out;
        for (auto& m : b_->initial_moves(alphabet)) out.push_back(tag("R", m));
        return out;
    }
    std::vector<Move> enabled_by(const Move& m, unsigned alphabet) const override {
        std::vector<Move> out;
        auto h = m.head();
        if (h == "L") {
            if (!a_->contains(untag(m))) return out;
            for (auto& n : a_->enabled_by(untag(m), alphabet)) out.push_back(tag("L", n));
        } else if (h == "R") {
            if (!b_->contains(untag(m))) return out;
            for (auto& n : b_->enabled_by(untag(m), alphabet)) out.push_back(tag("R", n));
            if (b_->initial(untag(m)))
                for (auto& n : a_->initial_moves(alphabet)) out.push_back(tag("L", n));
        }
        return out;
    }
    std::optional<unsigned> rank_sup() const override { return max_rank(a_->rank_sup(), b_->rank_sup()); }
    std::string describe() const override { return "(" + a_->describe() + " -o " + b_->describe() + ")"; }

private:
    ArenaPtr a_, b_;
};

class UnionArena : public Arena {
public:
    explicit UnionArena(std::vector<ArenaPtr> parts) : parts_(std::move(parts)) {}
    bool contains(const Move& m) const override {
        return std::any_of(parts_.begin(), parts_.end(), [&](auto& p) { return p->contains(m); });
    }
    MoveLabel label(const Move& m) const override {
        for (auto& p : parts_)
            if (p->contains(m)) return p->label(m);
        throw Error("union arena has no move " + to_string(m));
    }
    bool initial(const Move& m) const override {
        return std::any_of(parts_.begin(), parts_.end(), [&](auto& p) { return p->contains(m) && p->initial(m); });
    }
    bool enables(const Move& m, const Move& n) const override {
        return std::any_of(parts_.begin(), parts_.end(),
                           [&](auto& p) { return p->contains(m) && p->contains(n) && p->enables(m, n); });
    }
    std::vector<Move> initial_moves(unsigned alphabet) const override {
        std::set<Move> out;
        for (auto& p : parts_)
            for (auto& m : p->initial_moves(alphabet)) out.insert(m);
        return {out.begin(), out.end()};
    }
    std::vector<Move> enabled_by(const Move& m, unsigned alphabet) const override {
        std::set<Move> out;
        for (auto& p : parts_)
            if (p->contains(m))
                for (auto& n : p->enabled_by(m, alphabet)) out.insert(n);
        return {out.begin(), out.end()};
    }
    std::optional<unsigned> rank_sup() const override {
        std::optional<unsigned> r;
        for (auto& p : parts_) r = max_rank(r, p->rank_sup());
        return r;
    }
    std::string describe() const override {
        std::string s = "union(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? ", " : "") + parts_[i]->describe();
        return s + ")";
    }

private:
    std::vector<ArenaPtr> parts_;
};

}  // namespace

ArenaPtr terminal_arena() {
    static ArenaPtr t = std::make_shared<TerminalArena>();
    return t;
}
ArenaPtr flat_arena(AnswerSet answers) { return std::make_shared<FlatArena>(std::move(answers)); }
ArenaPtr tensor_arena(ArenaPtr a, ArenaPtr b) { return std::make_shared<TensorArena>(std::move(a), std::move(b)); }
ArenaPtr lollipop_arena(ArenaPtr a, ArenaPtr b) { return std::make_shared<LollipopArena>(std::move(a), std::move(b)); }
ArenaPtr union_arena(std::vector<ArenaPtr> parts) { return std::make_shared<UnionArena>(std::move(parts)); }

// ---------------------------------------------------------------- finite arenas

FiniteArena::FiniteArena(std::vector<Entry> entries, std::vector<std::pair<Move, Move>> enabling)
    : entries_(std::move(entries)), enabling_(std::move(enabling)) {
    std::sort(entries_.begin(), entries_.end(), [](auto& a, auto& b) { return a.move < b.move; });
    entries_.erase(std::unique(entries_.begin(), entries_.end(), [](auto& a, auto& b) { return a.move == b.move; }),
                   entries_.end());
    std::sort(enabling_.begin(), enabling_.end());
    enabling_.erase(std::unique(enabling_.begin(), enabling_.end()), enabling_.end());
}

const FiniteArena::Entry* FiniteArena::find(const Move& m) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), m, [](const Entry& e, const Move& x) { return e.move < x; });
    if (it == entries_.end() || it->move != m) return nullptr;
    return &*it;
}

bool FiniteArena::contains(const Move& m) const { return find(m) != nullptr; }

MoveLabel FiniteArena::label(const Move& m) const {
    if (auto e = find(m)) return e->label;
    throw Error("arena has no move " + to_string(m));
}

bool FiniteArena::initial(const Move& m) const {
    auto e = find(m);
    return e && e->initial;
}

bool FiniteArena::enables(const Move& m, const Move& n) const {
    return std::binary_search(enabling_.begin(), enabling_.end(), std::make_pair(m, n));
}

std::vector<Move> FiniteArena::initial_moves(unsigned) const {
    std::vector<Move> out;
    for (auto& e : entries_)
        if (e.initial) out.push_back(e.move);
    return out;
}

std::vector<Move> FiniteArena::enabled_by(const Move& m, unsigned) const {
    std::vector<Move> out;
    auto lo = std::lower_bound(enabling_.begin(), enabling_.end(), m, [](auto& p, const Move& x) { return p.first < x; });
    for (; lo != enabling_.end() && lo->first == m; ++lo) out.push_back(lo->second);
    return out;
}

std::optional<unsigned> FiniteArena::rank_sup() const {
    std::optional<unsigned> r;
    for (auto& e : entries_) r = max_rank(r, e.move.rank);
    return r;
}

std::string FiniteArena::describe() const { return "finite arena (" + std::to_string(entries_.size()) + " moves)"; }

// ---------------------------------------------------------------- validation

std::vector<std::string> validate_arena(const Arena& a, unsigned alphabet) {
    std::vector<std::string> out;
    auto moves = a.enumerate(alphabet);
    for (auto& m : moves) {
        if (a.initial(m)) {
            if (a.label(m) != OQ) out.push_back("E1: initial move " + to_string(m) + " is not OQ");
            for (auto& x : moves)
                if (a.enables(x, m)) out.push_back("E1: initial move " + to_string(m) + " is enabled by " + to_string(x));
        }
        for (auto& n : a.enabled_by(m, alphabet)) {
            if (!a.contains(n)) continue;
            if (a.label(n).kind == Kind::A && a.label(m).kind != Kind::Q)
                out.push_back("E2: answer " + to_string(n) + " enabled by non-question " + to_string(m));
            if (a.label(m).polarity == a.label(n).polarity)
                out.push_back("E3: " + to_string(m) + " enables " + to_string(n) + " of the same polarity");
        }
    }
    return out;
}

static bool justified_impl(const Arena& a, const Position& s, bool relaxed, std::string* why) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& o = s[i];
        if (!a.contains(o.move)) {
            if (why) *why = "move " + to_string(o.move) + " at " + std::to_string(i) + " is not in the arena";
            return false;
        }
        if (o.just) {
            if (*o.just >= i) {
                if (why) *why = "justifier of occurrence " + std::to_string(i) + " is not earlier";
                return false;
            }
            if (!a.enables(s[*o.just].move, o.move)) {
                if (why) *why = "occurrence " + std::to_string(i) + " is not enabled by its justifier";
                return false;
            }
        } else if (!a.initial(o.move) && !relaxed) {
            if (why) *why = "non-initial occurrence " + std::to_string(i) + " has no justifier";
            return false;
        }
    }
    return true;
}

bool is_justified(const Arena& a, const Position& s, std::string* why) { return justified_impl(a, s, false, why); }
bool is_justified_relaxed(const Arena& a, const Position& s, std::string* why) { return justified_impl(a, s, true, why); }

std::vector<std::size_t> p_view_indices(const Arena& a, const Position& s, std::size_t len) {
    std::vector<std::size_t> rev;
    std::size_t n = len;
    while (n > 0) {
        std::size_t i = n - 1;
        const auto& o = s[i];
        if (a.label(o.move).polarity == Polarity::P) {
            rev.push_back(i);
            n = i;
        } else if (!o.just || a.initial(o.move)) {
            rev.push_back(i);
            break;
        } else {
            rev.push_back(i);
            n = *o.just + 1;
            // the justifier itself is a P-move and is appended by the next round
        }
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<std::size_t> o_view_indices(const Arena& a, const Position& s, std::size_t len) {
    std::vector<std::size_t> rev;
    std::size_t n = len;
    while (n > 0) {
        std::size_t i = n - 1;
        const auto& o = s[i];
        rev.push_back(i);
        if (a.label(o.move).polarity == Polarity::O || !o.just)
            n = i;
        else
            n = *o.just + 1;
    }
    return {rev.rbegin(), rev.rend()};
}

static Position view_of(const Position& s, const std::vector<std::size_t>& idx) {
    std::map<std::size_t, std::size_t> where;
    for (std::size_t k = 0; k < idx.size(); ++k) where[idx[k]] = k;
    Position v;
    for (auto i : idx) {
        Occ o = s[i];
        if (o.just) {
            auto it = where.find(*o.just);
            o.just = it == where.end() ? std::nullopt : std::optional<std::size_t>(it->second);
        }
        v.push_back(o);
    }
    return v;
}

Position p_view(const Arena& a, const Position& s) { return view_of(s, p_view_indices(a, s, s.size())); }
Position o_view(const Arena& a, const Position& s) { return view_of(s, o_view_indices(a, s, s.size())); }

static LegalityReport check_at(const Arena& a, const Position& s, std::size_t i) {
    LegalityReport r;
    r.at = i;
    const auto& o = s[i];
    if (!a.contains(o.move)) {
        r.failure = LegalityFailure::Justification;
        r.reason = "move " + to_string(o.move) + " is not in the arena";
        return r;
    }
    if (o.just) {
        if (*o.just >= i || !a.enables(s[*o.just].move, o.move)) {
            r.failure = LegalityFailure::Justification;
            r.reason = "occurrence " + std::to_string(i) + " (" + to_string(o.move) + ") is not enabled by its justifier";
            return r;
        }
    } else if (!a.initial(o.move)) {
        r.failure = LegalityFailure::Justification;
        r.reason = "non-initial move " + to_string(o.move) + " needs a justifier";
        return r;
    }
    auto pol = a.label(o.move).polarity;
    if ((i == 0 && pol != Polarity::O) || (i > 0 && a.label(s[i - 1].move).polarity == pol)) {
        r.failure = LegalityFailure::Alternation;
        r.reason = "occurrence " + std::to_string(i) + " breaks alternation";
        return r;
    }
    if (o.just) {
        auto view = pol == Polarity::P ? p_view_indices(a, s, i) : o_view_indices(a, s, i);
        if (!std::binary_search(view.begin(), view.end(), *o.just)) {
            r.failure = LegalityFailure::Visibility;
            r.reason = "justifier " + std::to_string(*o.just) + " of occurrence " + std::to_string(i) + " is not in the " +
                       (pol == Polarity::P ? "P-view" : "O-view");
            return r;
        }
    }
    return r;
}

LegalityReport check_legal(const Arena& a, const Position& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto r = check_at(a, s, i);
        if (!r.ok()) return r;
    }
    return {};
}

bool is_legal(const Arena& a, const Position& s) { return check_legal(a, s).ok(); }

LegalityReport check_extension(const Arena& a, const Position& s) {
    if (s.empty()) return {};
    return check_at(a, s, s.size() - 1);
}

std::vector<std::size_t> initial_occurrences(const Position& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].just) out.push_back(i);
    return out;
}

std::size_t root_of(const Position& s, std::size_t i) {
    while (s[i].just) i = *s[i].just;
    return i;
}

Position restrict_positions(const Position& s, const std::vector<bool>& keep) {
    std::vector<std::optional<std::size_t>> where(s.size());
    Position out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!keep[i]) continue;
        where[i] = out.size();
        Occ o = s[i];
        if (o.just) o.just = where[*o.just];
        out.push_back(std::move(o));
    }
    return out;
}

Position thread(const Position& s, const std::vector<std::size_t>& initials) {
    std::set<std::size_t> roots;
    for (auto i : initials) {
        if (i >= s.size() || s[i].just) throw Error("occurrence " + std::to_string(i) + " is not initial");
        roots.insert(i);
    }
    std::vector<bool> keep(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) keep[i] = roots.count(root_of(s, i)) > 0;
    return restrict_positions(s, keep);
}

Position restrict_tag(const Position& s, std::string_view t) {
    std::vector<bool> keep(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) keep[i] = has_prefix(s[i].move, t) && s[i].move.path.size() > 0;
    Position r = restrict_positions(s, keep);
    for (auto& o : r) o.move = *retag(o.move, t, "");
    return r;
}

}  // namespace ludic
