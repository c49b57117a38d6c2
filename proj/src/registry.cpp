#include <fstream>

#include "ludic/predicative.hpp"

namespace ludic {

std::uint64_t cantor_pair(std::uint64_t x, std::uint64_t y) { return (x + y) * (x + y + 1) / 2 + y; }

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
    std::uint64_t w = 0;
    while ((w + 1) * (w + 2) / 2 <= z) ++w;
    std::uint64_t y = z - w * (w + 1) / 2;
    return {w - y, y};
}

unsigned game_rank(const Arena& a) {
    auto r = a.rank_sup();
    return r ? *r + 1 : 1;
}

Move name_of(const RegistryEntry& e) { return Move{std::to_string(e.number), e.rank, ""}; }

Registry::Registry() = default;

Registry& Registry::global() {
    static Registry* r = [] {
        auto* reg = new Registry();
        reg->add({{"base", "I"}}, "I", terminal_game());
        reg->add({{"base", "0"}}, "0", empty_game());
        reg->add({{"base", "1"}}, "1", unit_game());
        reg->add({{"base", "N"}}, "N", nat_game());
        return reg;
    }();
    return *r;
}

RegistryEntry Registry::add(const nlohmann::json& key, std::string description, GamePtr game) {
    std::string k = key.dump();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_key_.find(k);
    if (it != by_key_.end()) {
        auto& e = entries_[it->second];
        if (!e.game) e.game = std::move(game);
        return e;
    }
    RegistryEntry e;
    e.rank = game ? game_rank(*game->arena()) : 1;
    e.index = next_index_[e.rank]++;
    e.number = cantor_pair(e.index, e.rank);
    e.key = k;
    e.description = std::move(description);
    e.game = std::move(game);
    by_key_[k] = entries_.size();
    by_number_[e.number] = entries_.size();
    entries_.push_back(e);
    return e;
}

std::optional<RegistryEntry> Registry::find(std::uint64_t number) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_number_.find(number);
    if (it == by_number_.end()) return std::nullopt;
    return entries_[it->second];
}

std::optional<RegistryEntry> Registry::find_key(const nlohmann::json& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_key_.find(key.dump());
    if (it == by_key_.end()) return std::nullopt;
    return entries_[it->second];
}

std::optional<RegistryEntry> Registry::find_name(const Move& m) const {
    if (!m.path.empty() || m.ident.empty() || m.ident.size() > 18) return std::nullopt;
    for (char c : m.ident)
        if (c < '0' || c > '9') return std::nullopt;
    auto e = find(std::stoull(m.ident));
    if (!e || e->rank != m.rank) return std::nullopt;
    return e;
}

std::vector<RegistryEntry> Registry::entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {entries_.begin(), entries_.end()};
}

nlohmann::json Registry::to_json() const {
    std::lock_guard<std::mutex> lock(mu_);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries_)
        out.push_back({{"number", e.number},
                       {"rank", e.rank},
                       {"index", e.index},
                       {"key", nlohmann::json::parse(e.key)},
                       {"description", e.description}});
    return {{"entries", out}};
}

void Registry::merge(const nlohmann::json& j) {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& x : j.at("entries")) {
        RegistryEntry e;
        e.rank = x.at("rank").get<unsigned>();
        e.index = x.at("index").get<std::uint64_t>();
        e.number = x.at("number").get<std::uint64_t>();
        e.key = x.at("key").dump();
        e.description = x.value("description", "");
        if (e.number != cantor_pair(e.index, e.rank)) throw Error("registry entry " + e.key + " has an inconsistent number");
        auto k = by_key_.find(e.key);
        if (k != by_key_.end()) {
            if (entries_[k->second].number != e.number)
                throw Error("registry key " + e.key + " is bound to " + std::to_string(entries_[k->second].number) +
                            ", file says " + std::to_string(e.number));
            continue;
        }
        if (by_number_.count(e.number))
            throw Error("construction number " + std::to_string(e.number) + " is already taken");
        by_key_[e.key] = entries_.size();
        by_number_[e.number] = entries_.size();
        entries_.push_back(e);
        auto& next = next_index_[e.rank];
        next = std::max(next, e.index + 1);
    }
}

void Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // a missing file is an empty registry
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("cannot read registry " + path + ": " + e.what());
    }
    merge(j);
}

void Registry::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write registry " + path);
    out << to_json().dump(2) << "\n";
}

// ---------------------------------------------------------------- named games

GamePtr empty_game() {
    static GamePtr g = flat_of({});
    return g;
}

GamePtr unit_game() {
    static GamePtr g = flat_of({"*"});
    return g;
}

RegistryEntry terminal_entry() { return *Registry::global().find_key({{"base", "I"}}); }
RegistryEntry empty_entry() { return *Registry::global().find_key({{"base", "0"}}); }
RegistryEntry unit_entry() { return *Registry::global().find_key({{"base", "1"}}); }
RegistryEntry nat_entry() { return *Registry::global().find_key({{"base", "N"}}); }

GamePtr universe_game(unsigned k) {
    static std::mutex mu;
    static std::map<unsigned, GamePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& g = cache[k];
    if (g) return g;
    AnswerSet a;
    a.member = [k](const Move& m) {
        auto e = Registry::global().find_name(m);
        return e && e->rank <= k + 1;
    };
    a.list = [k](unsigned) {
        std::vector<Move> out;
        for (const auto& e : Registry::global().entries())
            if (e.rank <= k + 1) out.push_back(name_of(e));
        return out;
    };
    a.rank_sup = k + 1;
    a.text = "U" + std::to_string(k);
    g = flat_game(std::move(a));
    return g;
}

RegistryEntry universe_entry(unsigned k) {
    return Registry::global().add({{"U", k}}, "U" + std::to_string(k), universe_game(k));
}

namespace {

// Rounds of N played one after another; each round opens with a fresh question.
class RoundsGame : public Game {
public:
    explicit RoundsGame(std::optional<unsigned> k) : k_(k) {}
    ArenaPtr arena() const override { return k_ && *k_ == 0 ? terminal_arena() : nat_game()->arena(); }
    bool admits(const Position& s) const override {
        if (k_ && s.size() > 2 * *k_) return false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            bool question = s[i].move.ident == "q";
            if (question != (i % 2 == 0)) return false;
            if (!question && s[i].just != i - 1) return false;
        }
        return true;
    }
    std::string describe() const override { return k_ ? "FS(" + std::to_string(*k_) + ")" : "FS"; }

private:
    std::optional<unsigned> k_;
};

}  // namespace

GamePtr fs_game(std::optional<unsigned> k) { return std::make_shared<RoundsGame>(k); }

RegistryEntry fs_entry(unsigned k) {
    return Registry::global().add({{"FS", k}}, "FS(" + std::to_string(k) + ")", fs_game(k));
}

StrategyPtr code_of(const RegistryEntry& e) { return answer_strategy(name_of(e)); }

RegistryEntry el(const Strategy& mu) {
    Position q{Occ{Move{"q", 0, ""}, std::nullopt}};
    auto r = mu.respond(q);
    if (!r.defined()) throw Error("code " + mu.describe() + " does not answer: " + to_string(r));
    auto e = Registry::global().find_name(r.occ.move);
    if (!e) throw Error("answer " + to_string(r.occ.move) + " is not the name of a registered game");
    return *e;
}

bool is_code_in(const Strategy& mu, unsigned k) {
    try {
        return el(mu).rank <= k + 1;
    } catch (const Error&) {
        return false;
    }
}

ParadoxReport check_paradox_free(const Registry& r, unsigned alphabet) {
    ParadoxReport rep;
    for (const auto& e : r.entries()) {
        if (!e.game) continue;
        auto name = name_of(e);
        const Arena& a = *e.game->arena();
        auto sup = a.rank_sup();
        if (sup && *sup >= e.rank) {
            rep.ok = false;
            rep.witnesses.push_back(e.description + ": a move of rank " + std::to_string(*sup) + " reaches the name's rank");
        }
        if (a.contains(name)) {
            rep.ok = false;
            rep.witnesses.push_back(e.description + ": its own name is a move");
        }
        for (const auto& m : a.enumerate(alphabet))
            if (m.rank >= e.rank) {
                rep.ok = false;
                rep.witnesses.push_back(e.description + ": move " + to_string(m) + " outranks the game");
                break;
            }
    }
    return rep;
}

}  // namespace ludic
