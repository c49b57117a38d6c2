#include <unordered_map>

#include "ludic/strategy.hpp"

namespace ludic {

std::string to_string(Component c) {
    switch (c) {
    case Component::A: return "A";
    case Component::B1: return "B1";
    case Component::B2: return "B2";
    case Component::C: return "C";
    }
    return "?";
}

nlohmann::json to_json(const TraceEntry& e) {
    auto j = to_json(e.move);
    return {{"component", to_string(e.component)},
            {"move", j},
            {"justifier", e.justifier ? nlohmann::json(*e.justifier) : nlohmann::json(nullptr)},
            {"hidden", e.hidden}};
}

namespace {

// Snapshot of an interaction after an even external prefix has been replayed.
struct State {
    Position u;  // over ((A -o B1) -o B2) -o C
    std::vector<std::size_t> ext_to_u;
    std::vector<std::optional<std::size_t>> u_to_ext;
    std::vector<std::optional<std::size_t>> twin;
};

enum class Turn { Sigma, Tau };

struct View {
    Position pos;
    std::vector<std::size_t> idx;
};

View view_of(const Position& u, bool sigma_side) {
    View v;
    std::vector<bool> keep(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto c = component_of(u[i].move);
        keep[i] = sigma_side ? (c == Component::A || c == Component::B1) : (c == Component::B2 || c == Component::C);
        if (keep[i]) v.idx.push_back(i);
    }
    v.pos = restrict_positions(u, keep);
    for (auto& o : v.pos) {
        if (sigma_side)
            o.move = *retag(o.move, "L.L", "");
        else if (component_of(o.move) == Component::B2)
            o.move = *retag(o.move, "L.R", "L");
    }
    return v;
}

Component tagged_component(const Move& m) {
    if (has_prefix(m, "L.L.L")) return Component::A;
    if (has_prefix(m, "L.L.R")) return Component::B1;
    if (has_prefix(m, "L.R")) return Component::B2;
    return Component::C;
}

void push(State& st, Occ o, std::vector<TraceEntry>* trace) {
    if (trace) {
        auto c = tagged_component(o.move);
        Move local = o.move;
        switch (c) {
        case Component::A: local = *retag(local, "L.L.L", ""); break;
        case Component::B1: local = *retag(local, "L.L.R", ""); break;
        case Component::B2: local = *retag(local, "L.R", ""); break;
        case Component::C: local = *retag(local, "R", ""); break;
        }
        trace->push_back({c, local, o.just, c == Component::B1 || c == Component::B2});
    }
    st.u.push_back(std::move(o));
    st.u_to_ext.push_back(std::nullopt);
    st.twin.push_back(std::nullopt);
}

// External coordinates of the last occurrence of u, which must be in A or C.
Occ external_occ(const State& st) {
    const Occ& o = st.u.back();
    Occ e;
    e.move = tagged_component(o.move) == Component::A ? *retag(o.move, "L.L.L", "L") : o.move;
    auto j = o.just;
    while (j && !st.u_to_ext[*j]) j = st.u[*j].just;
    if (j) e.just = st.u_to_ext[*j];
    return e;
}

// Plays the components against each other until one of them moves in A or C.
ResponseKind run(const Strategy& sigma, const Strategy& tau, State& st, Turn turn, std::size_t budget, std::size_t& steps,
                 std::vector<TraceEntry>* trace) {
    while (true) {
        if (++steps > budget) return ResponseKind::Diverge;
        bool s_side = turn == Turn::Sigma;
        View v = view_of(st.u, s_side);
        Response r = (s_side ? sigma : tau).respond(v.pos);
        if (!r.defined()) return r.kind;
        std::optional<std::size_t> j;
        if (r.occ.just) {
            if (*r.occ.just >= v.idx.size()) return ResponseKind::None;
            j = v.idx[*r.occ.just];
        }
        const Move& m = r.occ.move;
        std::string head = m.head();
        if (s_side && head == "L") {
            push(st, {*retag(m, "", "L.L"), j}, trace);
            return ResponseKind::Move;
        }
        if (!s_side && head == "R") {
            push(st, {m, j}, trace);
            return ResponseKind::Move;
        }
        if (s_side && head == "R") {
            push(st, {*retag(m, "", "L.L"), j}, trace);
            std::size_t b1 = st.u.size() - 1;
            if (!j || tagged_component(st.u[*j].move) != Component::B1 || !st.twin[*j]) return ResponseKind::None;
            push(st, {*retag(m, "R", "L.R"), st.twin[*j]}, trace);
            std::size_t b2 = st.u.size() - 1;
            st.twin[b1] = b2;
            st.twin[b2] = b1;
            turn = Turn::Tau;
            continue;
        }
        if (!s_side && head == "L") {
            push(st, {*retag(m, "L", "L.R"), j}, trace);
            std::size_t b2 = st.u.size() - 1;
            std::optional<std::size_t> jj;
            if (j && tagged_component(st.u[*j].move) == Component::B2) {
                if (!st.twin[*j]) return ResponseKind::None;
                jj = st.twin[*j];
            } else if (j && tagged_component(st.u[*j].move) == Component::C) {
                jj = b2;  // a fresh B-thread: sigma sees an opening move justified by the B2 copy
            } else {
                return ResponseKind::None;
            }
            push(st, {*retag(m, "L", "L.L.R"), jj}, trace);
            std::size_t b1 = st.u.size() - 1;
            st.twin[b1] = b2;
            st.twin[b2] = b1;
            turn = Turn::Sigma;
            continue;
        }
        return ResponseKind::None;
    }
}

// Feeds an external O-move and runs to the next external move.
Response step(const Strategy& sigma, const Strategy& tau, State& st, const Occ& o, std::size_t budget, std::size_t& steps,
              std::vector<TraceEntry>* trace) {
    std::optional<std::size_t> j;
    if (o.just) {
        if (*o.just >= st.ext_to_u.size()) return Response::none();
        j = st.ext_to_u[*o.just];
    }
    Turn turn;
    std::string head = o.move.head();
    if (head == "L") {
        push(st, {*retag(o.move, "L", "L.L.L"), j}, trace);
        turn = Turn::Sigma;
    } else if (head == "R") {
        push(st, {o.move, j}, trace);
        turn = Turn::Tau;
    } else {
        return Response::none();
    }
    st.u_to_ext.back() = st.ext_to_u.size();
    st.ext_to_u.push_back(st.u.size() - 1);
    std::size_t local = 0;
    auto k = run(sigma, tau, st, turn, budget, local, trace);
    steps += local;
    if (k != ResponseKind::Move) return k == ResponseKind::Diverge ? Response::diverge() : Response::none();
    Occ e = external_occ(st);
    st.u_to_ext.back() = st.ext_to_u.size();
    st.ext_to_u.push_back(st.u.size() - 1);
    return Response::move(e);
}

class Composition : public Strategy {
public:
    Composition(StrategyPtr s, StrategyPtr t, std::size_t budget) : sigma_(std::move(s)), tau_(std::move(t)), budget_(budget) {}

    Response respond(const Position& s) const override {
        if (s.size() % 2 == 0) return Response::none();
        Position prefix(s.begin(), s.end() - 1);
        std::size_t steps = 0;
        State st;
        auto r = replay(prefix, st, steps);
        if (r.kind != ResponseKind::Move) return r;
        return step(*sigma_, *tau_, st, s.back(), budget_, steps, nullptr);
    }

    std::string describe() const override { return "(" + sigma_->describe() + " ; " + tau_->describe() + ")"; }

private:
    // Rebuilds the state for an even prefix; Move means "is a play", otherwise the failure kind.
    Response replay(const Position& e, State& out, std::size_t& steps) const {
        if (e.empty()) {
            out = State{};
            return Response::move({});
        }
        auto key = key_of(e);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) {
                out = *it->second;
                return Response::move({});
            }
        }
        Position pre(e.begin(), e.end() - 2);
        auto r = replay(pre, out, steps);
        if (r.kind != ResponseKind::Move) return r;
        auto p = step(*sigma_, *tau_, out, e[e.size() - 2], budget_, steps, nullptr);
        if (p.kind != ResponseKind::Move) return p;
        if (!(p.occ == e.back())) return Response::none();
        std::lock_guard<std::mutex> lock(mu_);
        if (cache_.size() > 20000) cache_.clear();
        cache_.emplace(key, std::make_shared<State>(out));
        return Response::move({});
    }

    StrategyPtr sigma_, tau_;
    std::size_t budget_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, std::shared_ptr<State>> cache_;
};

}  // namespace

StrategyPtr compose(StrategyPtr sigma, StrategyPtr tau, std::size_t budget) {
    return std::make_shared<Composition>(std::move(sigma), std::move(tau), budget);
}

InteractionOutcome interact(const StrategyPtr& sigma, const StrategyPtr& tau, const Position& s, std::size_t budget) {
    InteractionOutcome out;
    State st;
    for (std::size_t k = 0; k < s.size(); k += 2) {
        out.response = step(*sigma, *tau, st, s[k], budget, out.steps, &out.trace);
        if (!out.response.defined()) return out;
        if (k + 1 < s.size() && !(out.response.occ == s[k + 1])) {
            out.response = Response::none();
            return out;
        }
    }
    if (s.size() % 2 == 0) out.response = Response::none();
    return out;
}

}  // namespace ludic
