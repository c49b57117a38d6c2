#pragma once

#include <random>

#include "ludic/syntax.hpp"

namespace ludic {

// One checked instance of an equation or property.
struct LawCheck {
    std::string suite;
    std::string law;
    std::string instance;
    std::string method;  // "normal form", "behaviour@<depth>", "brute force", ...
    bool ok = false;
    std::string detail;
};

struct LawOptions {
    unsigned alphabet = 4;
    std::size_t depth = 10;
    std::size_t max_positions = 200000;
    EvalOptions eval;
    unsigned samples = 100;  // engine suite
    std::uint32_t seed = 20240611;
};

std::vector<LawCheck> cwf_laws(const LawOptions& o = {});
std::vector<LawCheck> type_former_laws(const LawOptions& o = {});
std::vector<LawCheck> intensional_laws(const LawOptions& o = {});
std::vector<LawCheck> engine_laws(const LawOptions& o = {});

// Scopes accepted by run_laws: cwf, types, intensional, engine, all.
std::vector<std::string> law_scopes();
std::vector<LawCheck> run_laws(const std::string& scope, const LawOptions& o = {});

// Behavioural comparison of two compiled terms on a game, as a LawCheck.
LawCheck compare_behaviour(std::string suite, std::string law, std::string instance, const StrategyPtr& a,
                           const StrategyPtr& b, const Game& g, const LawOptions& o);

// ---------------------------------------------------------------- random strategies

// First-order programs over one natural-number argument, read as innocent strategies on
// !N -o N: each use of the argument opens a fresh thread.
struct NatProgram {
    enum class Op { Const, Arg, Succ, Add, IfZero };
    Op op = Op::Const;
    unsigned value = 0;
    std::vector<std::shared_ptr<const NatProgram>> kids;
};
using NatProgramPtr = std::shared_ptr<const NatProgram>;

NatProgramPtr random_program(std::mt19937& rng, unsigned size);
std::string to_string(const NatProgramPtr& p);
// Value of the program when every use of the argument reads `arg`.
std::uint64_t run_program(const NatProgramPtr& p, std::uint64_t arg);
// Most argument reads along any branch.
unsigned max_reads(const NatProgramPtr& p);
StrategyPtr program_strategy(NatProgramPtr p);

}  // namespace ludic
