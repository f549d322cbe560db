#pragma once

// Satisfiability engines behind a common face: a built-in CDCL solver
// (watched literals, first-UIP learning, backjumping, no restarts, fixed
// lowest-variable/false-first branching, so runs are bit-reproducible) and a
// runner for an external DIMACS solver named by --solver-path or the
// HD1_SAT_SOLVER environment variable.

#include <string>
#include <vector>

#include "hd1/cnf.hpp"

namespace hd1 {

enum class Engine { Embedded, External };

struct SolverConfig {
    Engine engine = Engine::Embedded;
    std::string solver_path;  // external only; empty = consult HD1_SAT_SOLVER

    static SolverConfig embedded() { return {}; }
    static SolverConfig external(std::string path = {}) {
        return {Engine::External, std::move(path)};
    }
};

const char* engine_name(Engine e);

// Resolves the external command or raises a configuration error telling the
// caller to set HD1_SAT_SOLVER / --solver-path.
std::string external_solver_command(const SolverConfig& cfg);
bool external_solver_available(const SolverConfig& cfg);

class CdclSolver {
  public:
    explicit CdclSolver(int vars);

    // Clauses may be added between solve() calls; the solver returns to the
    // root level first. Literals use the external signed convention.
    void add_clause(const std::vector<int>& lits);
    bool solve();  // true = satisfiable
    std::vector<uint8_t> model() const;  // index 1..vars, defined after SAT
    uint64_t conflicts() const { return conflicts_; }

  private:
    int lit_value(int l) const {
        const int8_t v = values_[size_t(l >> 1)];
        return v < 0 ? -1 : (v ^ (l & 1));
    }
    int decision_level() const { return int(trail_lim_.size()); }
    void enqueue(int l, int reason);
    void cancel_until(int level);
    int propagate();  // conflicting clause id, or -1
    void analyze(int confl, std::vector<int>& learnt, int& backjump);

    struct Clause {
        std::vector<int> lits;  // lits[0], lits[1] watched
    };

    int nvars_;
    bool unsat_ = false;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;  // per internal literal
    std::vector<int8_t> values_;             // per var: -1 unset, 0 false, 1 true
    std::vector<int> levels_;
    std::vector<int> reasons_;               // clause id or -1
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::vector<uint8_t> seen_;
    size_t qhead_ = 0;
    int branch_hint_ = 0;                    // no unassigned var below this index
    uint64_t conflicts_ = 0;
};

struct SolveReport {
    bool satisfiable = false;
    std::vector<uint8_t> model;  // index 1..vars when satisfiable
};

struct ModelList {
    std::vector<std::vector<uint8_t>> models;  // projected: index into projection
    bool truncated = false;                    // hit the limit with the search open
};

// One-shot solve; satisfying assignments are re-checked against the formula
// before being returned, whichever engine produced them.
SolveReport solve_cnf(const CnfFormula& f, const SolverConfig& cfg = {});

// All models distinct on the projection variables, found by iterated solving
// with blocking clauses; stops after `limit` models when limit > 0.
ModelList enumerate_models(const CnfFormula& f, const std::vector<int>& projection,
                           int limit = 0, const SolverConfig& cfg = {});

} // namespace hd1
