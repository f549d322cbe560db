#include "hd1/solver.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "hd1/error.hpp"

namespace hd1 {

namespace {

inline int neg(int l) { return l ^ 1; }
inline int lit_var(int l) { return l >> 1; }

// external signed literal -> internal: +v -> 2(v-1), -v -> 2(v-1)+1
inline int intern(int lit) {
    const int v = lit > 0 ? lit : -lit;
    return 2 * (v - 1) + (lit < 0 ? 1 : 0);
}

} // namespace

CdclSolver::CdclSolver(int vars)
    : nvars_(vars),
      watches_(size_t(2 * vars)),
      values_(size_t(vars), -1),
      levels_(size_t(vars), 0),
      reasons_(size_t(vars), -1),
      seen_(size_t(vars), 0) {
    trail_.reserve(size_t(vars));
}

void CdclSolver::enqueue(int l, int reason) {
    const int v = lit_var(l);
    values_[size_t(v)] = int8_t(1 ^ (l & 1));
    levels_[size_t(v)] = decision_level();
    reasons_[size_t(v)] = reason;
    trail_.push_back(l);
}

void CdclSolver::cancel_until(int level) {
    if (decision_level() <= level) return;
    const size_t keep = size_t(trail_lim_[size_t(level)]);
    for (size_t i = trail_.size(); i > keep; --i) {
        const int v = lit_var(trail_[i - 1]);
        values_[size_t(v)] = -1;
        if (v < branch_hint_) branch_hint_ = v;
    }
    trail_.resize(keep);
    trail_lim_.resize(size_t(level));
    qhead_ = keep;
}

int CdclSolver::propagate() {
    while (qhead_ < trail_.size()) {
        const int p = trail_[qhead_++];
        const int fl = neg(p);  // literal that just became false
        auto& ws = watches_[size_t(fl)];
        size_t i = 0, j = 0;
        while (i < ws.size()) {
            const int ci = ws[i++];
            Clause& c = clauses_[size_t(ci)];
            if (c.lits[0] == fl) std::swap(c.lits[0], c.lits[1]);
            const int first = c.lits[0];
            if (lit_value(first) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (size_t k = 2; k < c.lits.size(); ++k) {
                if (lit_value(c.lits[k]) != 0) {
                    std::swap(c.lits[1], c.lits[k]);
                    watches_[size_t(c.lits[1])].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = ci;
            if (lit_value(first) == 0) {  // every literal false
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            enqueue(first, ci);
        }
        ws.resize(j);
    }
    return -1;
}

void CdclSolver::analyze(int confl, std::vector<int>& learnt, int& backjump) {
    learnt.assign(1, 0);  // slot for the asserting literal
    int counter = 0;
    int p = -1;
    size_t index = trail_.size();
    do {
        const Clause& c = clauses_[size_t(confl)];
        for (size_t k = (p < 0 ? 0 : 1); k < c.lits.size(); ++k) {
            const int q = c.lits[k];
            const int v = lit_var(q);
            if (seen_[size_t(v)] || levels_[size_t(v)] == 0) continue;
            seen_[size_t(v)] = 1;
            if (levels_[size_t(v)] == decision_level())
                ++counter;
            else
                learnt.push_back(q);
        }
        while (!seen_[size_t(lit_var(trail_[index - 1]))]) --index;
        p = trail_[index - 1];
        --index;
        confl = reasons_[size_t(lit_var(p))];
        seen_[size_t(lit_var(p))] = 0;
        --counter;
    } while (counter > 0);
    learnt[0] = neg(p);

    backjump = 0;
    for (size_t k = 1; k < learnt.size(); ++k)
        backjump = std::max(backjump, levels_[size_t(lit_var(learnt[k]))]);
    if (learnt.size() > 1) {
        // keep a literal of the backjump level in the second watch slot
        size_t at = 1;
        for (size_t k = 1; k < learnt.size(); ++k)
            if (levels_[size_t(lit_var(learnt[k]))] == backjump) at = k;
        std::swap(learnt[1], learnt[at]);
    }
    for (size_t k = 1; k < learnt.size(); ++k) seen_[size_t(lit_var(learnt[k]))] = 0;
}

void CdclSolver::add_clause(const std::vector<int>& lits) {
    cancel_until(0);
    if (unsat_) return;
    std::vector<int> cl;
    cl.reserve(lits.size());
    for (int lit : lits) {
        if (lit == 0 || std::abs(lit) > nvars_)
            fail(errc::precondition, "literal out of range: " + std::to_string(lit));
        cl.push_back(intern(lit));
    }
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    std::vector<int> kept;
    for (size_t i = 0; i < cl.size(); ++i) {
        if (i + 1 < cl.size() && cl[i + 1] == neg(cl[i])) return;  // tautology
        const int val = lit_value(cl[i]);
        if (val == 1) return;  // already satisfied at the root
        if (val == -1) kept.push_back(cl[i]);
    }
    if (kept.empty()) {
        unsat_ = true;
        return;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        return;
    }
    const int ci = int(clauses_.size());
    clauses_.push_back(Clause{std::move(kept)});
    watches_[size_t(clauses_.back().lits[0])].push_back(ci);
    watches_[size_t(clauses_.back().lits[1])].push_back(ci);
}

bool CdclSolver::solve() {
    if (unsat_) return false;
    cancel_until(0);
    qhead_ = 0;  // replay propagation so late clauses take part
    branch_hint_ = 0;
    std::vector<int> learnt;
    for (;;) {
        const int confl = propagate();
        if (confl >= 0) {
            ++conflicts_;
            if (decision_level() == 0) {
                unsat_ = true;
                return false;
            }
            int backjump = 0;
            analyze(confl, learnt, backjump);
            cancel_until(backjump);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                const int ci = int(clauses_.size());
                clauses_.push_back(Clause{learnt});
                watches_[size_t(learnt[0])].push_back(ci);
                watches_[size_t(learnt[1])].push_back(ci);
                enqueue(learnt[0], ci);
            }
        } else {
            while (branch_hint_ < nvars_ && values_[size_t(branch_hint_)] >= 0) ++branch_hint_;
            if (branch_hint_ == nvars_) return true;
            trail_lim_.push_back(int(trail_.size()));
            enqueue(2 * branch_hint_ + 1, -1);  // lowest open variable, false first
        }
    }
}

std::vector<uint8_t> CdclSolver::model() const {
    std::vector<uint8_t> m(size_t(nvars_) + 1, 0);
    for (int v = 0; v < nvars_; ++v) m[size_t(v) + 1] = values_[size_t(v)] == 1;
    return m;
}

const char* engine_name(Engine e) { return e == Engine::Embedded ? "embedded" : "external"; }

std::string external_solver_command(const SolverConfig& cfg) {
    if (!cfg.solver_path.empty()) return cfg.solver_path;
    if (const char* env = std::getenv("HD1_SAT_SOLVER"); env && *env) return env;
    fail(errc::config,
         "no external solver configured: set HD1_SAT_SOLVER or pass --solver-path");
}

bool external_solver_available(const SolverConfig& cfg) {
    if (!cfg.solver_path.empty()) return true;
    const char* env = std::getenv("HD1_SAT_SOLVER");
    return env && *env;
}

namespace {

void check_model(const CnfFormula& f, const std::vector<uint8_t>& model, const char* engine) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int lit : cl) {
            const uint8_t want = lit > 0;
            if (model[size_t(std::abs(lit))] == want) {
                sat = true;
                break;
            }
        }
        if (!sat)
            fail(errc::structure,
                 std::string("assignment from ") + engine + " engine violates a clause");
    }
}

SolveReport run_external(const CnfFormula& f, const std::string& command) {
    char path[] = "/tmp/hd1cnfXXXXXX";
    const int fd = mkstemp(path);
    if (fd < 0) fail(errc::config, "cannot create a scratch file for the solver input");
    {
        const std::string text = f.dimacs();
        std::ofstream out(path);
        out << text;
    }
    close(fd);
    const std::string cmdline = command + " " + path + " 2>/dev/null";
    FILE* pipe = popen(cmdline.c_str(), "r");
    if (!pipe) {
        unlink(path);
        fail(errc::config, "cannot run external solver: " + command);
    }
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int rc = pclose(pipe);
    unlink(path);
    if (WIFEXITED(rc) && WEXITSTATUS(rc) == 127)
        fail(errc::config, "external solver command not found: " + command);

    SolveReport rep;
    std::istringstream in(output);
    std::string line;
    bool status_seen = false;
    while (std::getline(in, line)) {
        if (line.rfind("s ", 0) != 0) continue;
        status_seen = true;
        if (line.find("UNSATISFIABLE") != std::string::npos)
            rep.satisfiable = false;
        else if (line.find("SATISFIABLE") != std::string::npos)
            rep.satisfiable = true;
        else
            status_seen = false;
    }
    if (!status_seen)
        fail(errc::structure, "external solver gave no s-line verdict: " + command);
    if (rep.satisfiable) rep.model = parse_model_lines(output, f.vars);
    return rep;
}

} // namespace

SolveReport solve_cnf(const CnfFormula& f, const SolverConfig& cfg) {
    SolveReport rep;
    if (cfg.engine == Engine::External) {
        rep = run_external(f, external_solver_command(cfg));
    } else {
        CdclSolver s(f.vars);
        for (const auto& cl : f.clauses) s.add_clause(cl);
        rep.satisfiable = s.solve();
        if (rep.satisfiable) rep.model = s.model();
    }
    if (rep.satisfiable) check_model(f, rep.model, engine_name(cfg.engine));
    return rep;
}

ModelList enumerate_models(const CnfFormula& f, const std::vector<int>& projection, int limit,
                           const SolverConfig& cfg) {
    if (projection.empty())
        fail(errc::precondition, "model enumeration needs at least one projection variable");
    for (int v : projection)
        if (v < 1 || v > f.vars)
            fail(errc::precondition, "projection variable out of range: " + std::to_string(v));

    ModelList out;
    auto record = [&](const std::vector<uint8_t>& model) {
        std::vector<uint8_t> proj(projection.size());
        std::vector<int> block(projection.size());
        for (size_t i = 0; i < projection.size(); ++i) {
            proj[i] = model[size_t(projection[i])];
            block[i] = proj[i] ? -projection[i] : projection[i];
        }
        out.models.push_back(std::move(proj));
        return block;
    };

    if (cfg.engine == Engine::External) {
        CnfFormula work = f;
        for (;;) {
            if (limit > 0 && int(out.models.size()) == limit) {
                out.truncated = true;
                return out;
            }
            const SolveReport rep = run_external(work, external_solver_command(cfg));
            if (!rep.satisfiable) return out;
            check_model(f, rep.model, "external");
            work.add_clause(record(rep.model));
        }
    }

    CdclSolver s(f.vars);
    for (const auto& cl : f.clauses) s.add_clause(cl);
    for (;;) {
        if (limit > 0 && int(out.models.size()) == limit) {
            out.truncated = true;
            return out;
        }
        if (!s.solve()) return out;
        const std::vector<uint8_t> model = s.model();
        check_model(f, model, "embedded");
        s.add_clause(record(model));
    }
}

} // namespace hd1
