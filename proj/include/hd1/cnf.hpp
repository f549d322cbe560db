#pragma once

// Plain CNF container with a deterministic DIMACS writer and a sequential-
// counter cardinality encoding. Variables are positive ints, literals are
// signed ints, clauses are literal vectors; the empty clause is rejected so
// trivially unsatisfiable constraints must be spelled as contradictory units.

#include <string>
#include <vector>

namespace hd1 {

struct CnfFormula {
    int vars = 0;
    std::vector<std::vector<int>> clauses;

    int new_var() { return ++vars; }
    void ensure_vars(int v) {
        if (v > vars) vars = v;
    }
    void add_clause(std::vector<int> lits);

    std::string dimacs() const;
};

// At least k of the given literals hold, via a sequential counter bounding
// the negated literals from above. k <= 0 adds nothing; k > lits.size() adds
// a contradictory unit pair on a fresh variable.
void encode_cardinality_atleast(CnfFormula& f, const std::vector<int>& lits, int k);

// Assignment parsed from DIMACS-style "v" lines; index 1..vars, values 0/1.
std::vector<uint8_t> parse_model_lines(const std::string& text, int vars);

// Formula parsed from DIMACS text: "c" comments, one "p cnf V C" header,
// 0-terminated clauses. Clause count is taken from the clauses present.
CnfFormula parse_dimacs(const std::string& text);

} // namespace hd1
