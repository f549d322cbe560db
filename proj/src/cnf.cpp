#include "hd1/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "hd1/error.hpp"

namespace hd1 {

void CnfFormula::add_clause(std::vector<int> lits) {
    if (lits.empty()) fail(errc::precondition, "refusing to add an empty clause");
    for (int lit : lits) {
        if (lit == 0) fail(errc::precondition, "literal 0 is reserved for clause ends");
        ensure_vars(std::abs(lit));
    }
    clauses.push_back(std::move(lits));
}

std::string CnfFormula::dimacs() const {
    std::ostringstream os;
    os << "p cnf " << vars << ' ' << clauses.size() << '\n';
    for (const auto& cl : clauses) {
        for (int lit : cl) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

void encode_cardinality_atleast(CnfFormula& f, const std::vector<int>& lits, int k) {
    const int n = int(lits.size());
    if (k <= 0) return;
    if (k > n) {
        const int fresh = f.new_var();
        f.add_clause({fresh});
        f.add_clause({-fresh});
        return;
    }
    // At least k of lits  ==  at most r = n-k of their negations y_i.
    const int r = n - k;
    auto y = [&](int i) { return -lits[size_t(i - 1)]; };  // i in 1..n
    if (r == 0) {
        for (int i = 1; i <= n; ++i) f.add_clause({-y(i)});
        return;
    }
    // Sequential counter: s(i,j) means at least j of y_1..y_i are true.
    const int base = f.vars;
    f.ensure_vars(base + (n - 1) * r);
    auto s = [&](int i, int j) { return base + (i - 1) * r + j; };  // i in 1..n-1, j in 1..r
    f.add_clause({-y(1), s(1, 1)});
    for (int j = 2; j <= r; ++j) f.add_clause({-s(1, j)});
    for (int i = 2; i <= n - 1; ++i) {
        f.add_clause({-y(i), s(i, 1)});
        f.add_clause({-s(i - 1, 1), s(i, 1)});
        for (int j = 2; j <= r; ++j) {
            f.add_clause({-y(i), -s(i - 1, j - 1), s(i, j)});
            f.add_clause({-s(i - 1, j), s(i, j)});
        }
        f.add_clause({-y(i), -s(i - 1, r)});
    }
    f.add_clause({-y(n), -s(n - 1, r)});
}

std::vector<uint8_t> parse_model_lines(const std::string& text, int vars) {
    std::vector<uint8_t> model(size_t(vars) + 1, 0);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != 'v') continue;
        std::istringstream ls(line.substr(1));
        long lit;
        while (ls >> lit) {
            if (lit == 0) continue;
            const long v = lit < 0 ? -lit : lit;
            if (v <= vars) model[size_t(v)] = lit > 0 ? 1 : 0;
        }
    }
    return model;
}

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, kind;
            int vars = 0, clauses = 0;
            if (!(hs >> p >> kind >> vars >> clauses) || kind != "cnf" || vars < 0)
                fail(errc::parse, "malformed DIMACS header: " + line);
            if (header) fail(errc::parse, "duplicate DIMACS header");
            header = true;
            f.ensure_vars(vars);
            continue;
        }
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.add_clause(clause);
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (!header) fail(errc::parse, "missing DIMACS header");
    if (!clause.empty()) fail(errc::parse, "unterminated DIMACS clause");
    return f;
}

} // namespace hd1
