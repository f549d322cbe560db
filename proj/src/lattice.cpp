#include "hd1/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"

namespace hd1 {

static void check_dim(int n) {
    if (n < 1 || n > kMaxDim) fail(errc::dimension, "dimension must be in [1, 12], got " + std::to_string(n));
}

int point_index(const Point& p) {
    check_dim(p.n);
    int idx = 0;
    for (int i = p.n - 1; i >= 0; --i) {
        if (p.x[i] > 2) fail(errc::codec, "coordinate out of {0,1,2}");
        idx = idx * 3 + p.x[i];
    }
    return idx;
}

Point point_at(int index, int n) {
    check_dim(n);
    if (index < 0 || index >= kPow3[n]) fail(errc::codec, "point index out of range");
    Point p;
    p.n = n;
    for (int i = 0; i < n; ++i) {
        p.x[i] = uint8_t(index % 3);
        index /= 3;
    }
    return p;
}

std::vector<Point> neighbors(const Point& p) {
    check_dim(p.n);
    std::vector<Point> out;
    out.reserve(2 * p.n);
    for (int i = 0; i < p.n; ++i) {
        for (int d = 1; d <= 2; ++d) {
            Point q = p;
            q.x[i] = uint8_t((p.x[i] + d) % 3);
            out.push_back(q);
        }
    }
    return out;
}

int neighbor_indices(int index, int n, int* out) {
    int rem = index;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        int digit = rem % 3;
        rem /= 3;
        int base = index - digit * kPow3[i];
        out[k++] = base + ((digit + 1) % 3) * kPow3[i];
        out[k++] = base + ((digit + 2) % 3) * kPow3[i];
    }
    return k;
}

VertexSet::VertexSet(int n) : n_(n) {
    check_dim(n);
    bits_.assign(size_t(kPow3[n] + 63) / 64, 0);
}

VertexSet VertexSet::from_points(int n, const std::vector<Point>& pts) {
    VertexSet s(n);
    for (const Point& p : pts) {
        if (p.n != n) fail(errc::dimension, "point dimension mismatch");
        s.set(point_index(p));
    }
    return s;
}

VertexSet VertexSet::from_indices(int n, const std::vector<int>& idxs) {
    VertexSet s(n);
    for (int i : idxs) {
        if (i < 0 || i >= kPow3[n]) fail(errc::codec, "set member index out of range");
        s.set(i);
    }
    return s;
}

int VertexSet::size() const {
    int c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    out.reserve(size_t(size()));
    for (size_t wi = 0; wi < bits_.size(); ++wi) {
        uint64_t w = bits_[wi];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(int(wi * 64) + b);
            w &= w - 1;
        }
    }
    return out;
}

std::vector<Point> VertexSet::points() const {
    std::vector<Point> out;
    for (int i : indices()) out.push_back(point_at(i, n_));
    return out;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    // First differing vertex decides; the set NOT containing it is smaller.
    size_t m = std::min(a.bits_.size(), b.bits_.size());
    for (size_t i = 0; i < m; ++i) {
        uint64_t d = a.bits_[i] ^ b.bits_[i];
        if (d) {
            uint64_t low = d & (~d + 1);
            return (a.bits_[i] & low) == 0;
        }
    }
    return false;
}

std::string VertexSet::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["points"] = indices();
    return j.dump();
}

VertexSet VertexSet::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("bad set JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("points")) fail(errc::parse, "set JSON needs fields n, points");
    VertexSet s(j["n"].get<int>());
    for (int i : j["points"].get<std::vector<int>>()) {
        if (i < 0 || i >= s.universe()) fail(errc::codec, "set member index out of range");
        s.set(i);
    }
    return s;
}

DegreeProfile induced_degree_profile(const VertexSet& s) {
    DegreeProfile prof;
    prof.member_index = s.indices();
    prof.degree.reserve(prof.member_index.size());
    int nb[2 * kMaxDim];
    for (int v : prof.member_index) {
        int cnt = neighbor_indices(v, s.n(), nb);
        int deg = 0;
        for (int k = 0; k < cnt; ++k) deg += s.test(nb[k]);
        prof.degree.push_back(deg);
        prof.max_degree = std::max(prof.max_degree, deg);
    }
    return prof;
}

int max_induced_degree(const VertexSet& s) {
    int nb[2 * kMaxDim];
    int maxd = 0;
    for (int v : s.indices()) {
        int cnt = neighbor_indices(v, s.n(), nb);
        int deg = 0;
        for (int k = 0; k < cnt; ++k) deg += s.test(nb[k]);
        maxd = std::max(maxd, deg);
    }
    return maxd;
}

VertexSet coset_independent_set(const CosetParams& p, int n) {
    check_dim(n);
    if (int(p.b.size()) != n || p.b[0] != 1) fail(errc::precondition, "coset params need b of length n with b_1 = 1");
    VertexSet s(n);
    for (int idx = 0; idx < kPow3[n]; ++idx) {
        int rem = idx, sum = 0;
        for (int i = 0; i < n; ++i) {
            sum += p.b[i] * (rem % 3);
            rem /= 3;
        }
        if (sum % 3 == p.c) s.set(idx);
    }
    return s;
}

std::vector<CosetParams> enumerate_coset_params(int n) {
    check_dim(n);
    std::vector<CosetParams> out;
    // b lexicographic with b_1 = 1 fixed: leftmost varying coordinate heaviest.
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        CosetParams p;
        p.b.assign(size_t(n), 1);
        for (int i = 1; i < n; ++i)
            p.b[i] = uint8_t(1 + ((mask >> (n - 1 - i)) & 1));
        for (int c = 0; c < 3; ++c) {
            p.c = uint8_t(c);
            out.push_back(p);
        }
    }
    return out;
}

std::vector<VertexSet> enumerate_max_independent_sets(int n) {
    std::vector<VertexSet> out;
    for (const CosetParams& p : enumerate_coset_params(n)) out.push_back(coset_independent_set(p, n));
    return out;
}

SumClasses abc_and_aprime(int n) {
    check_dim(n);
    SumClasses sc{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int idx = 0; idx < kPow3[n]; ++idx) {
        int rem = idx, sum = 0, skew = 0;
        for (int i = 0; i < n; ++i) {
            int d = rem % 3;
            rem /= 3;
            sum += d;
            skew += (i == n - 1 ? 2 : 1) * d;
        }
        switch (sum % 3) {
            case 0: sc.a.set(idx); break;
            case 1: sc.b.set(idx); break;
            default: sc.c.set(idx); break;
        }
        if (skew % 3 == 0) sc.aprime.set(idx);
    }
    return sc;
}

bool is_saturated(const VertexSet& s, int direction) {
    int n = s.n();
    if (direction < 1 || direction > n) fail(errc::dimension, "direction out of range");
    int step = kPow3[direction - 1];
    // Lines in direction i: bases are the indices with digit i equal to 0.
    for (int idx = 0; idx < kPow3[n]; ++idx) {
        if ((idx / step) % 3 != 0) continue;
        if (!s.test(idx) && !s.test(idx + step) && !s.test(idx + 2 * step)) return false;
    }
    return true;
}

int count_two_point_lines(const VertexSet& s, int direction) {
    int n = s.n();
    if (direction < 1 || direction > n) fail(errc::dimension, "direction out of range");
    int step = kPow3[direction - 1];
    int count = 0;
    for (int idx = 0; idx < kPow3[n]; ++idx) {
        if ((idx / step) % 3 != 0) continue;
        int members = int(s.test(idx)) + int(s.test(idx + step)) + int(s.test(idx + 2 * step));
        count += (members == 2);
    }
    return count;
}

} // namespace hd1
