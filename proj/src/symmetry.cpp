#include "hd1/symmetry.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace hd1 {

Automorphism Automorphism::identity(int n) {
    Automorphism a;
    a.perm.resize(size_t(n));
    std::iota(a.perm.begin(), a.perm.end(), 0);
    a.signs.assign(size_t(n), 1);
    a.shift.assign(size_t(n), 0);
    return a;
}

std::string Automorphism::to_json() const {
    nlohmann::json j;
    std::vector<int> perm1;
    for (int v : perm) perm1.push_back(v + 1);
    j["perm"] = perm1;
    j["signs"] = std::vector<int>(signs.begin(), signs.end());
    j["shift"] = std::vector<int>(shift.begin(), shift.end());
    return j.dump();
}

Automorphism Automorphism::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("bad automorphism JSON: ") + e.what());
    }
    Automorphism a;
    for (int v : j.at("perm").get<std::vector<int>>()) a.perm.push_back(v - 1);
    for (int v : j.at("signs").get<std::vector<int>>()) a.signs.push_back(uint8_t(v));
    for (int v : j.at("shift").get<std::vector<int>>()) a.shift.push_back(uint8_t(v));
    size_t n = a.perm.size();
    if (a.signs.size() != n || a.shift.size() != n) fail(errc::parse, "automorphism field lengths differ");
    return a;
}

static void check_same_dim(int a, int b, const char* what) {
    if (a != b) fail(errc::dimension, std::string(what) + ": dimension mismatch");
}

Point apply(const Automorphism& s, const Point& p) {
    check_same_dim(s.n(), p.n, "apply");
    int n = p.n;
    int inv[kMaxDim];
    for (int i = 0; i < n; ++i) inv[s.perm[i]] = i;
    Point q;
    q.n = n;
    for (int j = 0; j < n; ++j) q.x[j] = uint8_t((s.signs[j] * p.x[inv[j]] + s.shift[j]) % 3);
    return q;
}

VertexSet apply_set(const Automorphism& s, const VertexSet& set) {
    VertexSet out(set.n());
    for (const Point& p : set.points()) out.set(point_index(apply(s, p)));
    return out;
}

Automorphism compose(const Automorphism& s, const Automorphism& t) {
    check_same_dim(s.n(), t.n(), "compose");
    int n = s.n();
    int sinv[kMaxDim];
    for (int i = 0; i < n; ++i) sinv[s.perm[i]] = i;
    Automorphism r;
    r.perm.resize(size_t(n));
    r.signs.resize(size_t(n));
    r.shift.resize(size_t(n));
    for (int i = 0; i < n; ++i) r.perm[i] = s.perm[t.perm[i]];
    for (int k = 0; k < n; ++k) {
        int mid = sinv[k];  // coordinate of t's output feeding s's output k
        r.signs[k] = uint8_t((s.signs[k] * t.signs[mid]) % 3);
        r.shift[k] = uint8_t((s.signs[k] * t.shift[mid] + s.shift[k]) % 3);
    }
    return r;
}

Automorphism inverse(const Automorphism& s) {
    int n = s.n();
    Automorphism r;
    r.perm.resize(size_t(n));
    r.signs.resize(size_t(n));
    r.shift.resize(size_t(n));
    for (int i = 0; i < n; ++i) r.perm[s.perm[i]] = i;
    // signs in {1,2} are their own inverses mod 3
    for (int i = 0; i < n; ++i) {
        int j = s.perm[i];
        r.signs[i] = s.signs[j];
        r.shift[i] = uint8_t((3 - (s.signs[j] * s.shift[j]) % 3) % 3);
    }
    return r;
}

uint64_t group_order(int n) {
    if (n < 1 || n > kMaxDim) fail(errc::dimension, "group_order: bad n");
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= uint64_t(i);
    return f * (uint64_t(1) << n) * uint64_t(kPow3[n]);
}

std::vector<Automorphism> enumerate_group(int n) {
    if (n < 1 || n > 4) fail(errc::capability, "enumerate_group is material for n <= 4 only");
    std::vector<Automorphism> out;
    out.reserve(size_t(group_order(n)));
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int smask = 0; smask < (1 << n); ++smask) {
            Automorphism a;
            a.perm = perm;
            a.signs.resize(size_t(n));
            for (int i = 0; i < n; ++i) a.signs[i] = uint8_t(1 + ((smask >> (n - 1 - i)) & 1));
            for (int yidx = 0; yidx < kPow3[n]; ++yidx) {
                Point y = point_at(yidx, n);
                a.shift.assign(y.x.begin(), y.x.begin() + n);
                out.push_back(a);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---- orbit minimisation ----------------------------------------------------

namespace {

// addtab[n]: T[y * 3^n + v] = index of point(v) + point(y)
const std::vector<int32_t>& translation_table(int n) {
    static std::map<int, std::vector<int32_t>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    int N = kPow3[n];
    std::vector<int32_t> t(size_t(N) * size_t(N));
    for (int y = 0; y < N; ++y) {
        Point py = point_at(y, n);
        for (int v = 0; v < N; ++v) {
            Point pv = point_at(v, n);
            int idx = 0;
            for (int i = n - 1; i >= 0; --i) idx = idx * 3 + (pv.x[i] + py.x[i]) % 3;
            t[size_t(y) * size_t(N) + size_t(v)] = idx;
        }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// One linear part (perm, signs) as a vertex index map.
void linear_vertex_map(int n, const std::vector<int>& perm, int smask, std::vector<int32_t>& out) {
    int N = kPow3[n];
    out.resize(size_t(N));
    int inv[kMaxDim];
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    uint8_t sign[kMaxDim];
    for (int j = 0; j < n; ++j) sign[j] = uint8_t(1 + ((smask >> (n - 1 - j)) & 1));
    for (int v = 0; v < N; ++v) {
        Point p = point_at(v, n);
        int idx = 0;
        for (int j = n - 1; j >= 0; --j) idx = idx * 3 + (sign[j] * p.x[inv[j]]) % 3;
        out[size_t(v)] = idx;
    }
}

} // namespace

VertexSet canonical_form(const VertexSet& s) {
    int n = s.n();
    if (n > 6) fail(errc::capability, "canonical_form scans the full orbit, capped at n <= 6");
    int N = kPow3[n];
    const std::vector<int32_t>& add = translation_table(n);
    std::vector<int> members = s.indices();

    VertexSet best = s;
    VertexSet cand(n);
    std::vector<int32_t> lin;
    std::vector<int> mapped(members.size());

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int smask = 0; smask < (1 << n); ++smask) {
            linear_vertex_map(n, perm, smask, lin);
            for (size_t k = 0; k < members.size(); ++k) mapped[k] = lin[size_t(members[k])];
            for (int y = 0; y < N; ++y) {
                const int32_t* row = &add[size_t(y) * size_t(N)];
                std::fill(cand.words().begin(), cand.words().end(), 0);
                for (int v : mapped) cand.set(row[v]);
                if (VertexSet::lex_less(cand, best)) best = cand;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool are_isomorphic(const VertexSet& a, const VertexSet& b) {
    check_same_dim(a.n(), b.n(), "are_isomorphic");
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool find_isomorphism(const VertexSet& a, const VertexSet& b, Automorphism& witness) {
    check_same_dim(a.n(), b.n(), "find_isomorphism");
    int n = a.n();
    if (n > 6) fail(errc::capability, "find_isomorphism scans the full orbit, capped at n <= 6");
    if (a.size() != b.size()) return false;
    int N = kPow3[n];
    const std::vector<int32_t>& add = translation_table(n);
    std::vector<int> members = a.indices();
    VertexSet cand(n);
    std::vector<int32_t> lin;
    std::vector<int> mapped(members.size());

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int smask = 0; smask < (1 << n); ++smask) {
            linear_vertex_map(n, perm, smask, lin);
            for (size_t k = 0; k < members.size(); ++k) mapped[k] = lin[size_t(members[k])];
            for (int y = 0; y < N; ++y) {
                const int32_t* row = &add[size_t(y) * size_t(N)];
                std::fill(cand.words().begin(), cand.words().end(), 0);
                for (int v : mapped) cand.set(row[v]);
                if (cand == b) {
                    witness.perm = perm;
                    witness.signs.resize(size_t(n));
                    for (int j = 0; j < n; ++j) witness.signs[j] = uint8_t(1 + ((smask >> (n - 1 - j)) & 1));
                    Point y_pt = point_at(y, n);
                    witness.shift.assign(y_pt.x.begin(), y_pt.x.begin() + n);
                    return true;
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace hd1
