#include "hd1/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

#include "hd1/error.hpp"

namespace hd1 {

namespace {

inline int digit_sum_mod3(int idx) {
    int s = 0;
    while (idx) {
        s += idx % 3;
        idx /= 3;
    }
    return s % 3;
}

} // namespace

VertexSet canonical_dn(int n) {
    if (n < 1 || n > 10)
        fail(errc::dimension, "canonical construction supports dimensions 1..10, got " +
                                  std::to_string(n));
    VertexSet d(1);
    d.set(1);
    d.set(2);
    for (int k = 1; k < n; ++k) {
        VertexSet next(k + 1);
        for (int v : d.indices()) next.set(v);         // old set at new coordinate 0
        for (int v = 0; v < pow3(k); ++v) {
            if (digit_sum_mod3(v) != 0) continue;      // sum-zero class at levels 1 and 2
            next.set(v + pow3(k));
            next.set(v + 2 * pow3(k));
        }
        d = std::move(next);
    }
    return d;
}

VertexSet degree_d_set(int n, int d) {
    if (d < 1) fail(errc::precondition, "degree bound must be at least 1");
    if (n < 1 || n > kMaxDim)
        fail(errc::dimension, "degree-bounded construction needs dimension 1.." +
                                  std::to_string(kMaxDim));
    if (n <= d) {
        VertexSet u(n);
        for (int v = 0; v < pow3(n); ++v)
            if (digit_sum_mod3(v) != 0) u.set(v);
        return u;
    }
    const VertexSet head = degree_d_set(n - d, d);
    VertexSet u(n);
    const int headcount = pow3(n - d);
    for (int t = 0; t < pow3(d); ++t) {
        if (digit_sum_mod3(t) == 0) {
            for (int v : head.indices()) u.set(v + headcount * t);
        } else {
            for (int v = 0; v < headcount; ++v)
                if (digit_sum_mod3(v) == 0) u.set(v + headcount * t);
        }
    }
    return u;
}

namespace {

#ifndef HD1_DATA_DIR
#define HD1_DATA_DIR ""
#endif

struct FixtureStore {
    std::map<std::string, LabelGrid> grids;
    std::map<std::string, VertexSet> sets;
    std::vector<std::string> names;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::config, "cannot open fixture file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void adopt_grid(FixtureStore& st, const std::string& name, LabelGrid g) {
    const Degree1Report rep = validate_degree1(g);
    if (!rep.ok)
        fail(errc::structure, "fixture " + name + " fails validation: " + rep.message);
    st.sets.emplace(name, expand(g));
    st.grids.emplace(name, std::move(g));
    st.names.push_back(name);
}

const FixtureStore& store() {
    static FixtureStore st;
    static std::once_flag once;
    std::call_once(once, [] {
        const std::string dir = fixture_dir();
        for (const char* base : {"x4", "extra6_n5", "extra18_n6", "twin_canonical_n6", "skew2"})
            adopt_grid(st, base, LabelGrid::from_json(read_file(dir + "/" + base + ".json")));
        const nlohmann::json cat = nlohmann::json::parse(read_file(dir + "/skew3_catalog.json"));
        for (const auto& entry : cat) {
            adopt_grid(st, entry.at("name").get<std::string>(),
                       LabelGrid::from_cells(entry.at("m").get<int>(),
                                             entry.at("cells").get<std::string>(),
                                             entry.value("collapse_axis", 1)));
        }
        VertexSet t3 = VertexSet::from_json(read_file(dir + "/t3.json"));
        if (max_induced_degree(t3) > 1)
            fail(errc::structure, "fixture t3 fails validation: induced degree above 1");
        st.sets.emplace("t3", std::move(t3));
        st.names.push_back("t3");
        std::sort(st.names.begin(), st.names.end());
    });
    return st;
}

} // namespace

std::string fixture_dir() {
    if (const char* env = std::getenv("HD1_DATA_DIR"); env && *env)
        return std::string(env) + "/fixtures";
    const std::string builtin = HD1_DATA_DIR;
    if (builtin.empty())
        fail(errc::config, "no fixture directory: set HD1_DATA_DIR to the data directory");
    return builtin + "/fixtures";
}

const std::vector<std::string>& fixture_names() { return store().names; }

bool is_fixture(const std::string& name) {
    const auto& st = store();
    return st.sets.count(name) > 0;
}

LabelGrid fixture_grid(const std::string& name) {
    const auto& st = store();
    auto it = st.grids.find(name);
    if (it == st.grids.end())
        fail(errc::usage, "no grid fixture named '" + name + "'");
    return it->second;
}

VertexSet fixture_set(const std::string& name) {
    const auto& st = store();
    auto it = st.sets.find(name);
    if (it == st.sets.end())
        fail(errc::usage, "no fixture named '" + name + "'");
    return it->second;
}

} // namespace hd1
