#include "hd1/grid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "hd1/error.hpp"

namespace hd1 {

namespace {

constexpr std::array<uint8_t, 8> kMask = {
    0b001,  // A = {0}
    0b010,  // B = {1}
    0b100,  // C = {2}
    0b110,  // X = {1,2}
    0b101,  // Y = {0,2}
    0b011,  // Z = {0,1}
    0b000,  // Empty
    0b111,  // Full
};

constexpr std::array<char, 8> kChar = {'A', 'B', 'C', 'X', 'Y', 'Z', '.', 'F'};

} // namespace

uint8_t label_mask(CellLabel l) { return kMask[size_t(l)]; }

CellLabel label_from_mask(uint8_t mask) {
    for (int i = 0; i < 8; ++i)
        if (kMask[size_t(i)] == (mask & 0b111)) return CellLabel(i);
    fail(errc::decode, "no cell label for mask " + std::to_string(int(mask)));
}

char label_char(CellLabel l) { return kChar[size_t(l)]; }

CellLabel label_from_char(char c) {
    for (int i = 0; i < 8; ++i)
        if (kChar[size_t(i)] == c) return CellLabel(i);
    fail(errc::parse, std::string("unknown cell character '") + c + "'");
}

std::string LabelGrid::cell_string() const {
    std::string out;
    out.reserve(cells.size());
    for (CellLabel l : cells) out.push_back(label_char(l));
    return out;
}

std::string LabelGrid::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["collapse_axis"] = collapse_axis;
    j["cells"] = cell_string();
    return j.dump();
}

LabelGrid LabelGrid::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return from_cells(j.at("m").get<int>(), j.at("cells").get<std::string>(),
                      j.value("collapse_axis", 1));
}

LabelGrid LabelGrid::from_cells(int m, const std::string& cells, int axis) {
    if (m < 0 || m + 1 > kMaxDim)
        fail(errc::dimension, "grid dimension out of range: " + std::to_string(m));
    if (int(cells.size()) != pow3(m))
        fail(errc::parse, "grid of dimension " + std::to_string(m) + " needs " +
                              std::to_string(pow3(m)) + " cells, got " +
                              std::to_string(cells.size()));
    LabelGrid g;
    g.m = m;
    g.collapse_axis = axis;
    g.cells.reserve(cells.size());
    for (char c : cells) g.cells.push_back(label_from_char(c));
    return g;
}

LabelGrid collapse(const VertexSet& s, int axis) {
    const int n = s.n();
    if (n < 1) fail(errc::dimension, "cannot collapse a 0-dimensional set");
    if (axis < 1 || axis > n)
        fail(errc::dimension, "collapse axis " + std::to_string(axis) +
                                  " out of range for dimension " + std::to_string(n));
    const int lowmod = pow3(axis - 1);
    LabelGrid g;
    g.m = n - 1;
    g.collapse_axis = axis;
    std::vector<uint8_t> masks(size_t(pow3(n - 1)), 0);
    for (int v = 0; v < pow3(n); ++v) {
        if (!s.test(v)) continue;
        const int low = v % lowmod;
        const int a = (v / lowmod) % 3;
        const int high = v / (lowmod * 3);
        masks[size_t(low + high * lowmod)] |= uint8_t(1u << a);
    }
    g.cells.reserve(masks.size());
    for (uint8_t mk : masks) g.cells.push_back(label_from_mask(mk));
    return g;
}

VertexSet expand(const LabelGrid& g) {
    const int n = g.m + 1;
    const int t = g.collapse_axis;
    if (t < 1 || t > n)
        fail(errc::dimension, "collapse axis " + std::to_string(t) +
                                  " out of range for dimension " + std::to_string(n));
    const int lowmod = pow3(t - 1);
    VertexSet s(n);
    for (int idx = 0; idx < pow3(g.m); ++idx) {
        const uint8_t mk = label_mask(g.cells[size_t(idx)]);
        if (!mk) continue;
        const int low = idx % lowmod;
        const int high = idx / lowmod;
        for (int a = 0; a < 3; ++a)
            if (mk & (1u << a)) s.set(low + a * lowmod + high * lowmod * 3);
    }
    return s;
}

namespace {

// Both neighbours of `idx` along grid direction t (1-based), nearer one first.
inline void grid_line(int idx, int t, int* n1, int* n2) {
    const int step = pow3(t - 1);
    const int a = (idx / step) % 3;
    *n1 = idx + (((a + 1) % 3) - a) * step;
    *n2 = idx + (((a + 2) % 3) - a) * step;
}

std::string cell_coords(const LabelGrid& g, int idx) {
    std::ostringstream os;
    os << '(';
    for (int t = 1; t <= g.m; ++t) {
        if (t > 1) os << ',';
        os << (idx / pow3(t - 1)) % 3;
    }
    os << ')';
    return os.str();
}

} // namespace

Degree1Report validate_degree1(const LabelGrid& g) {
    Degree1Report r;
    const int cellcount = pow3(g.m);
    for (int idx = 0; idx < cellcount; ++idx) {
        const uint8_t mk = label_mask(g.cells[size_t(idx)]);
        if (mk == 0b111) {
            r.ok = false;
            r.rule = "full-cell";
            r.cell_idx = {idx};
            r.message = "cell " + cell_coords(g, idx) + " holds all three values";
            return r;
        }
        const int pop = std::popcount(unsigned(mk));
        if (pop == 2) {
            // A two-value cell already has internal degree 1 at both of its
            // points, so no neighbouring cell may repeat either value.
            for (int t = 1; t <= g.m; ++t) {
                int n1, n2;
                grid_line(idx, t, &n1, &n2);
                for (int nb : {n1, n2}) {
                    if (label_mask(g.cells[size_t(nb)]) & mk) {
                        r.ok = false;
                        r.rule = "pair-overlap";
                        r.cell_idx = {idx, nb};
                        r.message = "two-value cell " + cell_coords(g, idx) +
                                    " shares a value with " + cell_coords(g, nb);
                        return r;
                    }
                }
            }
        } else if (pop == 1) {
            // A singleton's point tolerates one neighbour with the same value,
            // but a second one (or a two-value neighbour, handled for the
            // earliest-index report) pushes its degree past 1.
            int first_hit = -1;
            for (int t = 1; t <= g.m; ++t) {
                int n1, n2;
                grid_line(idx, t, &n1, &n2);
                for (int nb : {n1, n2}) {
                    const uint8_t nm = label_mask(g.cells[size_t(nb)]);
                    if (!(nm & mk)) continue;
                    if (std::popcount(unsigned(nm)) >= 2) {
                        r.ok = false;
                        r.rule = "pair-overlap";
                        r.cell_idx = {idx, nb};
                        r.message = "cell " + cell_coords(g, idx) +
                                    " shares its value with two-value cell " +
                                    cell_coords(g, nb);
                        return r;
                    }
                    if (first_hit < 0) {
                        first_hit = nb;
                    } else {
                        r.ok = false;
                        r.rule = "value-shared-twice";
                        r.cell_idx = {idx, first_hit, nb};
                        r.message = "cell " + cell_coords(g, idx) +
                                    " repeats its value at " + cell_coords(g, first_hit) +
                                    " and " + cell_coords(g, nb);
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

bool grid_is_saturated(const LabelGrid& g) {
    return std::none_of(g.cells.begin(), g.cells.end(),
                        [](CellLabel l) { return l == CellLabel::Empty; });
}

std::vector<int> extra_cells(const LabelGrid& g) {
    std::vector<int> out;
    for (int idx = 0; idx < pow3(g.m); ++idx)
        if (std::popcount(unsigned(label_mask(g.cells[size_t(idx)]))) == 2)
            out.push_back(idx);
    return out;
}

int extra_point(const LabelGrid& g) {
    const std::vector<int> ex = extra_cells(g);
    if (ex.size() != 1)
        fail(errc::structure, "expected exactly one two-value cell, found " +
                                  std::to_string(ex.size()));
    return ex[0];
}

CanonicalPath canonical_path(const LabelGrid& g, const Point& start, const PathPolicy& policy) {
    if (start.n != g.m) fail(errc::dimension, "start point dimension mismatch");
    std::vector<int> order = policy.priority;
    if (order.empty()) {
        order.resize(size_t(g.m));
        for (int t = 1; t <= g.m; ++t) order[size_t(t - 1)] = t;
    } else {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        bool perm = int(sorted.size()) == g.m;
        for (int t = 1; perm && t <= g.m; ++t) perm = sorted[size_t(t - 1)] == t;
        if (!perm)
            fail(errc::precondition,
                 "path policy must be a permutation of 1.." + std::to_string(g.m));
    }

    CanonicalPath path;
    int here = point_index(start);
    path.steps.push_back(start);
    const int cap = pow3(g.m);
    for (int moves = 0; moves < cap; ++moves) {
        const CellLabel mine = g.cells[size_t(here)];
        int next = -1;
        for (int t : order) {
            int n1, n2;
            grid_line(here, t, &n1, &n2);
            if (g.cells[size_t(n1)] == mine) {
                next = n2;
                break;
            }
            if (g.cells[size_t(n2)] == mine) {
                next = n1;
                break;
            }
        }
        if (next < 0) {
            path.terminated = true;
            return path;
        }
        here = next;
        path.steps.push_back(point_at(here, g.m));
    }
    return path;  // cap hit, terminated stays false
}

CanonicalCheck is_canonical(const VertexSet& s) {
    CanonicalCheck chk;
    const int n = s.n();
    if (n < 1) fail(errc::dimension, "canonicity needs dimension >= 1");
    if (s.size() < size_t(pow3(n - 1)) + 1) return chk;
    if (max_induced_degree(s) > 1) return chk;
    const std::vector<Point> members = s.points();
    for (const CosetParams& cp : enumerate_coset_params(n)) {
        bool disjoint = true;
        for (const Point& p : members) {
            int sum = 0;
            for (int i = 0; i < n; ++i) sum += cp.b[size_t(i)] * p.x[size_t(i)];
            if (sum % 3 == cp.c) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) {
            chk.canonical = true;
            chk.witness = cp;
            return chk;
        }
    }
    return chk;
}

int popular_direction(const VertexSet& s) {
    const int n = s.n();
    if (n < 3)
        fail(errc::degeneracy, "popular direction needs dimension >= 3, got " +
                                   std::to_string(n));
    const int want = pow3(n - 2);
    int found = 0, where = 0;
    for (int k = 1; k <= n; ++k) {
        if (count_two_point_lines(s, k) == want) {
            ++found;
            where = k;
        }
    }
    if (found != 1)
        fail(errc::degeneracy, std::to_string(found) +
                                   " directions reach the two-point line count " +
                                   std::to_string(want));
    return where;
}

std::vector<int> AffineSubset::free_directions() const {
    std::vector<int> out;
    size_t fi = 0;
    for (int t = 1; t <= n; ++t) {
        if (fi < fixed.size() && fixed[fi].first == t)
            ++fi;
        else
            out.push_back(t);
    }
    return out;
}

bool AffineSubset::contains(const Point& p) const {
    for (const auto& [t, v] : fixed)
        if (p.x[size_t(t - 1)] != v) return false;
    return true;
}

namespace {

void check_affine(const AffineSubset& h) {
    int prev = 0;
    for (const auto& [t, v] : h.fixed) {
        if (t <= prev) fail(errc::precondition, "fixed coordinates must be sorted and distinct");
        if (t > h.n) fail(errc::dimension, "fixed coordinate out of range");
        if (v > 2) fail(errc::precondition, "fixed value out of range");
        prev = t;
    }
}

} // namespace

VertexSet restrict_set(const VertexSet& s, const AffineSubset& h) {
    if (h.n != s.n()) fail(errc::dimension, "affine subset dimension mismatch");
    check_affine(h);
    const std::vector<int> dirs = h.free_directions();
    VertexSet out(int(dirs.size()));
    for (const Point& p : s.points()) {
        if (!h.contains(p)) continue;
        Point q;
        q.n = int(dirs.size());
        for (size_t i = 0; i < dirs.size(); ++i) q.x[i] = p.x[size_t(dirs[i] - 1)];
        out.set(point_index(q));
    }
    return out;
}

LabelGrid restrict_grid(const LabelGrid& g, const AffineSubset& h) {
    if (h.n != g.m) fail(errc::dimension, "affine subset dimension mismatch");
    check_affine(h);
    const std::vector<int> dirs = h.free_directions();
    LabelGrid out;
    out.m = int(dirs.size());
    out.collapse_axis = g.collapse_axis;
    out.cells.resize(size_t(pow3(out.m)), CellLabel::Empty);
    for (int idx = 0; idx < pow3(out.m); ++idx) {
        int full = 0;
        for (size_t i = 0; i < dirs.size(); ++i)
            full += ((idx / pow3(int(i))) % 3) * pow3(dirs[i] - 1);
        for (const auto& [t, v] : h.fixed) full += int(v) * pow3(t - 1);
        out.cells[size_t(idx)] = g.cells[size_t(full)];
    }
    return out;
}

LabelGrid lift(const LabelGrid& g) {
    if (g.m + 2 > kMaxDim) fail(errc::dimension, "lift exceeds the supported dimension");
    // Images under the new first coordinate taking values 0, 1, 2. Singletons
    // rotate so each value appears once per line; two-value cells keep the
    // extra point at level 0 and continue with the missing value's singleton.
    static constexpr std::array<std::array<CellLabel, 3>, 6> kLift = {{
        {CellLabel::A, CellLabel::C, CellLabel::B},
        {CellLabel::B, CellLabel::A, CellLabel::C},
        {CellLabel::C, CellLabel::B, CellLabel::A},
        {CellLabel::X, CellLabel::A, CellLabel::A},
        {CellLabel::Y, CellLabel::B, CellLabel::B},
        {CellLabel::Z, CellLabel::C, CellLabel::C},
    }};
    LabelGrid out;
    out.m = g.m + 1;
    out.collapse_axis = g.collapse_axis;
    out.cells.resize(size_t(pow3(out.m)));
    for (int idx = 0; idx < pow3(g.m); ++idx) {
        const CellLabel l = g.cells[size_t(idx)];
        if (l == CellLabel::Empty || l == CellLabel::Full)
            fail(errc::precondition, "lift needs a saturated grid without full cells");
        for (int a = 0; a < 3; ++a)
            out.cells[size_t(a + 3 * idx)] = kLift[size_t(l)][size_t(a)];
    }
    return out;
}

std::string render_grid(const LabelGrid& g) {
    std::ostringstream os;
    if (g.m == 0) {
        os << label_char(g.cells[0]) << '\n';
        return os.str();
    }
    const int blocks = g.m >= 2 ? pow3(g.m - 2) : 1;
    const int rows = g.m >= 2 ? 3 : 1;
    for (int blk = 0; blk < blocks; ++blk) {
        if (blk) os << '\n';
        for (int row = 0; row < rows; ++row) {
            for (int col = 0; col < 3; ++col)
                os << label_char(g.cells[size_t(col + 3 * row + 9 * blk)]);
            os << '\n';
        }
    }
    return os.str();
}

LabelGrid parse_grid(const std::string& text, int collapse_axis) {
    std::string letters;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) letters.push_back(c);
    int m = 0;
    while (m + 1 < kMaxDim && pow3(m) < int(letters.size())) ++m;
    if (pow3(m) != int(letters.size()))
        fail(errc::parse, "grid text has " + std::to_string(letters.size()) +
                              " cells, not a power of three");
    return LabelGrid::from_cells(m, letters, collapse_axis);
}

std::string render_set(const VertexSet& s) {
    const int n = s.n();
    if (n < 1 || n > 6) fail(errc::dimension, "set rendering supports dimensions 1..6");
    auto coord = [&](const std::array<int, 6>& c, int t) { return t <= n ? c[size_t(t - 1)] : 0; };
    auto limit = [&](int t) { return t <= n ? 3 : 1; };
    std::ostringstream os;
    std::array<int, 6> c{};
    for (c[5] = 0; c[5] < limit(6); ++c[5]) {
        if (c[5]) os << "\n\n";
        for (c[3] = 0; c[3] < limit(4); ++c[3]) {
            if (c[3]) os << '\n';
            for (c[1] = 0; c[1] < limit(2); ++c[1]) {
                for (c[4] = 0; c[4] < limit(5); ++c[4]) {
                    if (c[4]) os << "   ";
                    for (c[2] = 0; c[2] < limit(3); ++c[2]) {
                        if (c[2]) os << ' ';
                        for (c[0] = 0; c[0] < limit(1); ++c[0]) {
                            Point p;
                            p.n = n;
                            for (int t = 1; t <= n; ++t) p.x[size_t(t - 1)] = uint8_t(coord(c, t));
                            os << (s.test(point_index(p)) ? '#' : '.');
                        }
                    }
                }
                os << '\n';
            }
        }
    }
    return os.str();
}

} // namespace hd1
