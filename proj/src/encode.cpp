#include "hd1/encode.hpp"

#include <algorithm>
#include <set>

#include "hd1/error.hpp"

namespace hd1 {

namespace {

void check_grid_dim(int m, int lo = 1) {
    if (m < lo || m + 1 > kMaxDim)
        fail(errc::dimension, "grid dimension out of range: " + std::to_string(m));
}

// add_clause with duplicate suppression up to literal order
struct DedupSink {
    CnfFormula& f;
    std::set<std::vector<int>> seen;

    void add(std::vector<int> cl) {
        std::vector<int> key = cl;
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second) f.add_clause(std::move(cl));
    }
};

void exactly_one_label(CnfFormula& f, int cell) {
    std::vector<int> any;
    for (int l = 0; l < kLabelCount; ++l) any.push_back(grid_var(cell, CellLabel(l)));
    f.add_clause(any);
    for (int l = 0; l < kLabelCount; ++l)
        for (int k = l + 1; k < kLabelCount; ++k)
            f.add_clause({-grid_var(cell, CellLabel(l)), -grid_var(cell, CellLabel(k))});
}

} // namespace

CnfFormula encode_grid_deg1(int m) {
    check_grid_dim(m);
    CnfFormula f;
    f.ensure_vars(6 * pow3(m));
    const int cells = pow3(m);
    for (int x = 0; x < cells; ++x) exactly_one_label(f, x);

    std::vector<int> nbr(size_t(2 * m));
    DedupSink sink{f, {}};
    for (int x = 0; x < cells; ++x) {
        const int deg = neighbor_indices(x, m, nbr.data());
        // no label may appear at x and at two of its neighbours
        for (int i = 0; i < deg; ++i)
            for (int j = i + 1; j < deg; ++j)
                for (int l = 0; l < kLabelCount; ++l)
                    sink.add({-grid_var(x, CellLabel(l)), -grid_var(nbr[size_t(i)], CellLabel(l)),
                              -grid_var(nbr[size_t(j)], CellLabel(l))});
        // a two-value cell pins each neighbour to the complementary singleton
        for (int i = 0; i < deg; ++i) {
            const int y = nbr[size_t(i)];
            sink.add({-grid_var(x, CellLabel::X), grid_var(y, CellLabel::A)});
            sink.add({-grid_var(x, CellLabel::Y), grid_var(y, CellLabel::B)});
            sink.add({-grid_var(x, CellLabel::Z), grid_var(y, CellLabel::C)});
        }
    }
    return f;
}

CnfFormula encode_vertex_deg1(int n) {
    if (n < 1 || n > kMaxDim)
        fail(errc::dimension, "dimension out of range: " + std::to_string(n));
    CnfFormula f;
    f.ensure_vars(pow3(n));
    std::vector<int> nbr(size_t(2 * n));
    DedupSink sink{f, {}};
    for (int x = 0; x < pow3(n); ++x) {
        const int deg = neighbor_indices(x, n, nbr.data());
        for (int i = 0; i < deg; ++i)
            for (int j = i + 1; j < deg; ++j)
                sink.add({-vertex_var(x), -vertex_var(nbr[size_t(i)]), -vertex_var(nbr[size_t(j)])});
    }
    return f;
}

CnfFormula encode_skew(int m, int skew_dir) {
    if (m < 2 || m > 6)
        fail(errc::dimension, "skew encoding supports grid dimensions 2..6, got " +
                                  std::to_string(m));
    if (skew_dir < 1 || skew_dir > m)
        fail(errc::dimension, "skew direction out of range: " + std::to_string(skew_dir));
    CnfFormula f = encode_grid_deg1(m);
    f.add_clause({grid_var(0, CellLabel::X)});
    // In each plane through the origin spanned by the skew direction and
    // another coordinate, the degree-1 rules plus the X at the origin force
    // the four off-axis corners to two B's and two C's; the restriction is
    // canonical exactly when the B's share a line, so block those patterns.
    for (int j = 1; j <= m; ++j) {
        if (j == skew_dir) continue;
        const int si = pow3(skew_dir - 1), sj = pow3(j - 1);
        auto corner = [&](int a, int b) { return a * si + b * sj; };
        const int c11 = corner(1, 1), c12 = corner(1, 2);
        const int c21 = corner(2, 1), c22 = corner(2, 2);
        const auto B = CellLabel::B, C = CellLabel::C;
        f.add_clause({-grid_var(c11, B), -grid_var(c12, B), -grid_var(c21, C), -grid_var(c22, C)});
        f.add_clause({-grid_var(c21, B), -grid_var(c22, B), -grid_var(c11, C), -grid_var(c12, C)});
        f.add_clause({-grid_var(c11, B), -grid_var(c21, B), -grid_var(c12, C), -grid_var(c22, C)});
        f.add_clause({-grid_var(c12, B), -grid_var(c22, B), -grid_var(c11, C), -grid_var(c21, C)});
    }
    return f;
}

std::vector<int> grid_projection(int m) {
    check_grid_dim(m);
    std::vector<int> vars(size_t(6 * pow3(m)));
    for (size_t i = 0; i < vars.size(); ++i) vars[i] = int(i) + 1;
    return vars;
}

std::vector<int> vertex_projection(int n) {
    if (n < 1 || n > kMaxDim)
        fail(errc::dimension, "dimension out of range: " + std::to_string(n));
    std::vector<int> vars(size_t(pow3(n)));
    for (size_t i = 0; i < vars.size(); ++i) vars[i] = int(i) + 1;
    return vars;
}

namespace {

LabelGrid grid_from_lookup(int m, int axis, const std::vector<uint8_t>& truth, int offset) {
    LabelGrid g;
    g.m = m;
    g.collapse_axis = axis;
    g.cells.resize(size_t(pow3(m)));
    for (int x = 0; x < pow3(m); ++x) {
        int found = -1;
        for (int l = 0; l < kLabelCount; ++l) {
            if (!truth[size_t(grid_var(x, CellLabel(l)) + offset)]) continue;
            if (found >= 0)
                fail(errc::structure, "model assigns two labels to cell " + std::to_string(x));
            found = l;
        }
        if (found < 0) fail(errc::structure, "model assigns no label to cell " + std::to_string(x));
        g.cells[size_t(x)] = CellLabel(found);
    }
    return g;
}

} // namespace

LabelGrid decode_grid(const std::vector<uint8_t>& model, int m, int collapse_axis) {
    check_grid_dim(m);
    if (int(model.size()) < 6 * pow3(m) + 1)
        fail(errc::decode, "model too short for a grid of dimension " + std::to_string(m));
    return grid_from_lookup(m, collapse_axis, model, 0);
}

VertexSet decode_set(const std::vector<uint8_t>& model, int n) {
    if (int(model.size()) < pow3(n) + 1)
        fail(errc::decode, "model too short for dimension " + std::to_string(n));
    VertexSet s(n);
    for (int x = 0; x < pow3(n); ++x)
        if (model[size_t(vertex_var(x))]) s.set(x);
    return s;
}

LabelGrid decode_grid_projected(const std::vector<uint8_t>& proj, int m, int collapse_axis) {
    check_grid_dim(m);
    if (int(proj.size()) != 6 * pow3(m))
        fail(errc::decode, "projected model has the wrong width");
    // projected entry i corresponds to variable i+1: shift lookup by -1
    std::vector<uint8_t> padded(proj.size() + 1, 0);
    std::copy(proj.begin(), proj.end(), padded.begin() + 1);
    return grid_from_lookup(m, collapse_axis, padded, 0);
}

VertexSet decode_set_projected(const std::vector<uint8_t>& proj, int n) {
    if (int(proj.size()) != pow3(n))
        fail(errc::decode, "projected model has the wrong width");
    VertexSet s(n);
    for (int x = 0; x < pow3(n); ++x)
        if (proj[size_t(x)]) s.set(x);
    return s;
}

} // namespace hd1
