#include "semihom/chainkit.hpp"

namespace semihom {

std::size_t ChainComplex::dim(int n) const {
    if (n < lower || n > truncation)
        return 0;
    return dims[static_cast<std::size_t>(n - lower)];
}

RatMatrix ChainComplex::d(int n) const {
    if (n > truncation)
        throw ComplexError("differential d_" + std::to_string(n) + " lies above the truncation " +
                           std::to_string(truncation));
    if (n <= lower)
        return RatMatrix(dim(n - 1), dim(n));
    return diff[static_cast<std::size_t>(n - lower - 1)];
}

namespace {

ValidationReport fail(std::string relation, int degree, std::string detail) {
    return ValidationReport{Violation{std::move(relation), degree, std::move(detail)}};
}

}  // namespace

ValidationReport validate(const ChainComplex& c) {
    if (c.lower != 0 && c.lower != -1)
        return fail("shape", c.lower, "lower bound must be -1 or 0");
    if (c.truncation < c.lower)
        return fail("shape", c.truncation, "truncation below the lower bound");
    auto count = static_cast<std::size_t>(c.truncation - c.lower + 1);
    if (c.dims.size() != count || c.diff.size() != count - 1)
        return fail("shape", c.truncation, "dimension or differential count does not match the degree range");
    for (int n = c.lower + 1; n <= c.truncation; ++n) {
        const auto& m = c.diff[static_cast<std::size_t>(n - c.lower - 1)];
        if (m.rows() != c.dim(n - 1) || m.cols() != c.dim(n))
            return fail("shape", n, "d_" + std::to_string(n) + " has the wrong shape");
    }
    for (int n = c.lower + 2; n <= c.truncation; ++n)
        if (!(c.d(n - 1) * c.d(n)).is_zero())
            return fail("d d = 0", n, "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
    return {};
}

ChainComplex make_complex(int lower, int truncation, std::vector<std::size_t> dims, std::vector<RatMatrix> diff) {
    ChainComplex c{lower, truncation, std::move(dims), std::move(diff)};
    auto r = validate(c);
    if (!r.ok())
        throw ComplexError(r.str());
    return c;
}

ChainComplex zero_complex(int lower, int truncation) {
    auto count = static_cast<std::size_t>(truncation - lower + 1);
    return make_complex(lower, truncation, std::vector<std::size_t>(count, 0),
                        std::vector<RatMatrix>(count - 1, RatMatrix()));
}

const RatMatrix& ChainMap::component(int n) const {
    int idx = n - source.lower;
    if (idx < 0 || static_cast<std::size_t>(idx) >= components.size())
        throw ComplexError("no chain map component in degree " + std::to_string(n));
    return components[static_cast<std::size_t>(idx)];
}

ValidationReport check_chain_map(const ChainMap& f) {
    const auto& s = f.source;
    const auto& t = f.target;
    if (s.lower != t.lower || s.truncation != t.truncation)
        return fail("shape", s.lower, "source and target have different degree ranges");
    if (f.components.size() != s.dims.size())
        return fail("shape", s.truncation, "wrong number of components");
    for (int n = s.lower; n <= s.truncation; ++n) {
        const auto& m = f.component(n);
        if (m.rows() != t.dim(n) || m.cols() != s.dim(n))
            return fail("shape", n, "component has the wrong shape");
    }
    for (int n = s.lower + 1; n <= s.truncation; ++n)
        if (t.d(n) * f.component(n) != f.component(n - 1) * s.d(n))
            return fail("chain map", n, "d f != f d");
    return {};
}

ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap f{c, c, {}};
    for (auto d : c.dims)
        f.components.push_back(RatMatrix::identity(d));
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target == g.source))
        throw ComplexError("cannot compose chain maps: middle complexes differ");
    ChainMap h{f.source, g.target, {}};
    for (std::size_t k = 0; k < f.components.size(); ++k)
        h.components.push_back(g.components[k] * f.components[k]);
    return h;
}

namespace {

/// Kernel basis of m together with the coordinate selector: for a kernel
/// vector z, z = basis * (selector * z).
struct Kernel {
    RatMatrix basis;
    RatMatrix selector;
};

Kernel kernel_with_selector(const RatMatrix& m) {
    auto [reduced, pivots, rk] = rref(m);
    std::vector<bool> pivot(m.cols(), false);
    for (auto p : pivots)
        pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!pivot[c])
            free.push_back(c);
    Kernel k{RatMatrix(m.cols(), free.size()), RatMatrix(free.size(), m.cols())};
    for (std::size_t j = 0; j < free.size(); ++j) {
        k.basis(free[j], j) = 1;
        k.selector(j, free[j]) = 1;
        for (std::size_t r = 0; r < rk; ++r)
            k.basis(pivots[r], j) = -reduced(r, free[j]);
    }
    return k;
}

}  // namespace

const HomologyDegree& HomologyReport::at(int n) const {
    if (!in_window(n))
        throw ComplexError("homology in degree " + std::to_string(n) + " is outside the window [" +
                           std::to_string(lower) + ", " + std::to_string(upper) + "]");
    return degrees[static_cast<std::size_t>(n - lower)];
}

std::vector<std::size_t> HomologyReport::dims() const {
    std::vector<std::size_t> out;
    for (const auto& h : degrees)
        out.push_back(h.dim);
    return out;
}

HomologyReport homology(const ChainComplex& c) {
    HomologyReport rep;
    rep.lower = c.lower;
    rep.upper = c.truncation - 1;
    for (int n = c.lower; n <= rep.upper; ++n) {
        HomologyDegree h;
        h.degree = n;
        auto ker = kernel_with_selector(c.d(n));
        h.cycles = ker.basis;
        h.boundaries = image_basis(c.d(n + 1));
        // Boundaries in cycle coordinates, then a complement of them.
        RatMatrix b_coords = ker.selector * h.boundaries;
        auto q = quotient(ker.basis.cols(), b_coords);
        h.dim = q.complement.size();
        h.representatives = ker.basis.select_columns(q.complement);
        h.to_homology = q.projection * ker.selector;
        rep.degrees.push_back(std::move(h));
    }
    return rep;
}

std::vector<RatMatrix> homology_map(const ChainMap& f, const HomologyReport& hs, const HomologyReport& ht) {
    std::vector<RatMatrix> out;
    for (int n = hs.lower; n <= hs.upper; ++n)
        out.push_back(ht.at(n).to_homology * f.component(n) * hs.at(n).representatives);
    return out;
}

std::vector<RatMatrix> homology_map(const ChainMap& f) {
    return homology_map(f, homology(f.source), homology(f.target));
}

QuasiIsoVerdict is_quasi_iso(const ChainMap& f) {
    auto hs = homology(f.source);
    auto ht = homology(f.target);
    auto maps = homology_map(f, hs, ht);
    QuasiIsoVerdict v;
    v.lower = hs.lower;
    v.upper = hs.upper;
    for (int n = hs.lower; n <= hs.upper; ++n) {
        const auto& m = maps[static_cast<std::size_t>(n - hs.lower)];
        if (m.rows() != m.cols() || rank(m) != m.rows()) {
            v.holds = false;
            v.failing_degree = n;
            v.detail = "H_" + std::to_string(n) + ": source dim " + std::to_string(m.cols()) + ", target dim " +
                       std::to_string(m.rows()) + ", rank " + std::to_string(rank(m));
            break;
        }
    }
    return v;
}

ChainComplex good_truncation(const ChainComplex& c) {
    if (c.lower != -1)
        throw ComplexError("good truncation needs a complex starting in degree -1");
    ChainComplex t{0, c.truncation, {}, {}};
    auto ker = kernel_with_selector(c.d(0));
    for (int n = 0; n <= c.truncation; ++n)
        t.dims.push_back(n == 0 ? ker.basis.cols() : c.dim(n));
    for (int n = 1; n <= c.truncation; ++n)
        t.diff.push_back(n == 1 ? ker.selector * c.d(1) : c.d(n));
    return t;
}

ChainComplex brutal_truncation(const ChainComplex& c) {
    if (c.lower != -1)
        throw ComplexError("brutal truncation needs a complex starting in degree -1");
    ChainComplex t{0, c.truncation, {}, {}};
    for (int n = 0; n <= c.truncation; ++n)
        t.dims.push_back(c.dim(n));
    for (int n = 1; n <= c.truncation; ++n)
        t.diff.push_back(c.d(n));
    return t;
}

ChainMap good_truncation(const ChainMap& f) {
    ChainMap g{good_truncation(f.source), good_truncation(f.target), {}};
    auto ks = kernel_with_selector(f.source.d(0));
    auto kt = kernel_with_selector(f.target.d(0));
    g.components.push_back(kt.selector * f.component(0) * ks.basis);
    for (int n = 1; n <= f.source.truncation; ++n)
        g.components.push_back(f.component(n));
    return g;
}

ChainMap brutal_truncation(const ChainMap& f) {
    ChainMap g{brutal_truncation(f.source), brutal_truncation(f.target), {}};
    for (int n = 0; n <= f.source.truncation; ++n)
        g.components.push_back(f.component(n));
    return g;
}

ChainMap good_truncation_inclusion(const ChainComplex& c) {
    ChainMap f{good_truncation(c), brutal_truncation(c), {}};
    f.components.push_back(kernel_with_selector(c.d(0)).basis);
    for (int n = 1; n <= c.truncation; ++n)
        f.components.push_back(RatMatrix::identity(c.dim(n)));
    return f;
}

ChainComplex reindex_shift(const ChainComplex& c, int by) {
    if (by != 1 && by != -1)
        throw ComplexError("degree shift must be +1 or -1");
    int lower = c.lower + by;
    if (lower != 0 && lower != -1)
        throw ComplexError("shift would move the lower bound to " + std::to_string(lower));
    return ChainComplex{lower, c.truncation + by, c.dims, c.diff};
}

ChainComplex disk_sphere_complex(int lower, int truncation, const std::vector<Cell>& cells,
                                 const std::vector<RatMatrix>* twist) {
    if (lower != 0 && lower != -1)
        throw ComplexError("lower bound must be -1 or 0");
    auto count = static_cast<std::size_t>(truncation - lower + 1);
    std::vector<std::size_t> dims(count, 0);
    // Basis position of each cell's top and bottom generators.
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (const auto& cell : cells) {
        int top = cell.n;
        int bottom = cell.type == Cell::Type::disk ? cell.n - 1 : cell.n;
        if (bottom < lower || top > truncation)
            throw ComplexError("cell in degree " + std::to_string(cell.n) + " does not fit in [" +
                               std::to_string(lower) + ", " + std::to_string(truncation) + "]");
        std::size_t p_top = dims[static_cast<std::size_t>(top - lower)]++;
        std::size_t p_bottom = cell.type == Cell::Type::disk ? dims[static_cast<std::size_t>(bottom - lower)]++ : 0;
        pos.emplace_back(p_top, p_bottom);
    }
    std::vector<RatMatrix> diff;
    for (int n = lower + 1; n <= truncation; ++n)
        diff.emplace_back(dims[static_cast<std::size_t>(n - 1 - lower)], dims[static_cast<std::size_t>(n - lower)]);
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (cells[k].type == Cell::Type::disk)
            diff[static_cast<std::size_t>(cells[k].n - lower - 1)](pos[k].second, pos[k].first) = 1;
    if (twist) {
        if (twist->size() != count)
            throw ComplexError("twist needs one matrix per degree");
        std::vector<RatMatrix> inv;
        for (std::size_t k = 0; k < count; ++k) {
            const auto& p = (*twist)[k];
            if (p.rows() != dims[k] || p.cols() != dims[k])
                throw ComplexError("twist matrix in degree " + std::to_string(lower + static_cast<int>(k)) +
                                   " has the wrong size");
            auto pi = inverse(p);
            if (!pi)
                throw ComplexError("twist matrix in degree " + std::to_string(lower + static_cast<int>(k)) +
                                   " is singular");
            inv.push_back(std::move(*pi));
        }
        for (std::size_t k = 0; k + 1 < count; ++k)
            diff[k] = (*twist)[k] * diff[k] * inv[k + 1];
    }
    return make_complex(lower, truncation, std::move(dims), std::move(diff));
}

DiagramModule to_module(const ChainComplex& c) {
    ModuleData d;
    d.kind = c.lower == -1 ? Kind::chain_neg1 : Kind::chain0;
    d.truncation = c.truncation;
    d.dims = c.dims;
    for (int n = c.lower + 1; n <= c.truncation; ++n)
        d.actions.emplace(GeneratorId::omega_d(n), c.d(n));
    return DiagramModule(std::move(d));
}

ChainComplex to_complex(const DiagramModule& x) {
    if (!is_chain_kind(x.kind()))
        throw ComplexError("module of kind " + to_string(x.kind()) + " is not a chain complex");
    ChainComplex c{x.min_degree(), x.truncation(), x.data().dims, {}};
    for (int n = c.lower + 1; n <= c.truncation; ++n)
        c.diff.push_back(x.action(GeneratorId::omega_d(n)));
    return c;
}

ChainMap to_chain_map(const ModuleMap& f) {
    return ChainMap{to_complex(f.source), to_complex(f.target), f.components};
}

ModuleMap to_module_map(const ChainMap& f) {
    return ModuleMap{to_module(f.source), to_module(f.target), f.components};
}

}  // namespace semihom
