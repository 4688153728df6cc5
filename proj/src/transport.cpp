#include "semihom/transport.hpp"

#include <functional>

namespace semihom {

// ---------------------------------------------------------------- restriction

DiagramModule restrict_module(Functor u, const DiagramModule& x) {
    if (u != Functor::u_delta && u != Functor::u_a && u != Functor::u_square && u != Functor::v)
        throw TransportError("restriction along " + to_string(u) + " is not supported");
    if (x.kind() != functor_target(u))
        throw TransportError("restriction along " + to_string(u) + " needs a module of kind " +
                             to_string(functor_target(u)) + ", got " + to_string(x.kind()));
    Kind src = functor_source(u);
    int lo = min_degree(src);
    int top = x.truncation();
    while (top >= lo && functor_object(u, top) > x.truncation())
        --top;
    if (top < lo)
        throw TransportError("truncation too small to restrict along " + to_string(u));
    ModuleData d;
    d.kind = src;
    d.truncation = top;
    for (int n = lo; n <= top; ++n)
        d.dims.push_back(x.dim(functor_object(u, n)));
    for (const auto& g : all_generators(src, top))
        d.actions.emplace(g, act(x, apply_functor(u, g)));
    return DiagramModule(std::move(d));
}

ChainComplex restrict(Functor u, const DiagramModule& x) {
    if (u != Functor::u_delta && u != Functor::u_square)
        throw TransportError("restricted complexes are taken along u_delta or u_square");
    return to_complex(restrict_module(u, x));
}

ChainComplex augmented_chain(const DiagramModule& x) {
    if (x.kind() != Kind::aug_ssimp)
        throw TransportError("augmented complex needs an aug_ssimp module, got " + to_string(x.kind()));
    return to_complex(restrict_module(Functor::u_a, x));
}

DiagramModule restrict_v(const DiagramModule& x) { return restrict_module(Functor::v, x); }

// ---------------------------------------------------------------- coends

namespace {

/// The coend of a right module M over B against a covariant "right factor"
/// F, built from objects <= top.  Coordinates of block c are pairs (j, k)
/// with j a basis index of M(c) and k one of F(c).
class Coend {
public:
    using FactorDim = std::function<std::size_t(int)>;
    using FactorAction = std::function<const RatMatrix&(const GeneratorId&)>;

    Coend(const DiagramModule& m, int top, FactorDim fdim, const FactorAction& faction, bool snapshot_below_top)
        : m_(&m), top_(top), fdim_(std::move(fdim)) {
        int lo = m.min_degree();
        std::size_t off = 0;
        for (int c = lo; c <= top; ++c) {
            offsets_.push_back(off);
            off += m.dim(c) * fdim_(c);
        }
        offsets_.push_back(off);
        echelon_.emplace(off);
        for (int c2 = lo + 1; c2 <= top; ++c2) {
            if (snapshot_below_top && c2 == top)
                take_snapshot();
            for (const auto& g : generators_into(m.kind(), c2))
                add_relations(g, faction(g));
        }
        if (snapshot_below_top && !snapshot_)
            take_snapshot();
        finish();
    }

    int lower() const { return m_->min_degree(); }
    std::size_t dim() const { return free_.size(); }
    std::size_t ambient() const { return offsets_.back(); }
    const std::vector<std::size_t>& free_columns() const { return free_; }

    std::size_t coordinate(int c, std::size_t j, std::size_t k) const {
        return offsets_[static_cast<std::size_t>(c - lower())] + j * fdim_(c) + k;
    }

    struct Decoded {
        int object;
        std::size_t j;
        std::size_t k;
    };
    Decoded decode(std::size_t coord) const {
        std::size_t b = static_cast<std::size_t>(std::upper_bound(offsets_.begin(), offsets_.end(), coord) -
                                                 offsets_.begin()) - 1;
        int c = lower() + static_cast<int>(b);
        std::size_t rel = coord - offsets_[b];
        std::size_t fd = fdim_(c);
        return {c, rel / fd, rel % fd};
    }

    /// Coordinates of the class of v in the basis given by free_columns().
    std::vector<std::pair<std::size_t, Rational>> class_of(SparseRow v) const {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        auto r = echelon_->reduce(std::move(v));
        std::vector<std::pair<std::size_t, Rational>> out;
        for (auto& [c, x] : r)
            out.emplace_back(free_index_[c], std::move(x));
        return out;
    }

    /// Free columns of the coend built from objects <= top - 1; they index a
    /// basis of that smaller coend, and lie in the prefix of blocks < top.
    const std::vector<std::size_t>& snapshot_free() const { return snapshot_free_; }

private:
    void add_relations(const GeneratorId& g, const RatMatrix& fg) {
        int c2 = g.n;
        int c = c2 - 1;
        const RatMatrix& mg = m_->action(g);  // M(c2) -> M(c)
        std::size_t fc = fdim_(c);
        std::size_t fc2 = fdim_(c2);
        for (std::size_t j = 0; j < m_->dim(c2); ++j) {
            for (std::size_t k = 0; k < fc; ++k) {
                SparseRow v;
                for (std::size_t i = 0; i < mg.rows(); ++i)
                    if (!mg(i, j).is_zero())
                        v.emplace_back(coordinate(c, i, k), mg(i, j));
                for (std::size_t k2 = 0; k2 < fc2; ++k2)
                    if (!fg(k2, k).is_zero())
                        v.emplace_back(coordinate(c2, j, k2), -fg(k2, k));
                if (!v.empty())
                    echelon_->insert(std::move(v));
            }
        }
    }

    void take_snapshot() {
        snapshot_ = true;
        std::size_t prefix_end = top_ > lower() ? offsets_[static_cast<std::size_t>(top_ - lower())] : 0;
        for (std::size_t c = 0; c < prefix_end; ++c)
            if (!echelon_->is_pivot(c))
                snapshot_free_.push_back(c);
    }

    void finish() {
        free_ = echelon_->free_columns();
        free_index_.assign(ambient(), 0);
        for (std::size_t i = 0; i < free_.size(); ++i)
            free_index_[free_[i]] = i;
    }

    const DiagramModule* m_;
    int top_;
    FactorDim fdim_;
    std::vector<std::size_t> offsets_;
    std::optional<SparseEchelon> echelon_;
    std::vector<std::size_t> free_;
    std::vector<std::size_t> free_index_;
    bool snapshot_ = false;
    std::vector<std::size_t> snapshot_free_;
};

RatMatrix to_dense_column_matrix(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& cols,
                                 std::size_t rows) {
    RatMatrix out(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, x] : cols[j])
            out(r, j) = x;
    return out;
}

/// Matrix of postcomposition phi |-> f after phi from hom(a, s) to hom(a, t).
RatMatrix postcomposition(Kind kind, int a, const LinComb& f) {
    const auto& from = hom_basis(kind, a, f.source());
    const auto& to = hom_basis(kind, a, f.target());
    RatMatrix m(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j)
    {
        LinComb image = compose(f, LinComb(from[j]));
        for (const auto& [h, c] : image.terms())
            m(hom_index(kind, h), j) = c;
    }
    return m;
}

/// Induction data for every target degree up to the target truncation.
struct InductionData {
    Functor u;
    Kind target_kind;
    int target_top = 0;
    std::vector<Coend> degrees;  // indexed a - min_degree(target_kind)
    int window_upper = 0;

    const Coend& at(int a) const { return degrees[static_cast<std::size_t>(a - min_degree(target_kind))]; }
};

InductionData build_induction(Functor u, const DiagramModule& m) {
    if (u != Functor::u_delta && u != Functor::u_a && u != Functor::v)
        throw TransportError("induction along " + to_string(u) + " is not supported");
    if (m.kind() != functor_source(u))
        throw TransportError("induction along " + to_string(u) + " needs a module of kind " +
                             to_string(functor_source(u)) + ", got " + to_string(m.kind()));
    Kind tk = functor_target(u);
    InductionData data{u, tk, functor_object(u, m.truncation()), {}, 0};
    std::map<GeneratorId, LinComb> images;
    for (const auto& g : all_generators(m.kind(), m.truncation()))
        images.emplace(g, apply_functor(u, g));
    int ta = min_degree(tk);
    std::optional<int> window;
    for (int a = ta; a <= data.target_top; ++a) {
        auto fdim = [u, tk, a](int c) -> std::size_t {
            int uc = functor_object(u, c);
            return uc < a ? 0 : hom_basis(tk, a, uc).size();
        };
        std::map<GeneratorId, RatMatrix> factor;
        for (const auto& [g, img] : images) {
            int s = functor_object(u, g.n - 1);
            factor.emplace(g, s < a ? RatMatrix(fdim(g.n), 0) : postcomposition(tk, a, img));
        }
        data.degrees.emplace_back(m, m.truncation(), fdim, [&factor](const GeneratorId& g) -> const RatMatrix& {
            return factor.at(g);
        }, true);
        const Coend& big = data.degrees.back();
        // Natural map from the smaller coend; the window ends where it
        // stops being an isomorphism.
        if (!window) {
            const auto& small = big.snapshot_free();
            bool iso = small.size() == big.dim();
            if (iso && !small.empty()) {
                std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
                for (auto c : small)
                    cols.push_back(big.class_of({{c, Rational(1)}}));
                iso = rank(to_dense_column_matrix(cols, big.dim())) == big.dim();
            }
            if (!iso)
                window = a - 1;
        }
    }
    data.window_upper = window.value_or(data.target_top);
    if (data.window_upper < ta)
        throw TransportError("induction along " + to_string(u) + " has an empty stability window");
    return data;
}

}  // namespace

InductionResult induce(Functor u, const DiagramModule& m) {
    auto data = build_induction(u, m);
    Kind tk = data.target_kind;
    int ta = min_degree(tk);
    int w = data.window_upper;
    ModuleData d;
    d.kind = tk;
    d.truncation = w;
    std::vector<std::vector<PresentationLabel>> presentation;
    for (int a = ta; a <= w; ++a) {
        const Coend& co = data.at(a);
        d.dims.push_back(co.dim());
        std::vector<PresentationLabel> labels;
        for (auto col : co.free_columns()) {
            auto [c, j, k] = co.decode(col);
            labels.push_back({c, hom_basis(tk, a, functor_object(u, c))[k], j});
        }
        presentation.push_back(std::move(labels));
    }
    for (const auto& h : all_generators(tk, w)) {
        int a = h.n;
        Morphism hm = generator_morphism(tk, h);
        const Coend& hi = data.at(a);
        const Coend& lo = data.at(a - 1);
        std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
        for (auto col : hi.free_columns()) {
            auto [c, j, k] = hi.decode(col);
            const auto& phi = hom_basis(tk, a, functor_object(u, c))[k];
            SparseRow v;
            LinComb restricted = compose(phi, hm);
            for (const auto& [term, coeff] : restricted.terms())
                v.emplace_back(lo.coordinate(c, j, hom_index(tk, term)), coeff);
            cols.push_back(lo.class_of(std::move(v)));
        }
        d.actions.emplace(h, to_dense_column_matrix(cols, lo.dim()));
    }
    return InductionResult{DiagramModule(std::move(d)), ta, w, std::move(presentation)};
}

ModuleMap unit_map(Functor u, const DiagramModule& m) {
    auto data = build_induction(u, m);
    auto induced = induce(u, m).module;
    auto back = restrict_module(u, induced);
    auto src = truncate(m, back.truncation());
    ModuleMap eta{src, back, {}};
    for (int b = src.min_degree(); b <= src.truncation(); ++b) {
        int ub = functor_object(u, b);
        const Coend& co = data.at(ub);
        const std::size_t id_index = 0;  // hom(ub, ub) is spanned by the identity
        std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
        for (std::size_t j = 0; j < src.dim(b); ++j)
            cols.push_back(co.class_of({{co.coordinate(b, j, id_index), Rational(1)}}));
        eta.components.push_back(to_dense_column_matrix(cols, co.dim()));
    }
    return eta;
}

ModuleMap counit_map(Functor u, const DiagramModule& x) {
    auto m = restrict_module(u, x);
    auto res = induce(u, m);
    auto tgt = truncate(x, res.window_upper);
    ModuleMap eps{res.module, tgt, {}};
    Kind tk = functor_target(u);
    for (int a = min_degree(tk); a <= res.window_upper; ++a) {
        const auto& labels = res.presentation[static_cast<std::size_t>(a - min_degree(tk))];
        RatMatrix comp(x.dim(a), labels.size());
        for (std::size_t col = 0; col < labels.size(); ++col) {
            RatMatrix xphi = act(x, labels[col].morphism);
            for (std::size_t r = 0; r < comp.rows(); ++r)
                comp(r, col) = xphi(r, labels[col].index);
        }
        eps.components.push_back(std::move(comp));
    }
    return eps;
}

// ---------------------------------------------------------------- left modules

std::size_t LeftModule::dim(int n) const {
    int lo = min_degree();
    if (n < lo || n > truncation)
        return 0;
    return dims[static_cast<std::size_t>(n - lo)];
}

ValidationReport validate(const LeftModule& l) {
    auto fail = [](std::string rel, int n, std::string detail) {
        return ValidationReport{Violation{std::move(rel), n, std::move(detail)}};
    };
    int lo = l.min_degree();
    if (l.dims.size() != static_cast<std::size_t>(l.truncation - lo + 1))
        return fail("shape", l.truncation, "wrong number of dimensions");
    for (const auto& g : all_generators(l.kind, l.truncation)) {
        auto it = l.actions.find(g);
        if (it == l.actions.end())
            return fail("shape", g.n, "missing action of '" + g.token() + "'");
        if (it->second.rows() != l.dim(g.n) || it->second.cols() != l.dim(g.n - 1))
            return fail("shape", g.n, "action of '" + g.token() + "' has the wrong shape");
    }
    for (int n = lo + 2; n <= l.truncation; ++n) {
        if (is_chain_kind(l.kind)) {
            if (!(l.actions.at(GeneratorId::omega_d(n)) * l.actions.at(GeneratorId::omega_d(n - 1))).is_zero())
                return fail("d d = 0", n, "L(d_n) L(d_{n-1}) != 0");
            continue;
        }
        std::map<Morphism, RatMatrix> seen;
        for (const auto& outer : generators_into(l.kind, n))
            for (const auto& inner : generators_into(l.kind, n - 1)) {
                auto key = compose(generator_morphism(l.kind, outer), generator_morphism(l.kind, inner))
                               .terms().begin()->first;
                RatMatrix value = l.actions.at(outer) * l.actions.at(inner);
                auto [it, fresh] = seen.try_emplace(key, value);
                if (!fresh && it->second != value)
                    return fail("covariant relation", n, "fails on " + to_string(key));
            }
    }
    return {};
}

LeftModule left_representable(Kind kind, int c, int truncation) {
    LeftModule l{kind, truncation, {}, {}};
    for (int n = min_degree(kind); n <= truncation; ++n)
        l.dims.push_back(c <= n ? hom_basis(kind, c, n).size() : 0);
    for (const auto& g : all_generators(kind, truncation)) {
        if (c > g.n - 1) {
            l.actions.emplace(g, RatMatrix(l.dim(g.n), 0));
            continue;
        }
        l.actions.emplace(g, postcomposition(kind, c, LinComb(generator_morphism(kind, g))));
    }
    return l;
}

LeftModuleMap left_yoneda_map(Kind kind, const LinComb& phi, int truncation) {
    int c = phi.source();
    int c2 = phi.target();
    LeftModuleMap f{left_representable(kind, c2, truncation), left_representable(kind, c, truncation), {}};
    for (int n = min_degree(kind); n <= truncation; ++n) {
        RatMatrix comp(f.target.dim(n), f.source.dim(n));
        if (c2 <= n) {
            const auto& from = hom_basis(kind, c2, n);
            for (std::size_t j = 0; j < from.size(); ++j)
            {
                LinComb image = compose(LinComb(from[j]), phi);
                for (const auto& [h, x] : image.terms())
                    comp(hom_index(kind, h), j) = x;
            }
        }
        f.components.push_back(std::move(comp));
    }
    return f;
}

std::string to_string(CoefficientId c) {
    switch (c) {
    case CoefficientId::k_point: return "k_point";
    case CoefficientId::k_constant: return "k_constant";
    case CoefficientId::k_constant_shifted: return "k_constant_shifted";
    case CoefficientId::k_point_neg1: return "k_point_neg1";
    }
    return "?";
}

CoefficientId parse_coefficient(std::string_view text) {
    for (auto c : {CoefficientId::k_point, CoefficientId::k_constant, CoefficientId::k_constant_shifted,
                   CoefficientId::k_point_neg1})
        if (text == to_string(c))
            return c;
    throw TransportError("unknown coefficient '" + std::string(text) + "'");
}

bool is_legal_pairing(Kind kind, CoefficientId c) {
    switch (c) {
    case CoefficientId::k_point: return kind == Kind::chain0;
    case CoefficientId::k_constant: return kind == Kind::ssimp || kind == Kind::scube;
    case CoefficientId::k_constant_shifted: return kind == Kind::aug_ssimp;
    case CoefficientId::k_point_neg1: return kind == Kind::chain_neg1;
    }
    return false;
}

LeftModule coefficient_module(Kind kind, CoefficientId c, int truncation) {
    bool legal = is_legal_pairing(kind, c) || (kind == Kind::chain0 && c == CoefficientId::k_constant);
    if (!legal)
        throw TransportError("coefficient " + to_string(c) + " is not defined over " + to_string(kind));
    LeftModule l{kind, truncation, {}, {}};
    int lo = min_degree(kind);
    for (int n = lo; n <= truncation; ++n) {
        std::size_t d = 1;
        if (c == CoefficientId::k_point)
            d = n == 0 ? 1 : 0;
        else if (c == CoefficientId::k_point_neg1)
            d = n == -1 ? 1 : 0;
        else if (c == CoefficientId::k_constant_shifted)
            d = n >= 0 ? 1 : 0;
        l.dims.push_back(d);
    }
    for (const auto& g : all_generators(kind, truncation)) {
        RatMatrix m(l.dim(g.n), l.dim(g.n - 1));
        if (!m.empty()) {
            if (kind == Kind::chain0)
                m(0, 0) = g.n % 2 == 0 ? 1 : 0;  // sum of (-1)^i over i in [0, n]
            else
                m(0, 0) = 1;
        }
        l.actions.emplace(g, std::move(m));
    }
    return l;
}

// ---------------------------------------------------------------- tensor and Tor

namespace {

Coend tensor_coend(const DiagramModule& x, const LeftModule& l) {
    if (x.kind() != l.kind)
        throw TransportError("tensor product of modules over different algebras");
    int top = std::min(x.truncation(), l.truncation);
    return Coend(x, top, [&l](int c) { return l.dim(c); },
                 [&l](const GeneratorId& g) -> const RatMatrix& { return l.actions.at(g); }, false);
}

}  // namespace

std::size_t tensor_dim(const DiagramModule& x, const LeftModule& l) { return tensor_coend(x, l).dim(); }

RatMatrix tensor_map(const DiagramModule& x, const LeftModuleMap& f) {
    auto src = tensor_coend(x, f.source);
    auto tgt = tensor_coend(x, f.target);
    int lo = x.min_degree();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
    for (auto col : src.free_columns()) {
        auto [c, j, k] = src.decode(col);
        const auto& fc = f.components[static_cast<std::size_t>(c - lo)];
        SparseRow v;
        for (std::size_t r = 0; r < fc.rows(); ++r)
            if (!fc(r, k).is_zero())
                v.emplace_back(tgt.coordinate(c, j, r), fc(r, k));
        cols.push_back(tgt.class_of(std::move(v)));
    }
    return to_dense_column_matrix(cols, tgt.dim());
}

RatMatrix tensor_map(const ModuleMap& f, const LeftModule& l) {
    auto src = tensor_coend(f.source, l);
    auto tgt = tensor_coend(f.target, l);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
    for (auto col : src.free_columns()) {
        auto [c, j, k] = src.decode(col);
        const auto& fc = f.component(c);
        SparseRow v;
        for (std::size_t r = 0; r < fc.rows(); ++r)
            if (!fc(r, j).is_zero())
                v.emplace_back(tgt.coordinate(c, r, k), fc(r, j));
        cols.push_back(tgt.class_of(std::move(v)));
    }
    return to_dense_column_matrix(cols, tgt.dim());
}

Resolution resolution(Kind kind, CoefficientId c, int truncation) {
    if (!is_legal_pairing(kind, c))
        throw TransportError("no resolution of " + to_string(c) + " over " + to_string(kind) +
                             " is available for Tor");
    Resolution res{{}, {}, {}};
    // Object of P_j and the differential d_j : obj(j-1) -> obj(j).
    int shift = c == CoefficientId::k_point_neg1 ? -1 : 0;
    int top_j = truncation - shift;
    auto differential = [&](int j) -> LinComb {
        int n = j + shift;
        switch (kind) {
        case Kind::ssimp: return apply_functor(Functor::u_delta, GeneratorId::omega_d(n));
        case Kind::aug_ssimp: return apply_functor(Functor::u_a, GeneratorId::omega_d(n));
        case Kind::scube: return apply_functor(Functor::u_square, GeneratorId::omega_d(n));
        default: return LinComb(OmegaMap::d(n));
        }
    };
    for (int j = 0; j <= top_j; ++j)
        res.terms.push_back(left_representable(kind, j + shift, truncation));
    for (int j = 1; j <= top_j; ++j)
        res.diffs.push_back(left_yoneda_map(kind, differential(j), truncation));
    auto coeff = coefficient_module(kind, c, truncation);
    res.augmentation = LeftModuleMap{res.terms.front(), coeff, {}};
    for (int n = min_degree(kind); n <= truncation; ++n) {
        RatMatrix m(coeff.dim(n), res.terms.front().dim(n));
        if (coeff.dim(n) == 1)
            for (std::size_t k = 0; k < m.cols(); ++k)
                m(0, k) = 1;
        res.augmentation.components.push_back(std::move(m));
    }
    return res;
}

ChainComplex tor_complex(const DiagramModule& x, CoefficientId c) {
    auto res = resolution(x.kind(), c, x.truncation());
    ChainComplex t{0, static_cast<int>(res.terms.size()) - 1, {}, {}};
    for (const auto& p : res.terms)
        t.dims.push_back(tensor_dim(x, p));
    for (const auto& d : res.diffs)
        t.diff.push_back(tensor_map(x, d));
    auto r = validate(t);
    if (!r.ok())
        throw TransportError("Tor complex is not a complex: " + r.str());
    return t;
}

HomologyReport tor(const DiagramModule& x, CoefficientId c) { return homology(tor_complex(x, c)); }

ChainMap tor_chain_map(const ModuleMap& f, CoefficientId c) {
    auto res = resolution(f.source.kind(), c, f.source.truncation());
    ChainMap out{tor_complex(f.source, c), tor_complex(f.target, c), {}};
    for (const auto& p : res.terms)
        out.components.push_back(tensor_map(f, p));
    return out;
}

bool LowDegreeSequence::exact() const {
    if (!(second * first).is_zero() || !(third * second).is_zero())
        return false;
    std::size_t r1 = rank(first);
    std::size_t r2 = rank(second);
    std::size_t r3 = rank(third);
    return r1 == h0_tau && r1 + r2 == tor0 && r2 + r3 == x_neg1 && r3 == h_neg1;
}

LowDegreeSequence low_degree_sequence(const DiagramModule& x) {
    auto c = augmented_chain(x);
    if (c.truncation < 1)
        throw TransportError("low-degree sequence needs truncation at least 1");
    auto incl = good_truncation_inclusion(c);
    auto h_tau = homology(incl.source);
    auto h_brutal = homology(incl.target);
    LowDegreeSequence s;
    s.h0_tau = h_tau.dim(0);
    s.tor0 = h_brutal.dim(0);
    s.x_neg1 = c.dim(-1);
    s.first = homology_map(incl, h_tau, h_brutal).front();
    s.second = c.d(0) * h_brutal.at(0).representatives;
    s.third = quotient_map(c.dim(-1), c.d(0));
    s.h_neg1 = s.third.rows();
    return s;
}

}  // namespace semihom
