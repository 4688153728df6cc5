#include "semihom/diagmod.hpp"

#include <sstream>

namespace semihom {

std::size_t ModuleData::dim(int n) const {
    int lo = min_degree(kind);
    if (n < lo || n > truncation)
        return 0;
    auto idx = static_cast<std::size_t>(n - lo);
    return idx < dims.size() ? dims[idx] : 0;
}

std::string ValidationReport::str() const {
    if (ok())
        return "ok";
    std::ostringstream os;
    os << "violation of " << violation->relation << " at degree " << violation->degree;
    if (!violation->detail.empty())
        os << ": " << violation->detail;
    return os.str();
}

namespace {

ValidationReport fail(std::string relation, int degree, std::string detail = {}) {
    return ValidationReport{Violation{std::move(relation), degree, std::move(detail)}};
}

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

ValidationReport check_shapes(const ModuleData& d) {
    int lo = min_degree(d.kind);
    if (d.truncation < lo)
        return fail("shape", d.truncation, "truncation below the minimum degree " + std::to_string(lo));
    if (d.dims.size() != static_cast<std::size_t>(d.truncation - lo + 1))
        return fail("shape", d.truncation, "expected " + std::to_string(d.truncation - lo + 1) + " dimensions, got " +
                                               std::to_string(d.dims.size()));
    for (const auto& [g, m] : d.actions) {
        if (!is_legal(d.kind, g) || g.n > d.truncation)
            return fail("shape", g.n, "generator '" + g.token() + "' is not in " + to_string(d.kind) + " truncated at " +
                                          std::to_string(d.truncation));
        if (m.rows() != d.dim(g.n - 1) || m.cols() != d.dim(g.n))
            return fail("shape", g.n, "action of '" + g.token() + "' is " + shape(m.rows(), m.cols()) + ", expected " +
                                          shape(d.dim(g.n - 1), d.dim(g.n)));
    }
    for (const auto& g : all_generators(d.kind, d.truncation))
        if (!d.actions.contains(g))
            return fail("shape", g.n, "missing action of '" + g.token() + "'");
    return {};
}

}  // namespace

ValidationReport validate(const ModuleData& d) {
    if (auto r = check_shapes(d); !r.ok())
        return r;
    int lo = min_degree(d.kind);
    for (int n = lo + 2; n <= d.truncation; ++n) {
        if (is_chain_kind(d.kind)) {
            auto prod = d.actions.at(GeneratorId::omega_d(n - 1)) * d.actions.at(GeneratorId::omega_d(n));
            if (!prod.is_zero())
                return fail("d d = 0", n, "X(d_" + std::to_string(n - 1) + ") X(d_" + std::to_string(n) + ") != 0");
            continue;
        }
        // Every two-step composite n-2 -> n arising from two different
        // generator pairs is a defining relation of the face category.
        std::map<Morphism, std::pair<std::string, RatMatrix>> seen;
        for (const auto& outer : generators_into(d.kind, n)) {
            for (const auto& inner : generators_into(d.kind, n - 1)) {
                auto comp = compose(generator_morphism(d.kind, outer), generator_morphism(d.kind, inner));
                const Morphism& key = comp.terms().begin()->first;
                RatMatrix value = d.actions.at(inner) * d.actions.at(outer);
                std::string word = "[" + outer.token() + "][" + inner.token() + "]";
                auto [it, fresh] = seen.try_emplace(key, word, value);
                if (!fresh && it->second.second != value) {
                    std::string rel = d.kind == Kind::scube ? "cubical relation" : "simplicial relation";
                    return fail(rel, n, it->second.first + " = " + word + " fails on " + to_string(key));
                }
            }
        }
    }
    return {};
}

DiagramModule::DiagramModule(ModuleData data) : data_(std::move(data)) {
    auto report = validate(data_);
    if (!report.ok())
        throw ModuleError(report.str());
}

DiagramModule trusted_module(ModuleData data) { return DiagramModule(std::move(data), DiagramModule::Trusted{}); }

DiagramModule DiagramModule::zero(Kind kind, int truncation) {
    ModuleData d;
    d.kind = kind;
    d.truncation = truncation;
    int lo = semihom::min_degree(kind);
    if (truncation < lo)
        throw ModuleError("truncation below the minimum degree");
    d.dims.assign(static_cast<std::size_t>(truncation - lo + 1), 0);
    for (const auto& g : all_generators(kind, truncation))
        d.actions.emplace(g, RatMatrix());
    return DiagramModule(std::move(d));
}

std::size_t DiagramModule::total_dim() const {
    std::size_t s = 0;
    for (auto x : data_.dims)
        s += x;
    return s;
}

const RatMatrix& DiagramModule::action(const GeneratorId& g) const {
    auto it = data_.actions.find(g);
    if (it == data_.actions.end())
        throw ModuleError("no action of '" + g.token() + "' in this module");
    return it->second;
}

RatMatrix act(const DiagramModule& x, const Morphism& f) {
    int s = source_of(f);
    int t = target_of(f);
    if (s < x.min_degree() || t > x.truncation())
        throw ModuleError("morphism " + to_string(f) + " leaves the truncation window");
    auto word = generator_word(x.kind(), f);
    RatMatrix out = RatMatrix::identity(x.dim(t));
    // f = g_1 ... g_k acts by X(g_k) ... X(g_1).
    for (const auto& g : word)
        out = x.action(g) * out;
    return out;
}

RatMatrix act(const DiagramModule& x, const LinComb& phi) {
    RatMatrix out(x.dim(phi.source()), x.dim(phi.target()));
    if (phi.source() < x.min_degree() || phi.target() > x.truncation())
        throw ModuleError("linear combination leaves the truncation window");
    for (const auto& [f, c] : phi.terms())
        out += act(x, f) * c;
    return out;
}

namespace {

/// Column j holds the hom_basis coordinates of value(basis[j]).
template <class F>
RatMatrix matrix_on_basis(Kind kind, int from_src, int from_tgt, int to_src, int to_tgt, F&& value) {
    const auto& from = hom_basis(kind, from_src, from_tgt);
    const auto& to = hom_basis(kind, to_src, to_tgt);
    RatMatrix m(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        LinComb image = value(from[j]);
        for (const auto& [h, c] : image.terms())
            m(hom_index(kind, h), j) = c;
    }
    return m;
}

}  // namespace

DiagramModule representable(Kind kind, int c, int truncation) {
    int lo = min_degree(kind);
    if (c < lo || c > truncation)
        throw ModuleError("representable object " + std::to_string(c) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(truncation) + "]");
    ModuleData d;
    d.kind = kind;
    d.truncation = truncation;
    for (int n = lo; n <= truncation; ++n)
        d.dims.push_back(hom_basis(kind, n, c).size());
    for (const auto& g : all_generators(kind, truncation)) {
        Morphism gm = generator_morphism(kind, g);
        d.actions.emplace(g, matrix_on_basis(kind, g.n, c, g.n - 1, c,
                                             [&](const Morphism& phi) { return compose(phi, gm); }));
    }
    return trusted_module(std::move(d));
}

DiagramModule direct_sum(const DiagramModule& x, const DiagramModule& y) {
    if (x.kind() != y.kind() || x.truncation() != y.truncation())
        throw ModuleError("direct sum of modules with different kinds or truncations");
    ModuleData d;
    d.kind = x.kind();
    d.truncation = x.truncation();
    for (int n = x.min_degree(); n <= x.truncation(); ++n)
        d.dims.push_back(x.dim(n) + y.dim(n));
    for (const auto& [g, m] : x.data().actions)
        d.actions.emplace(g, block_diagonal(m, y.action(g)));
    return trusted_module(std::move(d));
}

DiagramModule truncate(const DiagramModule& x, int new_truncation) {
    if (new_truncation > x.truncation() || new_truncation < x.min_degree())
        throw ModuleError("truncation " + std::to_string(new_truncation) + " outside [" +
                          std::to_string(x.min_degree()) + ", " + std::to_string(x.truncation()) + "]");
    ModuleData d;
    d.kind = x.kind();
    d.truncation = new_truncation;
    for (int n = x.min_degree(); n <= new_truncation; ++n)
        d.dims.push_back(x.dim(n));
    for (const auto& [g, m] : x.data().actions)
        if (g.n <= new_truncation)
            d.actions.emplace(g, m);
    return trusted_module(std::move(d));
}

const RatMatrix& ModuleMap::component(int n) const {
    auto idx = n - source.min_degree();
    if (idx < 0 || static_cast<std::size_t>(idx) >= components.size())
        throw ModuleError("no component of the module map in degree " + std::to_string(n));
    return components[static_cast<std::size_t>(idx)];
}

ValidationReport check_map(const ModuleMap& f) {
    const auto& x = f.source;
    const auto& y = f.target;
    if (x.kind() != y.kind() || x.truncation() != y.truncation())
        return fail("shape", 0, "source and target differ in kind or truncation");
    int lo = x.min_degree();
    if (f.components.size() != static_cast<std::size_t>(x.truncation() - lo + 1))
        return fail("shape", x.truncation(), "wrong number of components");
    for (int n = lo; n <= x.truncation(); ++n) {
        const auto& c = f.component(n);
        if (c.rows() != y.dim(n) || c.cols() != x.dim(n))
            return fail("shape", n, "component is " + shape(c.rows(), c.cols()) + ", expected " +
                                        shape(y.dim(n), x.dim(n)));
    }
    for (const auto& g : all_generators(x.kind(), x.truncation())) {
        if (f.component(g.n - 1) * x.action(g) != y.action(g) * f.component(g.n))
            return fail("naturality", g.n, "square for '" + g.token() + "' does not commute");
    }
    return {};
}

namespace {

void require_compatible(const DiagramModule& x, const DiagramModule& y) {
    if (x.kind() != y.kind() || x.truncation() != y.truncation())
        throw ModuleError("modules differ in kind or truncation");
}

}  // namespace

ModuleMap identity_map(const DiagramModule& x) {
    ModuleMap f{x, x, {}};
    for (int n = x.min_degree(); n <= x.truncation(); ++n)
        f.components.push_back(RatMatrix::identity(x.dim(n)));
    return f;
}

ModuleMap zero_map(const DiagramModule& x, const DiagramModule& y) {
    require_compatible(x, y);
    ModuleMap f{x, y, {}};
    for (int n = x.min_degree(); n <= x.truncation(); ++n)
        f.components.emplace_back(y.dim(n), x.dim(n));
    return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    if (!(f.target == g.source))
        throw ModuleError("cannot compose module maps: middle modules differ");
    ModuleMap h{f.source, g.target, {}};
    for (std::size_t k = 0; k < f.components.size(); ++k)
        h.components.push_back(g.components[k] * f.components[k]);
    return h;
}

ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h{direct_sum(f.source, g.source), direct_sum(f.target, g.target), {}};
    for (std::size_t k = 0; k < f.components.size(); ++k)
        h.components.push_back(block_diagonal(f.components[k], g.components[k]));
    return h;
}

ModuleMap truncate(const ModuleMap& f, int new_truncation) {
    ModuleMap h{truncate(f.source, new_truncation), truncate(f.target, new_truncation), {}};
    h.components.assign(f.components.begin(),
                        f.components.begin() + (new_truncation - f.source.min_degree() + 1));
    return h;
}

ModuleMap yoneda_map(Kind kind, const LinComb& g, int truncation) {
    int c = g.source();
    int c2 = g.target();
    ModuleMap f{representable(kind, c, truncation), representable(kind, c2, truncation), {}};
    for (int n = min_degree(kind); n <= truncation; ++n)
        f.components.push_back(matrix_on_basis(kind, n, c, n, c2, [&](const Morphism& phi) {
            return compose(g, LinComb(phi));
        }));
    return f;
}

}  // namespace semihom
