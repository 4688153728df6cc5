#include "semihom/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "semihom/io.hpp"

namespace semihom {

using nlohmann::json;

namespace {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}
    int pick(int lo, int hi) {
        return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    template <class T>
    const T& choose(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(pick(0, static_cast<int>(v.size()) - 1))];
    }
};

RatMatrix random_invertible(std::size_t n, Rng& rng) {
    RatMatrix l = RatMatrix::identity(n);
    RatMatrix u = RatMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) {
            l(r, c) = rng.pick(-2, 2);
            u(c, r) = rng.pick(-2, 2);
        }
    return l * u;
}

/// Degreewise change of basis X(g) -> P_{n-1} X(g) P_n^{-1}.
DiagramModule conjugate(const DiagramModule& x, Rng& rng) {
    std::vector<RatMatrix> p;
    std::vector<RatMatrix> p_inv;
    for (int n = x.min_degree(); n <= x.truncation(); ++n) {
        p.push_back(random_invertible(x.dim(n), rng));
        p_inv.push_back(*inverse(p.back()));
    }
    ModuleData d = x.data();
    int lo = x.min_degree();
    for (auto& [g, m] : d.actions)
        m = p[static_cast<std::size_t>(g.n - 1 - lo)] * m * p_inv[static_cast<std::size_t>(g.n - lo)];
    return DiagramModule(std::move(d));
}

bool fits(const DiagramModule& x, std::size_t max_dim) {
    if (x.dim(x.truncation()) != 0)
        return false;
    for (auto d : x.data().dims)
        if (d > max_dim)
            return false;
    return true;
}

std::string describe_cells(const std::vector<Cell>& cells) {
    std::string s;
    for (const auto& c : cells) {
        if (!s.empty())
            s += " ";
        s += (c.type == Cell::Type::disk ? "D" : "S") + std::to_string(c.n);
    }
    return s;
}

ChainComplex random_complex(int lower, int top_cell, Rng& rng, std::string& name) {
    std::vector<Cell> cells;
    int count = rng.pick(1, 3);
    for (int k = 0; k < count; ++k) {
        if (rng.pick(0, 1) == 0)
            cells.push_back(Cell::sphere(rng.pick(lower, top_cell)));
        else
            cells.push_back(Cell::disk(rng.pick(lower + 1, top_cell)));
    }
    name = describe_cells(cells);
    int truncation = top_cell + 1;
    auto plain = disk_sphere_complex(lower, truncation, cells);
    std::vector<RatMatrix> twist;
    for (auto d : plain.dims)
        twist.push_back(random_invertible(d, rng));
    return disk_sphere_complex(lower, truncation, cells, &twist);
}

ChainComplex pad(const ChainComplex& c, int truncation) {
    ChainComplex out = c;
    while (out.truncation < truncation) {
        ++out.truncation;
        out.dims.push_back(0);
        out.diff.emplace_back(out.dim(out.truncation - 1), 0);
    }
    return out;
}

std::vector<int> fitting_objects(Kind kind, int truncation, std::size_t max_dim) {
    std::vector<int> out;
    for (int c = min_degree(kind); c < truncation; ++c)
        if (fits(representable(kind, c, truncation), max_dim))
            out.push_back(c);
    return out;
}

ModuleMap inclusion_left(const DiagramModule& x, const DiagramModule& y, const DiagramModule& sum) {
    ModuleMap f{x, sum, {}};
    for (int n = x.min_degree(); n <= x.truncation(); ++n)
        f.components.push_back(RatMatrix::identity(x.dim(n)).vstack(RatMatrix(y.dim(n), x.dim(n))));
    return f;
}

ModuleMap projection(const DiagramModule& x, const DiagramModule& y, const DiagramModule& sum, bool left) {
    ModuleMap f{sum, left ? x : y, {}};
    for (int n = x.min_degree(); n <= x.truncation(); ++n) {
        RatMatrix ix = left ? RatMatrix::identity(x.dim(n)) : RatMatrix(y.dim(n), x.dim(n));
        RatMatrix iy = left ? RatMatrix(x.dim(n), y.dim(n)) : RatMatrix::identity(y.dim(n));
        f.components.push_back(ix.hstack(iy));
    }
    return f;
}

LinComb random_lincomb(Kind kind, int c, int c2, Rng& rng) {
    LinComb phi(c, c2);
    for (const auto& h : hom_basis(kind, c, c2))
        phi.add(h, rng.pick(-2, 2));
    return phi;
}

}  // namespace

void check_spec(const CorpusSpec& spec, int max_truncation) {
    if (spec.truncation < 2)
        throw std::invalid_argument("corpus truncation must be at least 2");
    if (spec.truncation > max_truncation)
        throw std::invalid_argument("corpus truncation " + std::to_string(spec.truncation) + " exceeds the cap " +
                                    std::to_string(max_truncation));
    if (spec.max_dim == 0)
        throw std::invalid_argument("max_dim must be positive");
}

Corpus generate_corpus(const CorpusSpec& spec) {
    check_spec(spec, spec.truncation);
    Rng rng(spec.seed);
    const int n_top = spec.truncation;
    const std::vector<Kind> kinds{Kind::ssimp, Kind::aug_ssimp, Kind::scube};
    std::map<Kind, std::vector<int>> objects;
    for (auto k : kinds)
        objects[k] = fitting_objects(k, n_top, spec.max_dim);
    Corpus corpus;

    for (std::size_t i = 0; i < spec.representables; ++i) {
        Kind k = kinds[i % kinds.size()];
        int c = rng.choose(objects[k]);
        corpus.modules.push_back(
            {"representable " + to_string(k) + " at " + std::to_string(c), representable(k, c, n_top)});
    }

    const std::vector<Functor> routes{Functor::u_delta, Functor::u_a, Functor::v};
    for (std::size_t i = 0; i < spec.induced; ++i) {
        Functor u = routes[i % routes.size()];
        bool done = false;
        for (int attempt = 0; attempt < 64 && !done; ++attempt) {
            std::string label;
            DiagramModule source = DiagramModule::zero(functor_source(u), n_top);
            if (u == Functor::v) {
                auto pick_rep = [&]() {
                    int c = rng.pick(-1, std::min(1, n_top - 2));
                    label += (label.empty() ? "" : " + ") + std::string("rep ") + std::to_string(c);
                    return representable(Kind::aug_ssimp, c, n_top - 1);
                };
                source = pick_rep();
                if (rng.pick(0, 1) == 1)
                    source = direct_sum(source, pick_rep());
                source = conjugate(source, rng);
            } else {
                int lower = u == Functor::u_a ? -1 : 0;
                source = to_module(pad(random_complex(lower, n_top - 1, rng, label), n_top));
            }
            if (attempt == 63 && u != Functor::v) {
                label = "S" + std::to_string(u == Functor::u_a ? -1 : 0);
                source = to_module(disk_sphere_complex(u == Functor::u_a ? -1 : 0, n_top,
                                                       {Cell::sphere(u == Functor::u_a ? -1 : 0)}));
            }
            try {
                auto res = induce(u, source);
                if (res.window_upper != functor_object(u, source.truncation()) || !fits(res.module, spec.max_dim))
                    continue;
                corpus.sources.push_back({u, corpus.modules.size(), source});
                corpus.modules.push_back({to_string(u) + "_! of [" + label + "]", res.module});
                done = true;
            } catch (const TransportError&) {
            }
        }
    }

    std::size_t base = corpus.modules.size();
    for (std::size_t i = 0; i < spec.direct_sums && base > 0; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto a = static_cast<std::size_t>(rng.pick(0, static_cast<int>(base) - 1));
            auto b = static_cast<std::size_t>(rng.pick(0, static_cast<int>(base) - 1));
            const auto& x = corpus.modules[a].module;
            const auto& y = corpus.modules[b].module;
            if (x.kind() != y.kind() || x.truncation() != y.truncation())
                continue;
            auto s = direct_sum(x, y);
            if (!fits(s, spec.max_dim))
                continue;
            corpus.sums.push_back({corpus.modules.size(), a, b});
            corpus.modules.push_back({"sum of #" + std::to_string(a) + " and #" + std::to_string(b), s});
            break;
        }
    }

    // Yoneda maps come in composable pairs c -> c' -> c''.
    std::optional<std::pair<Kind, int>> previous;
    for (std::size_t i = 0; i < spec.yoneda_maps; ++i) {
        Kind k = kinds[(i / 2) % kinds.size()];
        int c = 0;
        if (i % 2 == 1 && previous)
            c = previous->second;
        else
            c = rng.choose(objects[k]);
        std::vector<int> targets;
        for (int t : objects[k])
            if (t >= c)
                targets.push_back(t);
        int c2 = rng.choose(targets);
        auto phi = random_lincomb(k, c, c2, rng);
        corpus.maps.push_back({"yoneda " + to_string(k) + " " + std::to_string(c) + "->" + std::to_string(c2) +
                                   " by " + (phi.is_zero() ? std::string("0") : phi.str()),
                               yoneda_map(k, phi, n_top)});
        previous = std::make_pair(k, c2);
    }
    for (const auto& rec : corpus.sums) {
        const auto& x = corpus.modules[rec.left_index].module;
        const auto& y = corpus.modules[rec.right_index].module;
        const auto& s = corpus.modules[rec.sum_index].module;
        std::string tag = "#" + std::to_string(rec.sum_index);
        corpus.maps.push_back({"inclusion into " + tag, inclusion_left(x, y, s)});
        corpus.maps.push_back({"left projection of " + tag, projection(x, y, s, true)});
        corpus.maps.push_back({"right projection of " + tag, projection(x, y, s, false)});
    }
    for (std::size_t i = 0; i < corpus.modules.size() && i < 3; ++i) {
        const auto& x = corpus.modules[i].module;
        corpus.maps.push_back({"identity of #" + std::to_string(i), identity_map(x)});
        corpus.maps.push_back({"zero endomorphism of #" + std::to_string(i), zero_map(x, x)});
    }
    return corpus;
}

// ---------------------------------------------------------------- predicates

namespace {

bool invertible(const RatMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// The map of restricted modules u* f.
ModuleMap restricted_map(Functor u, const ModuleMap& f) {
    ModuleMap g{restrict_module(u, f.source), restrict_module(u, f.target), {}};
    for (int n = g.source.min_degree(); n <= g.source.truncation(); ++n)
        g.components.push_back(f.component(functor_object(u, n)));
    return g;
}

/// H_n(f) is an isomorphism for every n >= from in the window, decided by
/// ranks: equal dimensions and f(Z_n(C)) + B_n(D) = Z_n(D).
bool homology_iso_by_ranks(const ChainMap& f, int from, std::string& detail) {
    const auto& s = f.source;
    const auto& t = f.target;
    for (int n = std::max(from, s.lower); n < s.truncation; ++n) {
        RatMatrix zs = kernel_basis(s.d(n));
        RatMatrix zt = kernel_basis(t.d(n));
        RatMatrix bs = image_basis(s.d(n + 1));
        RatMatrix bt = image_basis(t.d(n + 1));
        std::size_t hs = zs.cols() - bs.cols();
        std::size_t ht = zt.cols() - bt.cols();
        RatMatrix hit = (f.component(n) * zs).hstack(bt);
        if (hs != ht || rank(hit) != zt.cols()) {
            detail = "H_" + std::to_string(n) + ": source dim " + std::to_string(hs) + ", target dim " +
                     std::to_string(ht);
            return false;
        }
    }
    return true;
}

bool homology_iso_from(const ChainMap& f, int from, std::string& detail) {
    auto hs = homology(f.source);
    auto ht = homology(f.target);
    auto maps = homology_map(f, hs, ht);
    for (int n = std::max(from, hs.lower); n <= hs.upper; ++n) {
        const auto& m = maps[static_cast<std::size_t>(n - hs.lower)];
        if (!invertible(m)) {
            detail = "H_" + std::to_string(n) + ": source dim " + std::to_string(m.cols()) + ", target dim " +
                     std::to_string(m.rows()) + ", rank " + std::to_string(rank(m));
            return false;
        }
    }
    return true;
}

struct Condition {
    std::string name;
    bool holds = false;
    std::string detail;
};

WeqVerdict summarize(std::vector<Condition> conds, int lower, int upper) {
    WeqVerdict v;
    v.lower = lower;
    v.upper = upper;
    v.holds = conds.front().holds;
    for (const auto& c : conds) {
        v.conditions.emplace_back(c.name, c.holds);
        if (c.holds != v.holds)
            v.agree = false;
        if (!c.holds && v.witness.empty())
            v.witness = c.name + ": " + c.detail;
    }
    return v;
}

WeqVerdict augmented_weq(const ModuleMap& f) {
    auto full = to_chain_map(restricted_map(Functor::u_a, f));
    if (full.source.truncation < 1)
        throw TransportError("augmented weak equivalences need truncation at least 1");
    auto tau = good_truncation(full);
    std::string d_neg1;
    std::string d_tau0;
    auto full_maps = homology_map(full);
    bool h_neg1 = invertible(full_maps.front());
    if (!h_neg1)
        d_neg1 = "H^a_-1 not an isomorphism";
    auto tau_maps = homology_map(tau);
    bool h0_tau = invertible(tau_maps.front());
    if (!h0_tau)
        d_tau0 = "H_0(tau) not an isomorphism";

    std::vector<Condition> conds;
    auto q_tau = is_quasi_iso(tau);
    conds.push_back({"tau_quasi_iso_and_h_neg1", q_tau.holds && h_neg1, q_tau.holds ? d_neg1 : q_tau.detail});
    auto q_full = is_quasi_iso(full);
    conds.push_back({"augmented_complex_quasi_iso", q_full.holds, q_full.detail});
    std::string d3;
    bool tor_hi = homology_iso_from(tor_chain_map(f, CoefficientId::k_constant_shifted), 1, d3);
    conds.push_back({"tor_k_constant_shifted", tor_hi && h0_tau && h_neg1,
                     !tor_hi ? "Tor " + d3 : (!h0_tau ? d_tau0 : d_neg1)});
    std::string d4;
    auto brutal = to_module_map(brutal_truncation(full));
    bool tor_omega = homology_iso_from(tor_chain_map(brutal, CoefficientId::k_point), 1, d4);
    conds.push_back({"tor_omega_of_brutal_truncation", tor_omega && h0_tau && h_neg1,
                     !tor_omega ? "Tor " + d4 : (!h0_tau ? d_tau0 : d_neg1)});
    return summarize(std::move(conds), full.source.lower, q_full.upper);
}

}  // namespace

WeqVerdict check_weak_equivalence(const ModuleMap& f) {
    Kind k = f.source.kind();
    if (is_chain_kind(k)) {
        auto q = is_quasi_iso(to_chain_map(f));
        return summarize({{"quasi_iso", q.holds, q.detail}}, q.lower, q.upper);
    }
    if (k == Kind::aug_ssimp)
        return augmented_weq(f);

    Functor u = k == Kind::ssimp ? Functor::u_delta : Functor::u_square;
    auto r = to_chain_map(restricted_map(u, f));
    std::vector<Condition> conds;
    auto q = is_quasi_iso(r);
    conds.push_back({"restricted_quasi_iso", q.holds, q.detail});
    std::string d2;
    conds.push_back({"restricted_homology_iso", homology_iso_by_ranks(r, 0, d2), d2});
    std::string d3;
    conds.push_back({"tor_k_constant", homology_iso_from(tor_chain_map(f, CoefficientId::k_constant), 0, d3), d3});
    std::string d4;
    conds.push_back({"tor_omega_of_restriction",
                     homology_iso_from(tor_chain_map(to_module_map(r), CoefficientId::k_point), 0, d4), d4});
    if (k == Kind::scube) {
        auto shadow = augmented_weq(restricted_map(Functor::v, f));
        conds.push_back({"sign_shadow_weq", shadow.holds, shadow.witness});
    }
    return summarize(std::move(conds), q.lower, q.upper);
}

FibVerdict check_fibration(const ModuleMap& f) {
    Kind k = f.source.kind();
    ChainMap c;
    switch (k) {
    case Kind::ssimp: c = to_chain_map(restricted_map(Functor::u_delta, f)); break;
    case Kind::aug_ssimp: c = to_chain_map(restricted_map(Functor::u_a, f)); break;
    case Kind::scube: c = to_chain_map(restricted_map(Functor::u_a, restricted_map(Functor::v, f))); break;
    default: c = to_chain_map(f); break;
    }
    FibVerdict v;
    v.holds = true;
    for (int n = c.source.lower; n <= c.source.truncation; ++n) {
        const auto& m = c.component(n);
        std::size_t r = rank(m);
        if (r != m.rows()) {
            v.holds = false;
            v.failing_degree = n;
            v.witness = "degree " + std::to_string(n) + ": rank " + std::to_string(r) + " < target dim " +
                        std::to_string(m.rows());
            break;
        }
    }
    return v;
}

// ---------------------------------------------------------------- reports

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::expected_failure: return "expected_failure";
    case Verdict::unexpected_pass: return "unexpected_pass";
    case Verdict::recorded: return "recorded";
    }
    return "?";
}

namespace {

Verdict parse_verdict(const std::string& s) {
    for (auto v : {Verdict::pass, Verdict::fail, Verdict::expected_failure, Verdict::unexpected_pass,
                   Verdict::recorded})
        if (s == to_string(v))
            return v;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

bool VerificationReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.verdict == Verdict::fail || c.verdict == Verdict::unexpected_pass;
    });
}

json report_to_json(const VerificationReport& r, bool with_timing) {
    json j;
    j["format"] = kReportFormat;
    j["seed"] = r.seed;
    j["truncation"] = r.truncation;
    j["ok"] = r.ok();
    json summary = json::object();
    json checks = json::array();
    for (const auto& c : r.checks) {
        auto& s = summary[c.name];
        if (s.is_null())
            for (auto v : {Verdict::pass, Verdict::fail, Verdict::expected_failure, Verdict::unexpected_pass,
                           Verdict::recorded})
                s[to_string(v)] = 0;
        s[to_string(c.verdict)] = s[to_string(c.verdict)].get<int>() + 1;
        json e;
        e["name"] = c.name;
        e["instance"] = c.instance;
        e["verdict"] = to_string(c.verdict);
        e["window"] = c.window;
        e["witness"] = c.witness;
        if (with_timing)
            e["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(e));
    }
    j["summary"] = std::move(summary);
    j["checks"] = std::move(checks);
    return j;
}

VerificationReport report_from_json(const json& j) {
    if (!j.is_object() || j.value("format", std::string()) != kReportFormat)
        throw std::invalid_argument("report: not a " + std::string(kReportFormat) + " document");
    VerificationReport r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.truncation = j.at("truncation").get<int>();
    for (const auto& e : j.at("checks")) {
        CheckResult c;
        c.name = e.at("name").get<std::string>();
        c.instance = e.at("instance").get<std::string>();
        c.verdict = parse_verdict(e.at("verdict").get<std::string>());
        c.window = e.at("window").get<std::string>();
        c.witness = e.at("witness");
        c.elapsed_ms = e.value("elapsed_ms", 0.0);
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string report_table(const VerificationReport& r) {
    std::vector<std::string> names;
    std::map<std::string, std::map<Verdict, int>> counts;
    for (const auto& c : r.checks) {
        if (!counts.contains(c.name))
            names.push_back(c.name);
        ++counts[c.name][c.verdict];
    }
    std::size_t width = 5;
    for (const auto& n : names)
        width = std::max(width, n.size());
    std::ostringstream os;
    auto cell = [&os](const std::string& s, std::size_t w) { os << s << std::string(w > s.size() ? w - s.size() : 0, ' '); };
    cell("check", width + 2);
    os << "pass  fail  expected  unexpected  recorded\n";
    for (const auto& n : names) {
        auto& m = counts[n];
        cell(n, width + 2);
        cell(std::to_string(m[Verdict::pass]), 6);
        cell(std::to_string(m[Verdict::fail]), 6);
        cell(std::to_string(m[Verdict::expected_failure]), 10);
        cell(std::to_string(m[Verdict::unexpected_pass]), 12);
        os << m[Verdict::recorded] << "\n";
    }
    bool header = false;
    for (const auto& c : r.checks) {
        if (c.verdict == Verdict::pass || c.verdict == Verdict::recorded)
            continue;
        if (!header) {
            os << "\n";
            header = true;
        }
        os << to_string(c.verdict) << ": " << c.name << " [" << c.instance << "] window " << c.window << "\n  "
           << c.witness.dump() << "\n";
    }
    os << "\n" << (r.ok() ? "OK" : "FAILED") << "\n";
    return os.str();
}

// ---------------------------------------------------------------- checks

namespace {

std::string window_str(int lo, int hi) { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }

CheckResult result(std::string name, std::string instance, bool ok, std::string window, json witness = json::object()) {
    return {std::move(name), std::move(instance), ok ? Verdict::pass : Verdict::fail, std::move(window),
            std::move(witness), 0};
}

template <class F>
CheckResult timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r = f();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

json weq_json(const WeqVerdict& v) {
    json j;
    j["holds"] = v.holds;
    j["agree"] = v.agree;
    json c = json::object();
    for (const auto& [name, holds] : v.conditions)
        c[name] = holds;
    j["conditions"] = std::move(c);
    if (!v.witness.empty())
        j["witness"] = v.witness;
    return j;
}

std::vector<std::size_t> dims_of(const DiagramModule& x) { return x.data().dims; }

// Structural checks ------------------------------------------------------

std::vector<CheckResult> hom_dimension_checks() {
    std::vector<CheckResult> out;
    for (Kind k : {Kind::ssimp, Kind::aug_ssimp, Kind::scube}) {
        out.push_back(timed([&] {
            json bad = json::array();
            for (int n = min_degree(k); n <= 6; ++n)
                for (int m = min_degree(k); m <= n; ++m) {
                    std::size_t got = hom_basis(k, m, n).size();
                    std::size_t brute = k == Kind::scube ? brute_force_cube_maps(m, n) : brute_force_injections(m, n);
                    std::set<Morphism> distinct(hom_basis(k, m, n).begin(), hom_basis(k, m, n).end());
                    if (got != brute || distinct.size() != got)
                        bad.push_back({{"m", m}, {"n", n}, {"hom_basis", got}, {"brute_force", brute}});
                }
            return result("hom_dimensions", to_string(k) + " up to degree 6", bad.empty(),
                          window_str(min_degree(k), 6), bad.empty() ? json::object() : json{{"mismatches", bad}});
        }));
    }
    return out;
}

LinComb gen(Kind k, const GeneratorId& g) { return LinComb(generator_morphism(k, g)); }

std::vector<CheckResult> relation_checks() {
    std::vector<CheckResult> out;
    out.push_back(timed([] {
        json bad = json::array();
        for (int n = 1; n <= 6; ++n)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    auto lhs = compose(gen(Kind::aug_ssimp, GeneratorId::delta(j, n)),
                                       gen(Kind::aug_ssimp, GeneratorId::delta(i, n - 1)));
                    auto rhs = compose(gen(Kind::aug_ssimp, GeneratorId::delta(i, n)),
                                       gen(Kind::aug_ssimp, GeneratorId::delta(j - 1, n - 1)));
                    if (!(lhs == rhs))
                        bad.push_back({{"i", i}, {"j", j}, {"n", n}});
                }
        return result("coface_relations", "simplicial", bad.empty(), window_str(-1, 6), json{{"violations", bad}});
    }));
    out.push_back(timed([] {
        json bad = json::array();
        for (int n = 2; n <= 6; ++n)
            for (int j = 2; j <= n; ++j)
                for (int i = 1; i < j; ++i)
                    for (int e = 0; e <= 1; ++e)
                        for (int h = 0; h <= 1; ++h) {
                            auto lhs = compose(gen(Kind::scube, GeneratorId::cube(j, h, n)),
                                               gen(Kind::scube, GeneratorId::cube(i, e, n - 1)));
                            auto rhs = compose(gen(Kind::scube, GeneratorId::cube(i, e, n)),
                                               gen(Kind::scube, GeneratorId::cube(j - 1, h, n - 1)));
                            if (!(lhs == rhs))
                                bad.push_back({{"i", i}, {"j", j}, {"eps", e}, {"eta", h}, {"n", n}});
                        }
        return result("coface_relations", "cubical", bad.empty(), window_str(0, 6), json{{"violations", bad}});
    }));
    for (Functor u : {Functor::u_delta, Functor::u_a, Functor::u_square}) {
        out.push_back(timed([u] {
            json bad = json::array();
            int first = u == Functor::u_a ? 0 : 1;
            for (int n = first; n <= 5; ++n) {
                auto sq = compose(apply_functor(u, GeneratorId::omega_d(n + 1)), apply_functor(u, GeneratorId::omega_d(n)));
                if (!sq.is_zero())
                    bad.push_back(n);
            }
            return result("differential_property", to_string(u), bad.empty(), window_str(first, 6),
                          json{{"nonzero_at", bad}});
        }));
    }
    out.push_back(timed([] {
        json bad = json::array();
        for (int n = 0; n <= 5; ++n) {
            auto lhs = apply_functor(Functor::v, apply_functor(Functor::u_a, GeneratorId::omega_d(n)));
            auto rhs = apply_functor(Functor::u_square, GeneratorId::omega_d(n + 1));
            if (!(lhs == rhs))
                bad.push_back({{"n", n}, {"v_u_a", lhs.str()}, {"u_square", rhs.str()}});
        }
        return result("sign_compatibility", "v(u_a(d_n)) = u_square(d_(n+1))", bad.empty(), window_str(0, 5),
                      json{{"mismatches", bad}});
    }));
    return out;
}

std::vector<CheckResult> factorization_checks() {
    std::vector<CheckResult> out;
    out.push_back(timed([] {
        json bad = json::array();
        for (int n = -1; n <= 6; ++n)
            for (int m = -1; m <= n; ++m)
                for (const auto& f : hom_basis(Kind::aug_ssimp, m, n)) {
                    const auto& inj = std::get<InjMap>(f);
                    std::vector<LinComb> word;
                    for (const auto& g : coface_factorization(inj))
                        word.push_back(gen(Kind::aug_ssimp, g));
                    LinComb back = word.empty() ? LinComb(Morphism(InjMap::identity(n))) : compose_word(word);
                    if (!(back == LinComb(f)))
                        bad.push_back(to_string(f));
                }
        return result("factorization_roundtrip", "coface words of injections", bad.empty(), window_str(-1, 6),
                      json{{"failures", bad}});
    }));
    out.push_back(timed([] {
        json bad = json::array();
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= n; ++m)
                for (const auto& f : hom_basis(Kind::scube, m, n)) {
                    const auto& cm = std::get<CubeMap>(f);
                    std::vector<LinComb> word;
                    for (const auto& g : coface_factorization(cm))
                        word.push_back(gen(Kind::scube, g));
                    LinComb back = word.empty() ? LinComb(Morphism(CubeMap::identity(n))) : compose_word(word);
                    auto mono = monochromatic_factorization(cm);
                    auto mono_back = compose(apply_functor(Functor::j1, Morphism(mono.colour1)),
                                             apply_functor(Functor::j0, Morphism(mono.colour0)));
                    auto rev = reverse_monochromatic_factorization(cm);
                    auto rev_back = compose(apply_functor(Functor::j0, Morphism(rev.outer0)),
                                            apply_functor(Functor::j1, Morphism(rev.inner1)));
                    if (!(back == LinComb(f)) || !(mono_back == LinComb(f)) || !(rev_back == LinComb(f)))
                        bad.push_back(to_string(f));
                }
        return result("factorization_roundtrip", "coface and monochromatic words of cube maps", bad.empty(),
                      window_str(0, 6), json{{"failures", bad}});
    }));
    return out;
}

/// Checks that a family expands to a basis with a triangular transition:
/// each element has a unique leading term (minimal key) with coefficient
/// +-1, the leading terms run through the hom basis once, and the family has
/// full rank.
struct FamilyCheck {
    bool ok = true;
    std::string detail;
};

FamilyCheck triangular_basis(Kind kind, int m, int n, const std::vector<LinComb>& values,
                             const std::vector<Morphism>& expected_leading,
                             const std::function<long(const Morphism&)>& key, bool unit_only) {
    const auto& basis = hom_basis(kind, m, n);
    FamilyCheck fc;
    auto fail = [&](std::string why) {
        fc.ok = false;
        fc.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + why;
        return fc;
    };
    if (values.size() != basis.size())
        return fail("family has " + std::to_string(values.size()) + " elements, hom space has " +
                    std::to_string(basis.size()));
    std::vector<bool> seen(basis.size(), false);
    SparseEchelon span(basis.size());
    for (std::size_t e = 0; e < values.size(); ++e) {
        const auto& v = values[e];
        const Morphism* lead = nullptr;
        long best = 0;
        bool tie = false;
        for (const auto& [h, c] : v.terms()) {
            long k = key(h);
            if (!lead || k < best) {
                lead = &h;
                best = k;
                tie = false;
            } else if (k == best) {
                tie = true;
            }
        }
        if (!lead || tie)
            return fail("element " + std::to_string(e) + " has no unique leading term");
        if (!(*lead == expected_leading[e]))
            return fail("element " + std::to_string(e) + " leads with " + to_string(*lead) + ", expected " +
                        to_string(expected_leading[e]));
        Rational c = v.coefficient(*lead);
        if (!(c == Rational(1) || (!unit_only && c == Rational(-1))))
            return fail("leading coefficient " + c.str());
        auto idx = hom_index(kind, *lead);
        if (seen[idx])
            return fail("leading term " + to_string(*lead) + " repeats");
        seen[idx] = true;
        SparseRow row;
        for (const auto& [h, c2] : v.terms())
            row.emplace_back(hom_index(kind, h), c2);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        span.insert(std::move(row));
    }
    if (span.rank() != basis.size())
        return fail("rank " + std::to_string(span.rank()) + " < " + std::to_string(basis.size()));
    return fc;
}

long missing_sum(const Morphism& f) {
    long s = 0;
    for (int i : std::get<InjMap>(f).missing())
        s += i;
    return s;
}

long minus_ones(const Morphism& f) {
    long s = 0;
    for (int x : std::get<CubeMap>(f).slots)
        if (x == CubeMap::kOne)
            --s;
    return s;
}

std::vector<CheckResult> freeness_checks() {
    std::vector<CheckResult> out;
    for (Kind kind : {Kind::ssimp, Kind::aug_ssimp}) {
        out.push_back(timed([kind] {
            FamilyCheck fc;
            for (int n = min_degree(kind); n <= 5 && fc.ok; ++n)
                for (int m = min_degree(kind); m <= n && fc.ok; ++m) {
                    std::vector<LinComb> values;
                    std::vector<Morphism> leading;
                    for (const auto& d : strictly_decreasing_basis(kind, m, n)) {
                        values.push_back(d.value);
                        std::vector<int> image;
                        std::set<int> miss(d.indices.begin(), d.indices.end());
                        for (int p = 0; p <= n; ++p)
                            if (!miss.contains(p))
                                image.push_back(p);
                        leading.push_back(InjMap::make(m, n, image));
                    }
                    fc = triangular_basis(kind, m, n, values, leading, missing_sum, false);
                }
            return result("freeness_bases", "strictly decreasing d-monomials over " + to_string(kind), fc.ok,
                          window_str(min_degree(kind), 5), fc.ok ? json::object() : json{{"detail", fc.detail}});
        }));
    }
    for (auto which : {CubicalFamily::sign_outer, CubicalFamily::sign_inner}) {
        out.push_back(timed([which] {
            FamilyCheck fc;
            for (int n = -1; n <= 5 && fc.ok; ++n)
                for (int m = -1; m <= n && fc.ok; ++m) {
                    std::vector<LinComb> values;
                    std::vector<Morphism> leading;
                    for (const auto& e : cubical_family(which, m, n)) {
                        values.push_back(e.value);
                        LinComb lead = which == CubicalFamily::sign_outer
                                           ? compose(apply_functor(Functor::j1, Morphism(e.second)),
                                                     apply_functor(Functor::j0, Morphism(e.first)))
                                           : compose(apply_functor(Functor::j0, Morphism(e.second)),
                                                     apply_functor(Functor::j1, Morphism(e.first)));
                        leading.push_back(lead.terms().begin()->first);
                    }
                    fc = triangular_basis(Kind::scube, m + 1, n + 1, values, leading, minus_ones, true);
                }
            std::string label = which == CubicalFamily::sign_outer ? "{v(a) j0(b)}" : "{j0(b) v(a)}";
            return result("freeness_bases", "cubical family " + label, fc.ok, window_str(-1, 5),
                          fc.ok ? json::object() : json{{"detail", fc.detail}});
        }));
    }
    return out;
}

/// Evaluates the augmented resolution at object c as a complex starting in
/// degree -1 with the coefficient there.
ChainComplex resolution_at(const Resolution& res, int c) {
    const auto& coeff = res.augmentation.target;
    int lo = coeff.min_degree();
    auto at = [&](const std::vector<RatMatrix>& comps) { return comps[static_cast<std::size_t>(c - lo)]; };
    ChainComplex out{-1, static_cast<int>(res.terms.size()) - 1, {}, {}};
    out.dims.push_back(coeff.dim(c));
    for (const auto& p : res.terms)
        out.dims.push_back(p.dim(c));
    out.diff.push_back(at(res.augmentation.components));
    for (const auto& d : res.diffs)
        out.diff.push_back(at(d.components));
    return out;
}

std::vector<CheckResult> resolution_checks(int truncation) {
    std::vector<CheckResult> out;
    const std::vector<std::pair<Kind, CoefficientId>> pairings{
        {Kind::ssimp, CoefficientId::k_constant},
        {Kind::aug_ssimp, CoefficientId::k_constant_shifted},
        {Kind::scube, CoefficientId::k_constant},
        {Kind::chain0, CoefficientId::k_point},
        {Kind::chain_neg1, CoefficientId::k_point_neg1}};
    for (const auto& [kind, coeff] : pairings) {
        auto res = resolution(kind, coeff, truncation);
        for (int c = min_degree(kind); c <= std::min(4, truncation); ++c) {
            out.push_back(timed([&, kind = kind, coeff = coeff, c = c] {
                auto cx = resolution_at(res, c);
                auto r = validate(cx);
                auto h = homology(cx);
                bool exact = r.ok();
                for (auto d : h.dims())
                    exact = exact && d == 0;
                json w{{"dims", cx.dims}, {"homology", h.dims()}};
                if (!r.ok())
                    w["invalid"] = r.str();
                return result("resolution_exactness", to_string(kind) + " / " + to_string(coeff) + " at " +
                                                          std::to_string(c),
                              exact, window_str(h.lower, h.upper), w);
            }));
        }
    }
    return out;
}

CheckResult k0_to_kconstant(int truncation) {
    return timed([truncation] {
        auto l = coefficient_module(Kind::chain0, CoefficientId::k_constant, truncation);
        ChainComplex k_bullet{0, truncation, l.dims, {}};
        for (int n = 1; n <= truncation; ++n)
            k_bullet.diff.push_back(l.actions.at(GeneratorId::omega_d(n)).transpose());
        auto k0 = disk_sphere_complex(0, truncation, {Cell::sphere(0)});
        ChainMap incl{k0, k_bullet, {}};
        for (int n = 0; n <= truncation; ++n)
            incl.components.push_back(RatMatrix(k_bullet.dim(n), k0.dim(n)));
        incl.components[0](0, 0) = 1;
        auto h = homology(k_bullet);
        std::vector<std::size_t> expected(static_cast<std::size_t>(truncation), 0);
        expected[0] = 1;
        bool chain = check_chain_map(incl).ok();
        auto q = is_quasi_iso(incl);
        return result("k0_to_kconstant", "k[0] -> k_constant", chain && q.holds && h.dims() == expected,
                      window_str(q.lower, q.upper),
                      {{"homology", h.dims()}, {"quasi_iso", q.holds}, {"chain_map", chain}});
    });
}

std::vector<CheckResult> fibration_fixture_checks(int truncation) {
    std::vector<CheckResult> out;
    struct Fixture {
        std::string name;
        ModuleMap map;
        bool expected;
    };
    for (Kind k : {Kind::ssimp, Kind::aug_ssimp, Kind::scube, Kind::chain0, Kind::chain_neg1}) {
        int lo = min_degree(k);
        DiagramModule x = DiagramModule::zero(k, truncation);
        DiagramModule y = x;
        std::optional<ModuleMap> mono;
        if (is_chain_kind(k)) {
            x = to_module(disk_sphere_complex(lo, truncation, {Cell::sphere(lo), Cell::disk(lo + 1)}));
            y = to_module(disk_sphere_complex(lo, truncation, {Cell::sphere(lo + 1)}));
        } else {
            x = representable(k, lo + 1, truncation);
            y = representable(k, lo, truncation);
            const auto& arrow = hom_basis(k, lo, lo + 1).front();
            mono = yoneda_map(k, LinComb(arrow), truncation);
        }
        auto zero = DiagramModule::zero(k, truncation);
        auto sum = direct_sum(x, y);
        std::vector<Fixture> fixtures;
        fixtures.push_back({"identity", identity_map(x), true});
        fixtures.push_back({"map onto zero", zero_map(x, zero), true});
        fixtures.push_back({"zero map into nonzero", zero_map(y, x), false});
        fixtures.push_back({"projection of a sum", projection(x, y, sum, false), true});
        fixtures.push_back({"inclusion into a sum", inclusion_left(x, y, sum), false});
        auto doubled = projection(x, y, sum, true);
        for (auto& m : doubled.components)
            m *= Rational(2);
        fixtures.push_back({"padded epimorphism", doubled, true});
        if (mono)
            fixtures.push_back({"yoneda map of a coface", *mono, false});
        for (const auto& fx : fixtures) {
            out.push_back(timed([&] {
                auto v = check_fibration(fx.map);
                bool oracle = true;
                for (const auto& m : fx.map.components)
                    oracle = oracle && rank(m) == m.rows();
                bool ok = v.holds == fx.expected && oracle == fx.expected && check_map(fx.map).ok();
                return result("fibration_fixtures", to_string(k) + ": " + fx.name, ok,
                              window_str(lo, truncation),
                              {{"check_fibration", v.holds}, {"degreewise_epi", oracle}, {"expected", fx.expected},
                               {"witness", v.witness}});
            }));
        }
    }
    return out;
}

// Corpus checks ----------------------------------------------------------

std::vector<CheckResult> module_checks(const CorpusModule& cm) {
    std::vector<CheckResult> out;
    const auto& x = cm.module;
    Kind k = x.kind();
    int top = x.truncation();
    out.push_back(timed([&] {
        auto r = validate(x.data());
        return result("corpus_validates", cm.name, r.ok(), window_str(x.min_degree(), top),
                      r.ok() ? json::object() : json{{"violation", r.str()}});
    }));
    out.push_back(timed([&] {
        auto text = dump_module(x);
        auto back = parse_module(text);
        bool same = back == x && dump_module(back) == text;
        return result("module_roundtrip", cm.name, same, window_str(x.min_degree(), top));
    }));
    if (k == Kind::ssimp || k == Kind::scube) {
        out.push_back(timed([&] {
            Functor u = k == Kind::ssimp ? Functor::u_delta : Functor::u_square;
            auto rc = restrict(u, x);
            auto h = homology(rc).dims();
            auto t = tor(x, CoefficientId::k_constant).dims();
            auto t_omega = tor(to_module(rc), CoefficientId::k_point).dims();
            return result("tor_identification", cm.name, h == t && h == t_omega, window_str(0, top - 1),
                          {{"restricted_homology", h}, {"tor_k_constant", t}, {"tor_omega_k_point", t_omega}});
        }));
    }
    if (k == Kind::aug_ssimp) {
        out.push_back(timed([&] {
            auto full = augmented_chain(x);
            auto brutal = homology(brutal_truncation(full)).dims();
            auto tau = homology(good_truncation(full)).dims();
            auto t = tor(x, CoefficientId::k_constant_shifted).dims();
            bool ok = t == brutal;
            for (std::size_t n = 1; n < t.size(); ++n)
                ok = ok && t[n] == tau[n];
            return result("tor_identification", cm.name, ok, window_str(0, top - 1),
                          {{"brutal_homology", brutal}, {"tau_homology", tau}, {"tor_k_constant_shifted", t}});
        }));
        out.push_back(timed([&] {
            auto s = low_degree_sequence(x);
            auto t0 = tor(x, CoefficientId::k_constant_shifted).dim(0);
            bool ok = s.exact() && s.tor0 == t0;
            return result("low_degree_sequence", cm.name, ok, window_str(-1, 0),
                          {{"h0_tau", s.h0_tau}, {"tor0", s.tor0}, {"tor0_from_resolution", t0},
                           {"x_neg1", s.x_neg1}, {"h_neg1", s.h_neg1}, {"exact", s.exact()}});
        }));
    }
    if (k == Kind::scube) {
        out.push_back(timed([&] {
            auto vx = restrict_v(x);
            auto full = augmented_chain(vx);
            auto cube = restrict(Functor::u_square, x);
            auto h_cube = homology(cube);
            auto h_tau = homology(good_truncation(full));
            auto h_full = homology(full);
            json mismatches = json::array();
            for (int n = 0; n <= top - 2; ++n)
                if (h_tau.dim(n) != h_cube.dim(n + 1))
                    mismatches.push_back({{"n", n}, {"tau_v", h_tau.dim(n)}, {"cube", h_cube.dim(n + 1)}});
            if (h_full.dim(-1) != h_cube.dim(0))
                mismatches.push_back({{"n", -1}, {"h_neg1_v", h_full.dim(-1)}, {"cube", h_cube.dim(0)}});
            // Identity of spaces: the shadow's differentials are the cubical
            // ones, so cycles and boundaries coincide as subspaces of X.
            auto same_span = [](const RatMatrix& a, const RatMatrix& b) {
                if (a.cols() != b.cols())
                    return false;
                if (a.cols() == 0)
                    return true;
                return rank(a.hstack(b)) == a.cols();
            };
            for (int n = 0; n <= top - 1; ++n) {
                bool diff_equal = full.d(n) == cube.d(n + 1);
                bool cycles = same_span(kernel_basis(full.d(n)), kernel_basis(cube.d(n + 1)));
                bool bounds = same_span(image_basis(full.d(n)), image_basis(cube.d(n + 1)));
                if (!diff_equal || !cycles || !bounds)
                    mismatches.push_back({{"n", n}, {"differential", diff_equal}, {"cycles", cycles},
                                          {"boundaries", bounds}});
            }
            return result("sign_shadow", cm.name, mismatches.empty(), window_str(-1, top - 2),
                          {{"cube_homology", h_cube.dims()}, {"shadow_tau_homology", h_tau.dims()},
                           {"shadow_h_neg1", h_full.dim(-1)}, {"mismatches", mismatches}});
        }));
    }
    return out;
}

/// Unit or counit of the adjunction along u: naturality, the weak-equivalence
/// verdict, and agreement of the characterizations.
std::vector<CheckResult> adjunction_checks(const std::string& label, const std::string& instance, const ModuleMap& f,
                                           bool recorded) {
    std::vector<CheckResult> out;
    auto nat = check_map(f);
    auto v = check_weak_equivalence(f);
    json w = weq_json(v);
    w["source_dims"] = dims_of(f.source);
    w["target_dims"] = dims_of(f.target);
    w["natural"] = nat.ok();
    std::string window = window_str(v.lower, v.upper);
    CheckResult r = result(label, instance, nat.ok() && v.holds, window, w);
    if (recorded && nat.ok())
        r.verdict = Verdict::recorded;
    out.push_back(std::move(r));
    out.push_back(result("weq_characterizations", label + " of " + instance, v.agree, window, weq_json(v)));
    return out;
}

std::vector<CheckResult> module_adjunction_checks(const CorpusModule& cm) {
    std::vector<CheckResult> out;
    const auto& x = cm.module;
    auto add = [&](std::vector<CheckResult> part) { out.insert(out.end(), part.begin(), part.end()); };
    auto guarded = [&](const std::string& label, const std::function<ModuleMap()>& make, bool recorded) {
        try {
            add(adjunction_checks(label, cm.name, make(), recorded));
        } catch (const TransportError& ex) {
            out.push_back(result(label, cm.name, false, "[]", {{"error", ex.what()}}));
        }
    };
    switch (x.kind()) {
    case Kind::ssimp: guarded("counit_u_delta", [&] { return counit_map(Functor::u_delta, x); }, false); break;
    case Kind::aug_ssimp:
        guarded("counit_u_a", [&] { return counit_map(Functor::u_a, x); }, false);
        guarded("unit_v", [&] { return unit_map(Functor::v, truncate(x, x.truncation() - 1)); }, true);
        break;
    case Kind::scube: guarded("counit_v", [&] { return counit_map(Functor::v, x); }, true); break;
    default: break;
    }
    return out;
}

std::vector<CheckResult> source_checks(const InducedSource& src, const Corpus& corpus) {
    std::vector<CheckResult> out;
    const auto& name = corpus.modules[src.module_index].name;
    const auto& m = src.source;
    if (src.along == Functor::u_delta || src.along == Functor::u_a) {
        std::string label = src.along == Functor::u_delta ? "unit_u_delta" : "unit_u_a";
        try {
            auto part = adjunction_checks(label, "source of " + name, unit_map(src.along, m), false);
            out.insert(out.end(), part.begin(), part.end());
        } catch (const TransportError& ex) {
            out.push_back(result(label, "source of " + name, false, "[]", {{"error", ex.what()}}));
        }
        out.push_back(timed([&] {
            auto c = to_complex(m);
            auto h = homology(c).dims();
            auto coeff = m.kind() == Kind::chain0 ? CoefficientId::k_point : CoefficientId::k_point_neg1;
            auto t = tor(m, coeff).dims();
            // Over Omega_a the resolution is shifted: Tor_j = H_{j-1}.
            bool ok = t.size() >= h.size() && std::equal(h.begin(), h.end(), t.begin());
            return result("tor_identification", "source of " + name, ok, window_str(c.lower, c.truncation - 1),
                          {{"homology", h}, {"tor", t}});
        }));
    } else {
        out.push_back(timed([&] {
            const auto& induced = corpus.modules[src.module_index].module;
            json bad = json::array();
            std::vector<std::size_t> predicted;
            for (int mm = -1; mm + 1 <= induced.truncation(); ++mm) {
                std::size_t p = 0;
                for (int q = -1; q <= m.truncation(); ++q)
                    p += brute_force_injections(mm, q) * m.dim(q);
                predicted.push_back(p);
                if (p != induced.dim(mm + 1))
                    bad.push_back({{"cube_degree", mm + 1}, {"predicted", p}, {"computed", induced.dim(mm + 1)}});
            }
            return result("induction_dimension_oracle", name, bad.empty(), window_str(0, induced.truncation()),
                          {{"predicted", predicted}, {"computed", dims_of(induced)}, {"mismatches", bad}});
        }));
        try {
            auto part = adjunction_checks("unit_v", "source of " + name, unit_map(Functor::v, m), true);
            out.insert(out.end(), part.begin(), part.end());
        } catch (const TransportError& ex) {
            out.push_back(result("unit_v", "source of " + name, false, "[]", {{"error", ex.what()}}));
        }
    }
    return out;
}

template <class F>
std::vector<CheckResult> fan_out(std::size_t count, unsigned threads, F fn) {
    std::vector<std::vector<CheckResult>> parts(count);
    auto run = [&](std::size_t i) {
        try {
            parts[i] = fn(i);
        } catch (const std::exception& ex) {
            parts[i] = {result("internal_error", "item " + std::to_string(i), false, "[]", {{"error", ex.what()}})};
        }
    };
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next++) < count;)
                    run(i);
            });
        for (auto& t : pool)
            t.join();
    }
    std::vector<CheckResult> out;
    for (auto& p : parts)
        for (auto& r : p)
            out.push_back(std::move(r));
    return out;
}

}  // namespace

VerificationReport run_counterexample() {
    VerificationReport rep;
    rep.truncation = 3;
    auto m = representable(Kind::aug_ssimp, 0, rep.truncation);
    auto induced = induce(Functor::v, m);
    auto eta = unit_map(Functor::v, m);
    const auto& back = eta.target;
    std::string inst = "M = aug_ssimp representable at [0], N = 3";
    std::string win = window_str(induced.window_lower, induced.window_upper);

    std::vector<std::size_t> expected(static_cast<std::size_t>(induced.window_upper + 1), 0);
    expected[0] = 2;
    if (expected.size() > 1)
        expected[1] = 1;
    auto cube_rep = representable(Kind::scube, 1, induced.window_upper);
    rep.add(result("counterexample", "v_! M dims (2, 1, 0, ...)", dims_of(induced.module) == expected, win,
                   {{"dims", dims_of(induced.module)}, {"isomorphic_dims_to_cube_representable",
                                                        dims_of(cube_rep) == dims_of(induced.module)}}));
    auto h_src = homology(augmented_chain(eta.source)).dim(-1);
    auto h_tgt = homology(augmented_chain(back)).dim(-1);
    rep.add(result("counterexample", "H^a_-1(M) = 0", h_src == 0, window_str(-1, -1), {{"dim", h_src}}));
    rep.add(result("counterexample", "H^a_-1(v* v_! M) = 1", h_tgt == 1, window_str(-1, -1), {{"dim", h_tgt}}));
    auto nat = check_map(eta);
    rep.add(result("counterexample", "unit is a module map", nat.ok(), window_str(-1, eta.source.truncation()),
                   nat.ok() ? json::object() : json{{"violation", nat.str()}}));
    auto v = check_weak_equivalence(eta);
    CheckResult r = result("counterexample", "unit is not a weak equivalence (" + inst + ")", true,
                           window_str(v.lower, v.upper), weq_json(v));
    r.verdict = v.holds ? Verdict::unexpected_pass : Verdict::expected_failure;
    r.witness["h_neg1_source"] = h_src;
    r.witness["h_neg1_target"] = h_tgt;
    rep.add(std::move(r));
    rep.add(result("weq_characterizations", "unit of the counterexample", v.agree, window_str(v.lower, v.upper),
                   weq_json(v)));
    auto tau = good_truncation(to_chain_map(restricted_map(Functor::u_a, eta)));
    auto q = is_quasi_iso(tau);
    rep.add(result("counterexample", "unit is an isomorphism on H_n(tau), n >= 0", q.holds,
                   window_str(q.lower, q.upper), {{"detail", q.detail}}));
    return rep;
}

VerificationReport run_battery(const CorpusSpec& spec, unsigned threads) {
    VerificationReport rep;
    rep.seed = spec.seed;
    rep.truncation = spec.truncation;
    auto append = [&rep](std::vector<CheckResult> part) {
        for (auto& r : part)
            rep.add(std::move(r));
    };

    for (auto& r : run_counterexample().checks)
        rep.add(std::move(r));
    append(hom_dimension_checks());
    append(relation_checks());
    append(factorization_checks());
    append(freeness_checks());
    append(resolution_checks(spec.truncation));
    rep.add(k0_to_kconstant(spec.truncation));
    append(fibration_fixture_checks(spec.truncation));

    auto corpus = generate_corpus(spec);
    rep.add(timed([&] {
        auto again = generate_corpus(spec);
        bool same = again.modules.size() == corpus.modules.size() && again.maps.size() == corpus.maps.size();
        for (std::size_t i = 0; same && i < corpus.modules.size(); ++i)
            same = dump_module(again.modules[i].module) == dump_module(corpus.modules[i].module);
        for (std::size_t i = 0; same && i < corpus.maps.size(); ++i)
            same = dump_canonical(map_to_json(again.maps[i].map)) == dump_canonical(map_to_json(corpus.maps[i].map));
        return result("determinism", "corpus for seed " + std::to_string(spec.seed), same, "[]",
                      {{"modules", corpus.modules.size()}, {"maps", corpus.maps.size()}});
    }));
    append(fan_out(corpus.modules.size(), threads, [&](std::size_t i) { return module_checks(corpus.modules[i]); }));
    append(fan_out(corpus.modules.size(), threads,
                   [&](std::size_t i) { return module_adjunction_checks(corpus.modules[i]); }));
    append(fan_out(corpus.sources.size(), threads,
                   [&](std::size_t i) { return source_checks(corpus.sources[i], corpus); }));

    std::vector<WeqVerdict> verdicts(corpus.maps.size());
    append(fan_out(corpus.maps.size(), threads, [&](std::size_t i) {
        const auto& cm = corpus.maps[i];
        auto nat = check_map(cm.map);
        verdicts[i] = check_weak_equivalence(cm.map);
        json w = weq_json(verdicts[i]);
        w["natural"] = nat.ok();
        return std::vector<CheckResult>{result("weq_characterizations", cm.name, nat.ok() && verdicts[i].agree,
                                               window_str(verdicts[i].lower, verdicts[i].upper), w)};
    }));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < corpus.maps.size(); ++i)
        for (std::size_t j = 0; j < corpus.maps.size(); ++j)
            if (corpus.maps[i].map.target == corpus.maps[j].map.source)
                pairs.emplace_back(i, j);
    append(fan_out(pairs.size(), threads, [&](std::size_t p) {
        auto [i, j] = pairs[p];
        const auto& f = corpus.maps[i];
        const auto& g = corpus.maps[j];
        auto gf = check_weak_equivalence(compose(g.map, f.map));
        int count = verdicts[i].holds + verdicts[j].holds + gf.holds;
        return std::vector<CheckResult>{result("two_out_of_three", "(" + g.name + ") after (" + f.name + ")",
                                               count != 2, window_str(gf.lower, gf.upper),
                                               {{"f", verdicts[i].holds}, {"g", verdicts[j].holds}, {"gf", gf.holds}})};
    }));
    return rep;
}

std::size_t brute_force_injections(int m, int n) {
    if (m < -1 || n < -1 || m > n)
        return 0;
    std::size_t count = 0;
    int points = n + 1;
    for (unsigned mask = 0; mask < (1u << points); ++mask)
        if (std::popcount(mask) == m + 1)
            ++count;
    return count;
}

std::size_t brute_force_cube_maps(int m, int n) {
    if (m < 0 || n < 0 || m > n)
        return 0;
    // Each target slot holds a source coordinate or one of the two constants;
    // coordinates must appear once each, in increasing order.
    int symbols = m + 2;
    std::size_t total = 1;
    for (int k = 0; k < n; ++k)
        total *= static_cast<std::size_t>(symbols);
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        int next = 1;
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            int s = static_cast<int>(rest % static_cast<std::size_t>(symbols));
            rest /= static_cast<std::size_t>(symbols);
            if (s >= 2) {
                ok = s - 1 == next;
                ++next;
            }
        }
        if (ok && next == m + 1)
            ++count;
    }
    return count;
}

}  // namespace semihom
