#include "semihom/simplexcat.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>

namespace semihom {

int min_degree(Kind kind) {
    return (kind == Kind::aug_ssimp || kind == Kind::chain_neg1) ? -1 : 0;
}

bool is_chain_kind(Kind kind) { return kind == Kind::chain0 || kind == Kind::chain_neg1; }

std::string to_string(Kind kind) {
    switch (kind) {
    case Kind::ssimp: return "ssimp";
    case Kind::aug_ssimp: return "aug_ssimp";
    case Kind::scube: return "scube";
    case Kind::chain0: return "chain0";
    case Kind::chain_neg1: return "chain_neg1";
    }
    return "?";
}

Kind parse_kind(std::string_view text) {
    for (Kind k : {Kind::ssimp, Kind::aug_ssimp, Kind::scube, Kind::chain0, Kind::chain_neg1})
        if (to_string(k) == text)
            return k;
    if (text == "aug")
        return Kind::aug_ssimp;
    throw CategoryError("unknown module kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- InjMap

InjMap InjMap::make(int source, int target, std::vector<int> image) {
    if (source < -1 || target < source)
        throw CategoryError("injection [" + std::to_string(source) + "] -> [" + std::to_string(target) +
                            "] does not exist");
    if (static_cast<int>(image.size()) != source + 1)
        throw CategoryError("injection image has wrong length");
    for (std::size_t k = 0; k < image.size(); ++k) {
        if (image[k] < 0 || image[k] > target)
            throw CategoryError("injection image point out of range");
        if (k > 0 && image[k] <= image[k - 1])
            throw CategoryError("injection image is not strictly increasing");
    }
    return InjMap{source, target, std::move(image)};
}

InjMap InjMap::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        img[static_cast<std::size_t>(k)] = k;
    return make(n, n, std::move(img));
}

InjMap InjMap::coface(int i, int n) {
    if (i < 0 || i > n || n < 0)
        throw CategoryError("coface delta^" + std::to_string(i) + " into [" + std::to_string(n) + "] is illegal");
    std::vector<int> img;
    for (int k = 0; k <= n; ++k)
        if (k != i)
            img.push_back(k);
    return make(n - 1, n, std::move(img));
}

std::vector<int> InjMap::missing() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int p = 0; p <= target; ++p) {
        if (k < image.size() && image[k] == p)
            ++k;
        else
            out.push_back(p);
    }
    return out;
}

std::string InjMap::str() const {
    std::ostringstream os;
    os << "inj " << source << "->" << target << " {";
    for (std::size_t k = 0; k < image.size(); ++k)
        os << (k ? "," : "") << image[k];
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- CubeMap

CubeMap CubeMap::make(int source, int target, std::vector<int> slots) {
    if (source < 0 || target < source)
        throw CategoryError("cube map " + std::to_string(source) + " -> " + std::to_string(target) +
                            " does not exist");
    if (static_cast<int>(slots.size()) != target)
        throw CategoryError("cube map assignment has wrong length");
    int next = 1;
    for (int s : slots) {
        if (s == kZero || s == kOne)
            continue;
        if (s != next)
            throw CategoryError("cube map coordinates must appear once each, in increasing order");
        ++next;
    }
    if (next != source + 1)
        throw CategoryError("cube map does not use every source coordinate");
    return CubeMap{source, target, std::move(slots)};
}

CubeMap CubeMap::identity(int n) {
    std::vector<int> slots(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        slots[static_cast<std::size_t>(k)] = k + 1;
    return make(n, n, std::move(slots));
}

CubeMap CubeMap::coface(int i, int eps, int n) {
    if (n < 1 || i < 1 || i > n || (eps != 0 && eps != 1))
        throw CategoryError("cubical coface delta_" + std::to_string(i) + "^" + std::to_string(eps) + " into cube_" +
                            std::to_string(n) + " is illegal");
    std::vector<int> slots;
    int coord = 1;
    for (int p = 1; p <= n; ++p)
        slots.push_back(p == i ? (eps ? kOne : kZero) : coord++);
    return make(n - 1, n, std::move(slots));
}

std::string CubeMap::str() const {
    std::ostringstream os;
    os << "cube " << source << "->" << target << " [";
    for (std::size_t k = 0; k < slots.size(); ++k) {
        if (k)
            os << ',';
        if (slots[k] == kZero)
            os << '0';
        else if (slots[k] == kOne)
            os << '1';
        else
            os << 'x' << slots[k];
    }
    os << ']';
    return os.str();
}

std::string OmegaMap::str() const {
    return "omega " + std::to_string(source) + "->" + std::to_string(target) + (is_identity() ? " id" : " d");
}

int source_of(const Morphism& f) {
    return std::visit([](const auto& m) { return m.source; }, f);
}

int target_of(const Morphism& f) {
    return std::visit([](const auto& m) { return m.target; }, f);
}

std::string to_string(const Morphism& f) {
    return std::visit([](const auto& m) { return m.str(); }, f);
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw CategoryError("malformed integer '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Morphism parse_morphism(std::string_view text) {
    auto sp1 = text.find(' ');
    auto sp2 = text.find(' ', sp1 == std::string_view::npos ? sp1 : sp1 + 1);
    if (sp1 == std::string_view::npos || sp2 == std::string_view::npos)
        throw CategoryError("malformed morphism '" + std::string(text) + "'");
    std::string_view head = text.substr(0, sp1);
    std::string_view ends = text.substr(sp1 + 1, sp2 - sp1 - 1);
    std::string_view body = text.substr(sp2 + 1);
    auto arrow = ends.find("->");
    if (arrow == std::string_view::npos)
        throw CategoryError("malformed morphism '" + std::string(text) + "'");
    int m = parse_int(ends.substr(0, arrow));
    int n = parse_int(ends.substr(arrow + 2));
    auto inner = [&](char open, char close) {
        if (body.size() < 2 || body.front() != open || body.back() != close)
            throw CategoryError("malformed morphism '" + std::string(text) + "'");
        return body.substr(1, body.size() - 2);
    };
    if (head == "inj") {
        std::vector<int> img;
        for (auto tok : split(inner('{', '}'), ','))
            img.push_back(parse_int(tok));
        return InjMap::make(m, n, std::move(img));
    }
    if (head == "cube") {
        std::vector<int> slots;
        for (auto tok : split(inner('[', ']'), ',')) {
            if (tok == "0")
                slots.push_back(CubeMap::kZero);
            else if (tok == "1")
                slots.push_back(CubeMap::kOne);
            else if (!tok.empty() && tok[0] == 'x')
                slots.push_back(parse_int(tok.substr(1)));
            else
                throw CategoryError("malformed cube slot '" + std::string(tok) + "'");
        }
        return CubeMap::make(m, n, std::move(slots));
    }
    if (head == "omega") {
        if (body == "id" && m == n)
            return OmegaMap::identity(n);
        if (body == "d" && m == n - 1)
            return OmegaMap::d(n);
        throw CategoryError("malformed omega morphism '" + std::string(text) + "'");
    }
    throw CategoryError("unknown morphism family '" + std::string(head) + "'");
}

// ---------------------------------------------------------------- LinComb

LinComb::LinComb(const Morphism& f, Rational coeff) : source_(source_of(f)), target_(target_of(f)) {
    add(f, coeff);
}

void LinComb::check_parallel(int s, int t) const {
    if (s != source_ || t != target_)
        throw CategoryError("linear combination of non-parallel morphisms");
}

Rational LinComb::coefficient(const Morphism& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(const Morphism& f, const Rational& coeff) {
    check_parallel(source_of(f), target_of(f));
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(f, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    check_parallel(o.source_, o.target_);
    for (const auto& [f, c] : o.terms_)
        add(f, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    check_parallel(o.source_, o.target_);
    for (const auto& [f, c] : o.terms_)
        add(f, -c);
    return *this;
}

LinComb& LinComb::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, c] : terms_)
        c *= s;
    return *this;
}

std::string LinComb::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (!c.is_one())
            os << '(' << c << ")*";
        os << to_string(f);
    }
    return os.str();
}

// ---------------------------------------------------------------- generators

std::string GeneratorId::token() const {
    switch (type) {
    case Type::delta: return "delta " + std::to_string(i) + " " + std::to_string(n);
    case Type::cube: return "cube " + std::to_string(i) + " " + std::to_string(eps) + " " + std::to_string(n);
    case Type::omega_d: return "d " + std::to_string(n);
    }
    return "?";
}

GeneratorId GeneratorId::parse(std::string_view token) {
    auto parts = split(token, ' ');
    if (parts.size() == 3 && parts[0] == "delta")
        return delta(parse_int(parts[1]), parse_int(parts[2]));
    if (parts.size() == 4 && parts[0] == "cube")
        return cube(parse_int(parts[1]), parse_int(parts[2]), parse_int(parts[3]));
    if (parts.size() == 2 && parts[0] == "d")
        return omega_d(parse_int(parts[1]));
    throw CategoryError("malformed generator token '" + std::string(token) + "'");
}

bool is_legal(Kind kind, const GeneratorId& g) {
    switch (kind) {
    case Kind::ssimp:
        return g.type == GeneratorId::Type::delta && g.n >= 1 && g.i >= 0 && g.i <= g.n;
    case Kind::aug_ssimp:
        return g.type == GeneratorId::Type::delta && g.n >= 0 && g.i >= 0 && g.i <= g.n;
    case Kind::scube:
        return g.type == GeneratorId::Type::cube && g.n >= 1 && g.i >= 1 && g.i <= g.n && (g.eps == 0 || g.eps == 1);
    case Kind::chain0:
        return g.type == GeneratorId::Type::omega_d && g.n >= 1;
    case Kind::chain_neg1:
        return g.type == GeneratorId::Type::omega_d && g.n >= 0;
    }
    return false;
}

Morphism generator_morphism(Kind kind, const GeneratorId& g) {
    if (!is_legal(kind, g))
        throw CategoryError("generator '" + g.token() + "' is not in " + to_string(kind));
    switch (g.type) {
    case GeneratorId::Type::delta: return InjMap::coface(g.i, g.n);
    case GeneratorId::Type::cube: return CubeMap::coface(g.i, g.eps, g.n);
    case GeneratorId::Type::omega_d: return OmegaMap::d(g.n);
    }
    throw CategoryError("unreachable");
}

std::vector<GeneratorId> generators_into(Kind kind, int n) {
    std::vector<GeneratorId> out;
    if (n <= min_degree(kind))
        return out;
    switch (kind) {
    case Kind::ssimp:
    case Kind::aug_ssimp:
        for (int i = 0; i <= n; ++i)
            out.push_back(GeneratorId::delta(i, n));
        break;
    case Kind::scube:
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e <= 1; ++e)
                out.push_back(GeneratorId::cube(i, e, n));
        break;
    case Kind::chain0:
    case Kind::chain_neg1:
        out.push_back(GeneratorId::omega_d(n));
        break;
    }
    return out;
}

std::vector<GeneratorId> all_generators(Kind kind, int truncation) {
    std::vector<GeneratorId> out;
    for (int n = min_degree(kind) + 1; n <= truncation; ++n)
        for (auto& g : generators_into(kind, n))
            out.push_back(g);
    return out;
}

// ---------------------------------------------------------------- composition

InjMap compose_inj(const InjMap& g, const InjMap& f) {
    if (f.target != g.source)
        throw CategoryError("cannot compose " + g.str() + " after " + f.str());
    std::vector<int> img(f.image.size());
    for (std::size_t k = 0; k < f.image.size(); ++k)
        img[k] = g.image[static_cast<std::size_t>(f.image[k])];
    return InjMap{f.source, g.target, std::move(img)};
}

CubeMap compose_cube(const CubeMap& g, const CubeMap& f) {
    if (f.target != g.source)
        throw CategoryError("cannot compose " + g.str() + " after " + f.str());
    std::vector<int> slots(g.slots.size());
    for (std::size_t k = 0; k < g.slots.size(); ++k) {
        int s = g.slots[k];
        slots[k] = (s == CubeMap::kZero || s == CubeMap::kOne) ? s : f.slots[static_cast<std::size_t>(s - 1)];
    }
    return CubeMap{f.source, g.target, std::move(slots)};
}

LinComb compose(const Morphism& g, const Morphism& f) {
    if (g.index() != f.index())
        throw CategoryError("cannot compose morphisms of different categories");
    if (target_of(f) != source_of(g))
        throw CategoryError("cannot compose " + to_string(g) + " after " + to_string(f));
    if (const auto* gi = std::get_if<InjMap>(&g))
        return LinComb(compose_inj(*gi, std::get<InjMap>(f)));
    if (const auto* gc = std::get_if<CubeMap>(&g))
        return LinComb(compose_cube(*gc, std::get<CubeMap>(f)));
    const auto& go = std::get<OmegaMap>(g);
    const auto& fo = std::get<OmegaMap>(f);
    if (go.is_identity())
        return LinComb(f);
    if (fo.is_identity())
        return LinComb(g);
    return LinComb(fo.source, go.target);
}

LinComb compose(const LinComb& g, const LinComb& f) {
    if (f.target() != g.source())
        throw CategoryError("cannot compose linear combinations: degrees do not match");
    LinComb out(f.source(), g.target());
    for (const auto& [gm, gc] : g.terms())
        for (const auto& [fm, fc] : f.terms())
            out += compose(gm, fm) * (gc * fc);
    return out;
}

LinComb compose_word(const std::vector<LinComb>& word) {
    if (word.empty())
        throw CategoryError("empty word has no endpoints");
    LinComb acc = word.back();
    for (std::size_t k = word.size() - 1; k-- > 0;)
        acc = compose(word[k], acc);
    return acc;
}

std::vector<GeneratorId> coface_factorization(const InjMap& f) {
    auto miss = f.missing();
    std::vector<GeneratorId> word;
    for (std::size_t j = miss.size(); j-- > 0;)
        word.push_back(GeneratorId::delta(miss[j], f.source + static_cast<int>(j) + 1));
    return word;
}

std::vector<GeneratorId> coface_factorization(const CubeMap& f) {
    std::vector<std::pair<int, int>> consts;  // (1-based position, eps)
    for (std::size_t k = 0; k < f.slots.size(); ++k)
        if (f.slots[k] == CubeMap::kZero || f.slots[k] == CubeMap::kOne)
            consts.emplace_back(static_cast<int>(k) + 1, f.slots[k] == CubeMap::kOne ? 1 : 0);
    std::vector<GeneratorId> word;
    for (std::size_t j = consts.size(); j-- > 0;)
        word.push_back(GeneratorId::cube(consts[j].first, consts[j].second, f.source + static_cast<int>(j) + 1));
    return word;
}

std::vector<GeneratorId> generator_word(Kind kind, const Morphism& f) {
    if (const auto* i = std::get_if<InjMap>(&f)) {
        if (kind != Kind::ssimp && kind != Kind::aug_ssimp)
            throw CategoryError("injection used in " + to_string(kind));
        return coface_factorization(*i);
    }
    if (const auto* c = std::get_if<CubeMap>(&f)) {
        if (kind != Kind::scube)
            throw CategoryError("cube map used in " + to_string(kind));
        return coface_factorization(*c);
    }
    if (!is_chain_kind(kind))
        throw CategoryError("omega morphism used in " + to_string(kind));
    const auto& o = std::get<OmegaMap>(f);
    if (o.is_identity())
        return {};
    return {GeneratorId::omega_d(o.target)};
}

MonochromaticFactorization monochromatic_factorization(const CubeMap& f) {
    // Intermediate cube: every slot except the colour-1 constants.
    std::vector<int> inner_slots;   // slots of the intermediate, in order
    std::vector<int> outer_image;   // positions of f kept by the outer map
    for (std::size_t k = 0; k < f.slots.size(); ++k)
        if (f.slots[k] != CubeMap::kOne) {
            outer_image.push_back(static_cast<int>(k));
            inner_slots.push_back(f.slots[k]);
        }
    int q = static_cast<int>(inner_slots.size()) - 1;
    std::vector<int> inner_image;
    for (std::size_t k = 0; k < inner_slots.size(); ++k)
        if (inner_slots[k] != CubeMap::kZero)
            inner_image.push_back(static_cast<int>(k));
    return {InjMap::make(q, f.target - 1, std::move(outer_image)),
            InjMap::make(f.source - 1, q, std::move(inner_image))};
}

ReverseMonochromaticFactorization reverse_monochromatic_factorization(const CubeMap& f) {
    std::vector<int> inner_slots;
    std::vector<int> outer_image;
    for (std::size_t k = 0; k < f.slots.size(); ++k)
        if (f.slots[k] != CubeMap::kZero) {
            outer_image.push_back(static_cast<int>(k));
            inner_slots.push_back(f.slots[k]);
        }
    int q = static_cast<int>(inner_slots.size()) - 1;
    std::vector<int> inner_image;
    for (std::size_t k = 0; k < inner_slots.size(); ++k)
        if (inner_slots[k] != CubeMap::kOne)
            inner_image.push_back(static_cast<int>(k));
    return {InjMap::make(q, f.target - 1, std::move(outer_image)),
            InjMap::make(f.source - 1, q, std::move(inner_image))};
}

// ---------------------------------------------------------------- functors

std::string to_string(Functor f) {
    switch (f) {
    case Functor::u_delta: return "u_delta";
    case Functor::u_a: return "u_a";
    case Functor::u_square: return "u_square";
    case Functor::v: return "v";
    case Functor::j0: return "j0";
    case Functor::j1: return "j1";
    case Functor::q: return "q";
    }
    return "?";
}

Functor parse_functor(std::string_view text) {
    for (Functor f : {Functor::u_delta, Functor::u_a, Functor::u_square, Functor::v, Functor::j0, Functor::j1,
                      Functor::q})
        if (to_string(f) == text)
            return f;
    throw CategoryError("unknown functor '" + std::string(text) + "'");
}

Kind functor_source(Functor f) {
    switch (f) {
    case Functor::u_delta:
    case Functor::u_square: return Kind::chain0;
    case Functor::u_a: return Kind::chain_neg1;
    case Functor::v:
    case Functor::j0:
    case Functor::j1: return Kind::aug_ssimp;
    case Functor::q: return Kind::scube;
    }
    throw CategoryError("unreachable");
}

Kind functor_target(Functor f) {
    switch (f) {
    case Functor::u_delta: return Kind::ssimp;
    case Functor::u_a:
    case Functor::q: return Kind::aug_ssimp;
    case Functor::u_square:
    case Functor::v:
    case Functor::j0:
    case Functor::j1: return Kind::scube;
    }
    throw CategoryError("unreachable");
}

int functor_object(Functor f, int n) {
    switch (f) {
    case Functor::v:
    case Functor::j0:
    case Functor::j1: return n + 1;
    case Functor::q: return n - 1;
    default: return n;
    }
}

namespace {

Morphism identity_of(Kind kind, int n) {
    switch (kind) {
    case Kind::ssimp:
    case Kind::aug_ssimp: return InjMap::identity(n);
    case Kind::scube: return CubeMap::identity(n);
    case Kind::chain0:
    case Kind::chain_neg1: return OmegaMap::identity(n);
    }
    throw CategoryError("unreachable");
}

bool belongs_to(Kind kind, const Morphism& f) {
    int s = source_of(f);
    if (s < min_degree(kind))
        return false;
    switch (kind) {
    case Kind::ssimp:
    case Kind::aug_ssimp: return std::holds_alternative<InjMap>(f);
    case Kind::scube: return std::holds_alternative<CubeMap>(f);
    case Kind::chain0:
    case Kind::chain_neg1: return std::holds_alternative<OmegaMap>(f);
    }
    return false;
}

}  // namespace

LinComb apply_functor(Functor which, const GeneratorId& g) {
    Kind src = functor_source(which);
    if (!is_legal(src, g))
        throw CategoryError("generator '" + g.token() + "' is not in the source of " + to_string(which));
    switch (which) {
    case Functor::u_delta: return d_lower(0, g.n, Kind::ssimp);
    case Functor::u_a: return d_lower(0, g.n, Kind::aug_ssimp);
    case Functor::u_square: {
        LinComb out(g.n - 1, g.n);
        for (int i = 1; i <= g.n; ++i) {
            Rational sign = (i % 2 == 1) ? 1 : -1;
            out.add(CubeMap::coface(i, 1, g.n), sign);
            out.add(CubeMap::coface(i, 0, g.n), -sign);
        }
        return out;
    }
    case Functor::j0: return LinComb(CubeMap::coface(g.i + 1, 0, g.n + 1));
    case Functor::j1: return LinComb(CubeMap::coface(g.i + 1, 1, g.n + 1));
    case Functor::v:
        return LinComb(CubeMap::coface(g.i + 1, 1, g.n + 1)) - LinComb(CubeMap::coface(g.i + 1, 0, g.n + 1));
    case Functor::q: return LinComb(InjMap::coface(g.i - 1, g.n - 1));
    }
    throw CategoryError("unreachable");
}

LinComb apply_functor(Functor which, const Morphism& f) {
    Kind src = functor_source(which);
    if (!belongs_to(src, f))
        throw CategoryError(to_string(f) + " is not in the source of " + to_string(which));
    auto word = generator_word(src, f);
    if (word.empty())
        return LinComb(identity_of(functor_target(which), functor_object(which, source_of(f))));
    std::vector<LinComb> images;
    images.reserve(word.size());
    for (const auto& g : word)
        images.push_back(apply_functor(which, g));
    return compose_word(images);
}

LinComb apply_functor(Functor which, const LinComb& f) {
    LinComb out(functor_object(which, f.source()), functor_object(which, f.target()));
    for (const auto& [m, c] : f.terms())
        out += apply_functor(which, m) * c;
    return out;
}

LinComb d_lower(int i, int n, Kind kind) {
    if (kind != Kind::ssimp && kind != Kind::aug_ssimp)
        throw CategoryError("d_lower is defined for the simplex kinds only");
    if (n < min_degree(kind) + 1 || i < 0 || i > n)
        throw CategoryError("d_{" + std::to_string(i) + "," + std::to_string(n) + "} is out of range");
    LinComb out(n - 1, n);
    for (int j = i; j <= n; ++j)
        out.add(InjMap::coface(j, n), (j % 2 == 0) ? 1 : -1);
    return out;
}

// ---------------------------------------------------------------- hom bases

namespace {

void subsets(int universe, int size, std::vector<int>& cur, int start, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x < universe; ++x) {
        if (universe - x < size - static_cast<int>(cur.size()))
            break;
        cur.push_back(x);
        subsets(universe, size, cur, x + 1, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(int universe, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (size >= 0 && size <= universe)
        subsets(universe, size, cur, 0, out);
    return out;
}

std::vector<Morphism> build_hom_basis(Kind kind, int m, int n) {
    std::vector<Morphism> out;
    if (m > n)
        return out;
    switch (kind) {
    case Kind::ssimp:
    case Kind::aug_ssimp:
        for (auto& img : all_subsets(n + 1, m + 1))
            out.emplace_back(InjMap{m, n, img});
        break;
    case Kind::scube:
        for (auto& pos : all_subsets(n, m)) {
            int consts = n - m;
            for (int mask = 0; mask < (1 << consts); ++mask) {
                std::vector<int> slots(static_cast<std::size_t>(n));
                int coord = 1;
                int c = 0;
                std::size_t pi = 0;
                for (int p = 0; p < n; ++p) {
                    if (pi < pos.size() && pos[pi] == p) {
                        slots[static_cast<std::size_t>(p)] = coord++;
                        ++pi;
                    } else {
                        slots[static_cast<std::size_t>(p)] = ((mask >> c) & 1) ? CubeMap::kOne : CubeMap::kZero;
                        ++c;
                    }
                }
                out.emplace_back(CubeMap{m, n, std::move(slots)});
            }
        }
        break;
    case Kind::chain0:
    case Kind::chain_neg1:
        if (m == n)
            out.emplace_back(OmegaMap::identity(n));
        else if (m == n - 1)
            out.emplace_back(OmegaMap::d(n));
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<Morphism>& hom_basis(Kind kind, int m, int n) {
    if (m < min_degree(kind) || n < min_degree(kind))
        throw CategoryError("object below the minimum degree of " + to_string(kind));
    thread_local std::map<std::tuple<Kind, int, int>, std::vector<Morphism>> cache;
    auto key = std::make_tuple(kind, m, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_hom_basis(kind, m, n)).first;
    return it->second;
}

std::size_t hom_index(Kind kind, const Morphism& f) {
    const auto& basis = hom_basis(kind, source_of(f), target_of(f));
    auto it = std::lower_bound(basis.begin(), basis.end(), f);
    if (it == basis.end() || *it != f)
        throw CategoryError(to_string(f) + " is not a basis morphism of " + to_string(kind));
    return static_cast<std::size_t>(it - basis.begin());
}

std::vector<DMonomial> strictly_decreasing_basis(Kind kind, int m, int n) {
    if (kind != Kind::ssimp && kind != Kind::aug_ssimp)
        throw CategoryError("d-monomial bases exist for the simplex kinds only");
    if (m < min_degree(kind) || n < m)
        return {};
    if (m == n)
        return {DMonomial{{}, LinComb(InjMap::identity(n))}};
    std::vector<DMonomial> out;
    for (auto& subset : all_subsets(n + 1, n - m)) {
        std::vector<int> idx(subset.rbegin(), subset.rend());  // i_n > ... > i_{m+1}
        std::vector<LinComb> word;
        for (std::size_t k = 0; k < idx.size(); ++k)
            word.push_back(d_lower(idx[k], n - static_cast<int>(k), kind));
        out.push_back(DMonomial{idx, compose_word(word)});
    }
    return out;
}

std::vector<CubicalFamilyElement> cubical_family(CubicalFamily which, int m, int n) {
    std::vector<CubicalFamilyElement> out;
    for (int q = m; q <= n; ++q) {
        for (const auto& fm : hom_basis(Kind::aug_ssimp, m, q)) {
            for (const auto& sm : hom_basis(Kind::aug_ssimp, q, n)) {
                const auto& first = std::get<InjMap>(fm);
                const auto& second = std::get<InjMap>(sm);
                LinComb value = which == CubicalFamily::sign_outer
                                    ? compose(apply_functor(Functor::v, sm), apply_functor(Functor::j0, fm))
                                    : compose(apply_functor(Functor::j0, sm), apply_functor(Functor::v, fm));
                out.push_back({first, second, std::move(value)});
            }
        }
    }
    return out;
}

}  // namespace semihom
