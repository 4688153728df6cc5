#pragma once

// Injective simplex and cube categories, the differential algebras Omega and
// Omega_a, and the comparison functors between their k-linearizations.
//
// Composition convention, fixed repo-wide: compose(g, f) is "g after f", and
// every word of generators is listed outermost first, so the rightmost
// factor acts first.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semihom/rational.hpp"

namespace semihom {

/// Indexing algebra of a module.  ssimp = k[Delta_inj], aug_ssimp =
/// k[Delta_{a,inj}], scube = k[cube_inj], chain0 = Omega, chain_neg1 = Omega_a.
enum class Kind { ssimp, aug_ssimp, scube, chain0, chain_neg1 };

int min_degree(Kind kind);
bool is_chain_kind(Kind kind);
std::string to_string(Kind kind);
Kind parse_kind(std::string_view text);

class CategoryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Morphism [source] -> [target] of Delta_{a,inj}, stored by its image.
/// Degree -1 is the empty ordinal.
struct InjMap {
    int source = 0;
    int target = 0;
    std::vector<int> image;

    static InjMap make(int source, int target, std::vector<int> image);
    static InjMap identity(int n);
    /// delta^i : [n-1] -> [n], omitting i.
    static InjMap coface(int i, int n);

    /// Points of [target] not hit, ascending.
    std::vector<int> missing() const;
    std::string str() const;

    friend auto operator<=>(const InjMap&, const InjMap&) = default;
    friend bool operator==(const InjMap&, const InjMap&) = default;
};

/// Morphism cube_source -> cube_target of cube_inj, stored by the assignment
/// of each target coordinate: a source coordinate x_k (k >= 1) or a constant.
struct CubeMap {
    static constexpr int kZero = -2;
    static constexpr int kOne = -1;

    int source = 0;
    int target = 0;
    std::vector<int> slots;

    static CubeMap make(int source, int target, std::vector<int> slots);
    static CubeMap identity(int n);
    /// delta_i^eps : cube_{n-1} -> cube_n, inserting eps at position i (1-based).
    static CubeMap coface(int i, int eps, int n);

    std::string str() const;

    friend auto operator<=>(const CubeMap&, const CubeMap&) = default;
    friend bool operator==(const CubeMap&, const CubeMap&) = default;
};

/// Basis morphism of Omega or Omega_a: the identity of [n] or d_n : [n-1] -> [n].
struct OmegaMap {
    int source = 0;
    int target = 0;

    static OmegaMap identity(int n) { return {n, n}; }
    static OmegaMap d(int n) { return {n - 1, n}; }
    bool is_identity() const { return source == target; }
    std::string str() const;

    friend auto operator<=>(const OmegaMap&, const OmegaMap&) = default;
    friend bool operator==(const OmegaMap&, const OmegaMap&) = default;
};

using Morphism = std::variant<InjMap, CubeMap, OmegaMap>;

int source_of(const Morphism& f);
int target_of(const Morphism& f);
std::string to_string(const Morphism& f);
/// Inverse of to_string for the "inj", "cube" and "omega" text forms.
Morphism parse_morphism(std::string_view text);

/// Finite k-linear combination of parallel basis morphisms; zero
/// coefficients are never stored.
class LinComb {
public:
    LinComb(int source, int target) : source_(source), target_(target) {}
    LinComb(const Morphism& f, Rational coeff = 1);  // NOLINT(google-explicit-constructor)

    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<Morphism, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Morphism& f) const;

    void add(const Morphism& f, const Rational& coeff);
    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb& operator*=(const Rational& s);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }

    friend bool operator==(const LinComb&, const LinComb&) = default;
    std::string str() const;

private:
    void check_parallel(int s, int t) const;
    int source_;
    int target_;
    std::map<Morphism, Rational> terms_;
};

/// One generating arrow: delta^i : [n-1] -> [n], delta_i^eps : cube_{n-1} -> cube_n,
/// or d_n : [n-1] -> [n].
struct GeneratorId {
    enum class Type { delta, cube, omega_d };
    Type type = Type::delta;
    int i = 0;
    int eps = 0;
    int n = 0;

    static GeneratorId delta(int i, int n) { return {Type::delta, i, 0, n}; }
    static GeneratorId cube(int i, int eps, int n) { return {Type::cube, i, eps, n}; }
    static GeneratorId omega_d(int n) { return {Type::omega_d, 0, 0, n}; }

    /// "delta i n", "cube i e n" or "d n".
    std::string token() const;
    static GeneratorId parse(std::string_view token);

    friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

bool is_legal(Kind kind, const GeneratorId& g);
Morphism generator_morphism(Kind kind, const GeneratorId& g);
/// Generators with target degree n (empty when n is at or below the minimum degree).
std::vector<GeneratorId> generators_into(Kind kind, int n);
/// All generators with target degree <= truncation.
std::vector<GeneratorId> all_generators(Kind kind, int truncation);

InjMap compose_inj(const InjMap& g, const InjMap& f);
CubeMap compose_cube(const CubeMap& g, const CubeMap& f);
/// g after f on basis morphisms of any kind; zero for d_{n+1} d_n.
LinComb compose(const Morphism& g, const Morphism& f);
LinComb compose(const LinComb& g, const LinComb& f);
/// Left-to-right product of a word, outermost first.
LinComb compose_word(const std::vector<LinComb>& word);

/// Canonical coface word of an injection, outermost first, with strictly
/// decreasing indices.  Empty for identities.
std::vector<GeneratorId> coface_factorization(const InjMap& f);
/// Canonical coface word of a cube map, outermost first, positions decreasing.
std::vector<GeneratorId> coface_factorization(const CubeMap& f);
/// Generator word for any basis morphism of `kind`.
std::vector<GeneratorId> generator_word(Kind kind, const Morphism& f);

/// f = j^1(colour1) after j^0(colour0), where colour0 records the coordinates
/// inserted with constant 0 and colour1 those inserted with constant 1.
struct MonochromaticFactorization {
    InjMap colour1;
    InjMap colour0;
};
MonochromaticFactorization monochromatic_factorization(const CubeMap& f);
/// f = j^0(outer) after j^1(inner): the factorization with the colours swapped.
struct ReverseMonochromaticFactorization {
    InjMap outer0;
    InjMap inner1;
};
ReverseMonochromaticFactorization reverse_monochromatic_factorization(const CubeMap& f);

enum class Functor { u_delta, u_a, u_square, v, j0, j1, q };

std::string to_string(Functor f);
Functor parse_functor(std::string_view text);
Kind functor_source(Functor f);
Kind functor_target(Functor f);
/// Degree of the image object: u: n -> n, v/j0/j1: n -> n+1, q: n -> n-1.
int functor_object(Functor f, int n);

/// Throws CategoryError when the argument is not in the functor's source.
LinComb apply_functor(Functor which, const GeneratorId& g);
LinComb apply_functor(Functor which, const Morphism& f);
LinComb apply_functor(Functor which, const LinComb& f);

/// d_{i,n} = sum_{j=i}^{n} (-1)^j delta^j : [n-1] -> [n].
LinComb d_lower(int i, int n, Kind kind);

/// Every basis morphism m -> n, sorted ascending (the canonical basis order).
/// The reference stays valid for the lifetime of the calling thread.
const std::vector<Morphism>& hom_basis(Kind kind, int m, int n);
/// Position of f in hom_basis(kind, source, target).
std::size_t hom_index(Kind kind, const Morphism& f);

/// Identity or d_{i_n,n} ... d_{i_{m+1},m+1}, with i_n > ... > i_{m+1} >= 0.
struct DMonomial {
    std::vector<int> indices;  // i_n first
    LinComb value;
};
std::vector<DMonomial> strictly_decreasing_basis(Kind kind, int m, int n);

/// The families {v(a) j^0(b)} (sign_outer) and {j^0(b) v(a)} (sign_inner)
/// spanning k[cube_inj](cube_{m+1}, cube_{n+1}), indexed by [m] -> [q] -> [n].
struct CubicalFamilyElement {
    InjMap first;   // applied first
    InjMap second;  // applied second
    LinComb value;
};
enum class CubicalFamily { sign_outer, sign_inner };
std::vector<CubicalFamilyElement> cubical_family(CubicalFamily which, int m, int n);

}  // namespace semihom
