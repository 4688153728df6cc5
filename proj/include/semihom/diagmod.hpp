#pragma once

// Right modules over the truncated indexing algebras.  A right module X is a
// contravariant functor: each degree-raising generator g : n-1 -> n acts by a
// matrix X(g) : X_n -> X_{n-1} of shape dim(n-1) x dim(n), and
// X(g after f) = X(f) * X(g).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semihom/exactlin.hpp"
#include "semihom/simplexcat.hpp"

namespace semihom {

class ModuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unvalidated module data, as read from a file or assembled by hand.
struct ModuleData {
    Kind kind = Kind::ssimp;
    int truncation = 0;
    std::vector<std::size_t> dims;  // dims[n - min_degree(kind)], n <= truncation
    std::map<GeneratorId, RatMatrix> actions;

    std::size_t dim(int n) const;
    friend bool operator==(const ModuleData&, const ModuleData&) = default;
};

struct Violation {
    std::string relation;
    int degree = 0;
    std::string detail;
};

struct ValidationReport {
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
    std::string str() const;
};

/// Shape checks, then the defining identities of the kind in increasing
/// degree; reports the first violation found.
ValidationReport validate(const ModuleData& data);

/// A module whose data passed validate.  Immutable.
class DiagramModule {
public:
    /// Throws ModuleError carrying the first violation.
    explicit DiagramModule(ModuleData data);

    static DiagramModule zero(Kind kind, int truncation);

    Kind kind() const { return data_.kind; }
    int truncation() const { return data_.truncation; }
    int min_degree() const { return semihom::min_degree(data_.kind); }
    std::size_t dim(int n) const { return data_.dim(n); }
    std::size_t total_dim() const;
    const RatMatrix& action(const GeneratorId& g) const;
    const ModuleData& data() const { return data_; }

    friend bool operator==(const DiagramModule& a, const DiagramModule& b) { return a.data_ == b.data_; }

private:
    struct Trusted {};
    DiagramModule(ModuleData data, Trusted) : data_(std::move(data)) {}
    friend DiagramModule trusted_module(ModuleData data);

    ModuleData data_;
};

/// Wraps data that is valid by construction without re-running validate.
/// Only for constructions whose identities are proven or tested elsewhere.
DiagramModule trusted_module(ModuleData data);

/// Matrix of X(phi) : X_target -> X_source for a linear combination of
/// parallel morphisms, extended along canonical generator words.
RatMatrix act(const DiagramModule& x, const LinComb& phi);
RatMatrix act(const DiagramModule& x, const Morphism& f);

/// The right representable A(-, c) truncated at N; the basis of degree n is
/// hom_basis(kind, n, c).
DiagramModule representable(Kind kind, int c, int truncation);

/// Direct sum with block-diagonal actions.
DiagramModule direct_sum(const DiagramModule& x, const DiagramModule& y);

/// Degrees <= new_truncation only.
DiagramModule truncate(const DiagramModule& x, int new_truncation);

/// Degreewise matrices f_n : X_n -> Y_n.
struct ModuleMap {
    DiagramModule source;
    DiagramModule target;
    std::vector<RatMatrix> components;  // components[n - min_degree]

    const RatMatrix& component(int n) const;
};

/// Verifies shapes and f_{n-1} X(g) = Y(g) f_n for every generator.
ValidationReport check_map(const ModuleMap& f);

ModuleMap identity_map(const DiagramModule& x);
ModuleMap zero_map(const DiagramModule& x, const DiagramModule& y);
/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g);
ModuleMap truncate(const ModuleMap& f, int new_truncation);

/// Postcomposition with g : c -> c', as a map A(-, c) -> A(-, c').
ModuleMap yoneda_map(Kind kind, const LinComb& g, int truncation);

}  // namespace semihom
