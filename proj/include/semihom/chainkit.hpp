#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semihom/diagmod.hpp"
#include "semihom/exactlin.hpp"

namespace semihom {

class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Chain complex C_lower, ..., C_truncation with lower in {-1, 0}.  Nothing
/// is asserted above the truncation.
struct ChainComplex {
    int lower = 0;
    int truncation = 0;
    std::vector<std::size_t> dims;  // dims[n - lower]
    std::vector<RatMatrix> diff;    // diff[n - lower - 1] = d_n : C_n -> C_{n-1}

    std::size_t dim(int n) const;
    /// d_n with shape dim(n-1) x dim(n); zero matrix for n <= lower.
    /// Throws for n > truncation, where the differential is unknown.
    RatMatrix d(int n) const;

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

ValidationReport validate(const ChainComplex& c);
/// Builds and validates; throws ComplexError.
ChainComplex make_complex(int lower, int truncation, std::vector<std::size_t> dims, std::vector<RatMatrix> diff);
ChainComplex zero_complex(int lower, int truncation);

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<RatMatrix> components;  // components[n - lower]

    const RatMatrix& component(int n) const;
};

ValidationReport check_chain_map(const ChainMap& f);
ChainMap identity_chain_map(const ChainComplex& c);
/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

struct HomologyDegree {
    int degree = 0;
    std::size_t dim = 0;
    RatMatrix cycles;           // columns: basis of ker d_n
    RatMatrix boundaries;       // columns: basis of im d_{n+1}
    RatMatrix representatives;  // columns: cycles whose classes form the homology basis
    RatMatrix to_homology;      // dim x dim C_n; correct on cycles
};

/// Homology in the window [lower, truncation - 1].  The top degree is
/// withheld because its boundaries are unknown.
struct HomologyReport {
    int lower = 0;
    int upper = -1;  // empty window when upper < lower
    std::vector<HomologyDegree> degrees;

    bool in_window(int n) const { return n >= lower && n <= upper; }
    /// Throws ComplexError outside the window.
    const HomologyDegree& at(int n) const;
    std::size_t dim(int n) const { return at(n).dim; }
    std::vector<std::size_t> dims() const;
};

HomologyReport homology(const ChainComplex& c);

/// Matrices of H_n(f) in the representative bases, over the window.
std::vector<RatMatrix> homology_map(const ChainMap& f);
std::vector<RatMatrix> homology_map(const ChainMap& f, const HomologyReport& hs, const HomologyReport& ht);

struct QuasiIsoVerdict {
    bool holds = true;
    int lower = 0;
    int upper = -1;
    std::optional<int> failing_degree;
    std::string detail;
};

QuasiIsoVerdict is_quasi_iso(const ChainMap& f);

/// C with lower = -1  |->  tau C: degree 0 replaced by ker d_0.
ChainComplex good_truncation(const ChainComplex& c);
/// Drops degree -1.
ChainComplex brutal_truncation(const ChainComplex& c);
/// tau f : tau C -> tau D for a chain map between complexes starting in degree -1.
ChainMap good_truncation(const ChainMap& f);
/// Drops degree -1 of source, target and map.
ChainMap brutal_truncation(const ChainMap& f);
/// The inclusion tau C -> brutal C.
ChainMap good_truncation_inclusion(const ChainComplex& c);

/// Relabels degree n as n + by; by is +1 or -1 and the new lower bound must
/// lie in {-1, 0}.
ChainComplex reindex_shift(const ChainComplex& c, int by);

struct Cell {
    enum class Type { disk, sphere };
    Type type = Type::sphere;
    int n = 0;

    static Cell disk(int n) { return {Type::disk, n}; }
    static Cell sphere(int n) { return {Type::sphere, n}; }
};

/// Direct sum of the elementary complexes, in the order given.  With a twist
/// (one invertible matrix P_n per degree, indexed n - lower) the result is
/// conjugated: d_n becomes P_{n-1} d_n P_n^{-1}.
ChainComplex disk_sphere_complex(int lower, int truncation, const std::vector<Cell>& cells,
                                 const std::vector<RatMatrix>* twist = nullptr);

/// Chain complexes are right modules over Omega (lower 0) or Omega_a (lower -1).
DiagramModule to_module(const ChainComplex& c);
ChainComplex to_complex(const DiagramModule& x);
ChainMap to_chain_map(const ModuleMap& f);
ModuleMap to_module_map(const ChainMap& f);

}  // namespace semihom
