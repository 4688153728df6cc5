#pragma once

// Restriction and induction along the comparison functors, the unit and
// counit of the induction-restriction adjunction, and Tor against the
// coefficient modules through explicit representable resolutions.

#include <optional>
#include <string>
#include <vector>

#include "semihom/chainkit.hpp"
#include "semihom/diagmod.hpp"

namespace semihom {

class TransportError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// u* X for u in {u_delta, u_a, u_square, v}: degree n is X at the image
/// object of n and each generator g acts by X(u(g)).  Along v the truncation
/// drops by one.
DiagramModule restrict_module(Functor u, const DiagramModule& x);

/// The restricted chain complex along u_delta or u_square (lower bound 0).
ChainComplex restrict(Functor u, const DiagramModule& x);
/// The full augmented complex of an augmented semisimplicial module.
ChainComplex augmented_chain(const DiagramModule& x);
/// v* X, an augmented semisimplicial module truncated one degree lower.
DiagramModule restrict_v(const DiagramModule& x);

/// One basis vector of an induced module: the class of e_index (x) morphism
/// with e_index in M(object).
struct PresentationLabel {
    int object = 0;
    Morphism morphism;
    std::size_t index = 0;
};

struct InductionResult {
    DiagramModule module;  // truncated at window_upper
    int window_lower = 0;
    int window_upper = 0;
    std::vector<std::vector<PresentationLabel>> presentation;  // per degree from window_lower
};

/// u_! M as a coend over the source algebra.  The window is the longest
/// initial segment of target degrees on which the coends built from source
/// degrees <= N and <= N - 1 agree (the natural map between them is an
/// isomorphism).  Throws TransportError when the window is empty.
InductionResult induce(Functor u, const DiagramModule& m);

/// eta : M -> u* u_! M, sending m to the class of m (x) id.  M is truncated
/// to the largest degree the target covers.
ModuleMap unit_map(Functor u, const DiagramModule& m);
/// eps : u_! u* X -> X, sending the class of x (x) phi to X(phi) x.  X is
/// truncated to the window of the induced module.
ModuleMap counit_map(Functor u, const DiagramModule& x);

/// A covariant module: L(g) : L(n-1) -> L(n) has shape dim(n) x dim(n-1).
struct LeftModule {
    Kind kind = Kind::ssimp;
    int truncation = 0;
    std::vector<std::size_t> dims;  // dims[n - min_degree]
    std::map<GeneratorId, RatMatrix> actions;

    std::size_t dim(int n) const;
    int min_degree() const { return semihom::min_degree(kind); }
};

ValidationReport validate(const LeftModule& l);

struct LeftModuleMap {
    LeftModule source;
    LeftModule target;
    std::vector<RatMatrix> components;  // components[n - min_degree]
};

/// A(c, -) truncated at N, with basis hom_basis(kind, c, n) in degree n.
LeftModule left_representable(Kind kind, int c, int truncation);
/// Precomposition with phi : c -> c', as a map A(c', -) -> A(c, -).
LeftModuleMap left_yoneda_map(Kind kind, const LinComb& phi, int truncation);

enum class CoefficientId { k_point, k_constant, k_constant_shifted, k_point_neg1 };

std::string to_string(CoefficientId c);
CoefficientId parse_coefficient(std::string_view text);
bool is_legal_pairing(Kind kind, CoefficientId c);
/// The coefficient as a left module over `kind`: k[0] and k[-1] are simple,
/// k_constant is constant (over Omega, d_n acts by sum_i (-1)^i over i in
/// [0, n]), and k_constant_shifted is zero in degree -1 and k above.
LeftModule coefficient_module(Kind kind, CoefficientId c, int truncation);

/// The tensor product X (x)_A L as a coend over degrees <= the common truncation.
std::size_t tensor_dim(const DiagramModule& x, const LeftModule& l);
/// Matrix of X (x) f between the chosen coend bases.
RatMatrix tensor_map(const DiagramModule& x, const LeftModuleMap& f);

/// Matrix of f (x) L between the chosen coend bases.
RatMatrix tensor_map(const ModuleMap& f, const LeftModule& l);

/// The explicit resolution P_j -> coefficient used by tor: P_j is a left
/// representable and d_j is precomposition with the image of a differential.
struct Resolution {
    std::vector<LeftModule> terms;      // P_0, P_1, ...
    std::vector<LeftModuleMap> diffs;   // diffs[j-1] : P_j -> P_{j-1}
    LeftModuleMap augmentation;         // P_0 -> coefficient
};
Resolution resolution(Kind kind, CoefficientId c, int truncation);

/// The complex X (x)_A P_j, computed as coends.
ChainComplex tor_complex(const DiagramModule& x, CoefficientId c);
/// Tor_j(X, coefficient) in the window [0, top - 1].
HomologyReport tor(const DiagramModule& x, CoefficientId c);
/// The chain map f (x) P_j between Tor complexes.
ChainMap tor_chain_map(const ModuleMap& f, CoefficientId c);

/// 0 -> H_0(tau X) -> Tor_0(X, k_[0]) -> X_{-1} -> H^a_{-1}(X) -> 0.
struct LowDegreeSequence {
    std::size_t h0_tau = 0;
    std::size_t tor0 = 0;
    std::size_t x_neg1 = 0;
    std::size_t h_neg1 = 0;
    RatMatrix first;   // H_0(tau X) -> Tor_0
    RatMatrix second;  // Tor_0 -> X_{-1}
    RatMatrix third;   // X_{-1} -> H^a_{-1}

    /// Rank-nullity exactness at all four nodes.
    bool exact() const;
};
LowDegreeSequence low_degree_sequence(const DiagramModule& x);

}  // namespace semihom
