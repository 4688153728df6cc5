#pragma once

// Corpus generation, weak-equivalence and fibration predicates, and the
// verification battery with its machine-readable report.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "semihom/transport.hpp"

namespace semihom {

struct CorpusSpec {
    std::uint64_t seed = 1;
    int truncation = 5;
    std::size_t max_dim = 6;
    std::size_t representables = 8;
    std::size_t induced = 9;
    std::size_t direct_sums = 8;
    std::size_t yoneda_maps = 10;

    std::size_t module_count() const { return representables + induced + direct_sums; }
};

/// Throws std::invalid_argument when the truncation is below 2 or above
/// `max_truncation`, or max_dim is zero.  Counts may be zero.
void check_spec(const CorpusSpec& spec, int max_truncation);

struct CorpusModule {
    std::string name;
    DiagramModule module;
};

struct CorpusMap {
    std::string name;
    ModuleMap map;
};

/// The input of an induced corpus module: a chain complex for u_delta and
/// u_a, an augmented semisimplicial module for v.
struct InducedSource {
    Functor along = Functor::u_delta;
    std::size_t module_index = 0;  // position of u_! source in Corpus::modules
    DiagramModule source;
};

struct DirectSumRecord {
    std::size_t sum_index = 0;
    std::size_t left_index = 0;
    std::size_t right_index = 0;
};

struct Corpus {
    std::vector<CorpusModule> modules;  // over the index categories
    std::vector<InducedSource> sources;
    std::vector<DirectSumRecord> sums;
    std::vector<CorpusMap> maps;
};

/// Deterministic in the spec.  Every module has zero top degree, so induced
/// constructions keep their full window, and no degree exceeds max_dim.
Corpus generate_corpus(const CorpusSpec& spec);

struct WeqVerdict {
    bool holds = false;
    std::vector<std::pair<std::string, bool>> conditions;  // the equivalent characterizations
    bool agree = true;
    int lower = 0;
    int upper = -1;
    std::string witness;
};

/// ssimp/scube: quasi-isomorphism of the restricted complex, cross-checked
/// against homology isomorphisms, Tor against k_constant and Tor over Omega
/// of the restriction (and, for scube, the sign shadow).  aug_ssimp: tau(f)
/// quasi-isomorphism with H^a_{-1}(f) iso, cross-checked against the full
/// augmented complex and both Tor descriptions.  Chain kinds: quasi-isomorphism.
WeqVerdict check_weak_equivalence(const ModuleMap& f);

struct FibVerdict {
    bool holds = false;
    std::optional<int> failing_degree;
    std::string witness;
};

/// Degreewise surjectivity of u* f (ssimp), C^a(f) (aug_ssimp), C^a(v* f)
/// (scube) or f itself (chain kinds).
FibVerdict check_fibration(const ModuleMap& f);

enum class Verdict { pass, fail, expected_failure, unexpected_pass, recorded };
std::string to_string(Verdict v);

struct CheckResult {
    std::string name;
    std::string instance;
    Verdict verdict = Verdict::pass;
    std::string window;
    nlohmann::json witness;
    double elapsed_ms = 0;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    int truncation = 0;
    std::vector<CheckResult> checks;

    bool ok() const;  // no fail and no unexpected_pass
    void add(CheckResult r) { checks.push_back(std::move(r)); }
};

inline constexpr const char* kReportFormat = "semihomology-report/1";

/// Elapsed times are written only when requested, so that reports for a
/// fixed spec are byte-identical.
nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = false);
VerificationReport report_from_json(const nlohmann::json& j);
std::string report_table(const VerificationReport& r);

/// M = the augmented representable at [0]; v_! M, v* v_! M and the unit.
VerificationReport run_counterexample();

/// Every structural and corpus check.  `threads` > 1 fans instance checks
/// out; the report order does not depend on it.
VerificationReport run_battery(const CorpusSpec& spec, unsigned threads = 1);

/// Independent enumerations used as oracles for the hom bases.
std::size_t brute_force_injections(int m, int n);
std::size_t brute_force_cube_maps(int m, int n);

}  // namespace semihom
