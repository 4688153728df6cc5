// Acceptance suite: one line per criterion, exit status 0 only when every
// requested criterion passes.  Corpus criteria run the default battery; the
// structural ones run it over an empty corpus.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semihom/io.hpp"
#include "semihom/oracle.hpp"

using namespace semihom;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Tally {
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failing;

    bool all() const { return total > 0 && passed == total; }
    std::string str() const { return std::to_string(passed) + "/" + std::to_string(total); }
};

class Reports {
public:
    const VerificationReport& full() {
        if (!full_)
            full_ = run_battery(CorpusSpec{}, 1);
        return *full_;
    }
    const VerificationReport& structural() {
        if (!structural_) {
            CorpusSpec spec;
            spec.representables = spec.induced = spec.direct_sums = spec.yoneda_maps = 0;
            structural_ = run_battery(spec, 1);
        }
        return *structural_;
    }

private:
    std::optional<VerificationReport> full_;
    std::optional<VerificationReport> structural_;
};

Tally tally(const VerificationReport& r, const std::string& name) {
    Tally t;
    for (const auto& c : r.checks) {
        if (c.name != name)
            continue;
        ++t.total;
        if (c.verdict == Verdict::pass || c.verdict == Verdict::expected_failure)
            ++t.passed;
        else
            t.failing.push_back(c.instance);
    }
    return t;
}

Outcome from_checks(const VerificationReport& r, const std::vector<std::string>& names) {
    Outcome o{true, ""};
    for (const auto& n : names) {
        auto t = tally(r, n);
        o.pass = o.pass && t.all();
        if (!o.detail.empty())
            o.detail += ", ";
        o.detail += n + " " + t.str();
    }
    return o;
}

long choose(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Outcome counterexample(Reports&) {
    auto start = std::chrono::steady_clock::now();
    auto r = run_counterexample();
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    auto m = representable(Kind::aug_ssimp, 0, 4);
    auto induced = induce(Functor::v, m).module;
    auto h_src = homology(augmented_chain(m)).dim(-1);
    auto h_tgt = homology(augmented_chain(restrict_v(induced))).dim(-1);
    std::ostringstream dims;
    for (int n = 0; n <= induced.truncation(); ++n)
        dims << (n ? "," : "") << induced.dim(n);
    bool shape = induced.dim(0) == 2 && induced.dim(1) == 1;
    for (int n = 2; n <= induced.truncation(); ++n)
        shape = shape && induced.dim(n) == 0;

    auto t = tally(r, "counterexample");
    bool expected = false;
    for (const auto& c : r.checks)
        expected = expected || c.verdict == Verdict::expected_failure;
    Outcome o;
    o.pass = r.ok() && expected && t.all() && h_src == 0 && h_tgt == 1 && shape && seconds < 1.0;
    std::ostringstream d;
    d << "H^a_-1(M)=" << h_src << " H^a_-1(v*v_!M)=" << h_tgt << " v_!M dims (" << dims.str() << ") checks "
      << t.str() << " in " << static_cast<long>(seconds * 1000) << " ms";
    o.detail = d.str();
    return o;
}

Outcome hom_dimensions(Reports& reports) {
    bool ok = true;
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= n; ++m) {
            ok = ok && static_cast<long>(hom_basis(Kind::ssimp, m, n).size()) == choose(n + 1, m + 1) &&
                 brute_force_injections(m, n) == hom_basis(Kind::ssimp, m, n).size();
            ok = ok && static_cast<long>(hom_basis(Kind::scube, m, n).size()) == (choose(n, m) << (n - m)) &&
                 brute_force_cube_maps(m, n) == hom_basis(Kind::scube, m, n).size();
        }
    auto o = from_checks(reports.structural(), {"hom_dimensions"});
    o.pass = o.pass && ok;
    o.detail += ok ? ", direct comparison for 0 <= m <= n <= 6 agrees" : ", direct comparison disagrees";
    return o;
}

Outcome freeness(Reports& reports) { return from_checks(reports.structural(), {"freeness_bases"}); }

Outcome resolutions(Reports& reports) { return from_checks(reports.structural(), {"resolution_exactness"}); }

Outcome tor_identifications(Reports& reports) {
    return from_checks(reports.full(), {"tor_identification", "low_degree_sequence"});
}

Outcome characterizations(Reports& reports) { return from_checks(reports.full(), {"weq_characterizations"}); }

Outcome sign_shadow(Reports& reports) { return from_checks(reports.full(), {"sign_shadow"}); }

Outcome unit_counit(Reports& reports) {
    const auto& r = reports.full();
    Outcome o{true, ""};
    for (const std::string name : {"unit_u_delta", "counit_u_delta", "unit_u_a", "counit_u_a"}) {
        auto t = tally(r, name);
        o.pass = o.pass && t.all();
        if (!o.detail.empty())
            o.detail += ", ";
        o.detail += name + " " + t.str();
        if (!t.failing.empty())
            o.detail += " (first failure: " + t.failing.front() + ")";
    }
    return o;
}

Outcome point_to_constant(Reports& reports) { return from_checks(reports.structural(), {"k0_to_kconstant"}); }

Outcome fibrations(Reports& reports) { return from_checks(reports.structural(), {"fibration_fixtures"}); }

Outcome determinism(Reports& reports) {
    auto o = from_checks(reports.full(), {"determinism", "module_roundtrip"});
    auto first = dump_canonical(report_to_json(reports.full()));
    auto second = dump_canonical(report_to_json(run_battery(CorpusSpec{}, 2)));
    bool same = first == second;
    o.pass = o.pass && same;
    o.detail += same ? ", report byte-identical across runs (" + std::to_string(first.size()) + " bytes)"
                     : ", reports differ between runs";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome(Reports&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "counterexample reproduction", counterexample},
        {2, "hom-dimension oracles", hom_dimensions},
        {3, "freeness bases", freeness},
        {4, "resolution exactness", resolutions},
        {5, "Tor identifications and low-degree sequence", tor_identifications},
        {6, "weak-equivalence characterizations agree", characterizations},
        {7, "sign-shadow shift", sign_shadow},
        {8, "unit and counit weak equivalences for u_delta and u_a", unit_counit},
        {9, "k[0] -> k_bullet quasi-isomorphism", point_to_constant},
        {10, "fibration detection", fibrations},
        {11, "determinism and module round-trip", determinism},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria for the semihomology library"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion numbers to run (default: all)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    Reports reports;
    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        Outcome o;
        try {
            o = c.run(reports);
        } catch (const std::exception& ex) {
            o = {false, std::string("error: ") + ex.what()};
        }
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
                  << "]" << std::endl;
    }
    return all_pass ? 0 : 1;
}
