// semihomology: command-line front end to the library.
//
// Exit status: 0 success, 1 mathematical failure, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semihom/io.hpp"
#include "semihom/oracle.hpp"

using namespace semihom;
using nlohmann::json;

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string in;
    std::string out;
    std::string format = "table";
    std::string along;
    std::string coeff;
    std::string mode = "module";
    std::string to = "json";
    int trunc = -100;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool window_strict = false;
    bool timing = false;
};

int max_truncation() {
    const char* env = std::getenv("SEMIHOMOLOGY_MAX_TRUNC");
    if (!env)
        return 8;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw InputError("SEMIHOMOLOGY_MAX_TRUNC is not an integer");
    }
}

void check_cap(int truncation) {
    int cap = max_truncation();
    if (truncation > cap)
        throw InputError("truncation " + std::to_string(truncation) + " exceeds SEMIHOMOLOGY_MAX_TRUNC = " +
                         std::to_string(cap));
}

json read_json(const std::string& path) {
    if (path.empty())
        throw InputError("--in is required");
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw InputError(path + ": " + ex.what());
    }
}

DiagramModule read_module(const Options& o) {
    auto m = load_module(o.in);
    check_cap(m.truncation());
    return m;
}

ModuleMap read_map(const Options& o) {
    auto f = load_map(o.in);
    check_cap(f.source.truncation());
    return f;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out);
    if (!out)
        throw InputError(o.out + ": cannot write");
    out << text;
}

void emit_module(const Options& o, const DiagramModule& x) {
    emit(o, o.format == "table" && o.out.empty() ? text_dump(x) : dump_module(x));
}

std::string homology_table(const HomologyReport& h) {
    std::ostringstream os;
    os << "window [" << h.lower << ", " << h.upper << "]\n";
    for (const auto& d : h.degrees)
        os << "H_" << d.degree << " = " << d.dim << "\n";
    return os.str();
}

json homology_json(const HomologyReport& h) {
    json j;
    j["window"] = {h.lower, h.upper};
    json degrees = json::array();
    for (const auto& d : h.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"dim", d.dim},
                           {"representatives", matrix_to_json(d.representatives)},
                           {"boundaries", matrix_to_json(d.boundaries)}});
    j["degrees"] = std::move(degrees);
    return j;
}

void emit_homology(const Options& o, const HomologyReport& h) {
    emit(o, o.format == "json" ? dump_canonical(homology_json(h)) : homology_table(h));
}

ChainComplex complex_of(const DiagramModule& x) {
    switch (x.kind()) {
    case Kind::ssimp: return restrict(Functor::u_delta, x);
    case Kind::scube: return restrict(Functor::u_square, x);
    case Kind::aug_ssimp: return augmented_chain(x);
    default: return to_complex(x);
    }
}

Functor default_functor(Kind source_kind) {
    switch (source_kind) {
    case Kind::chain0: return Functor::u_delta;
    case Kind::chain_neg1: return Functor::u_a;
    case Kind::aug_ssimp: return Functor::v;
    default: throw InputError("no induction starts from " + to_string(source_kind));
    }
}

Functor parse_along(const Options& o, Kind fallback_source) {
    if (o.along.empty())
        return default_functor(fallback_source);
    try {
        return parse_functor(o.along);
    } catch (const CategoryError& ex) {
        throw InputError(ex.what());
    }
}

void strict_window(const Options& o, Functor u, const DiagramModule& m, int window_upper) {
    int full = functor_object(u, m.truncation());
    if (o.window_strict && window_upper < full)
        throw InputError("induction window ends at " + std::to_string(window_upper) + ", below the target degree " +
                         std::to_string(full) + " (--window-strict)");
    if (window_upper < full)
        std::cerr << "note: induced module truncated to its window [.., " << window_upper << "]\n";
}

int emit_report(const Options& o, const VerificationReport& r) {
    emit(o, o.format == "json" ? dump_canonical(report_to_json(r, o.timing)) : report_table(r));
    return r.ok() ? 0 : 1;
}

std::string weq_text(const WeqVerdict& v) {
    std::ostringstream os;
    os << "weak equivalence: " << (v.holds ? "yes" : "no") << "  window [" << v.lower << ", " << v.upper << "]\n";
    for (const auto& [name, holds] : v.conditions)
        os << "  " << name << ": " << (holds ? "yes" : "no") << "\n";
    os << "  characterizations agree: " << (v.agree ? "yes" : "no") << "\n";
    if (!v.witness.empty())
        os << "  witness: " << v.witness << "\n";
    return os.str();
}

json weq_to_json(const WeqVerdict& v) {
    json c = json::object();
    for (const auto& [name, holds] : v.conditions)
        c[name] = holds;
    return {{"holds", v.holds}, {"agree", v.agree}, {"window", {v.lower, v.upper}}, {"conditions", c},
            {"witness", v.witness}};
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Options& o) {
    auto j = read_json(o.in);
    auto data = module_data_from_json(j);
    check_cap(data.truncation);
    auto r = validate(data);
    if (o.format == "json") {
        json out{{"ok", r.ok()}};
        if (!r.ok())
            out["violation"] = {{"relation", r.violation->relation},
                                {"degree", r.violation->degree},
                                {"detail", r.violation->detail}};
        emit(o, dump_canonical(out));
    } else {
        emit(o, r.ok() ? "ok\n" : "invalid: " + r.str() + "\n");
    }
    return r.ok() ? 0 : 1;
}

int cmd_homology(const Options& o) {
    emit_homology(o, homology(complex_of(read_module(o))));
    return 0;
}

int cmd_restrict(const Options& o) {
    auto x = read_module(o);
    Functor u = Functor::u_delta;
    if (o.along.empty()) {
        if (x.kind() == Kind::scube)
            u = Functor::u_square;
        else if (x.kind() == Kind::aug_ssimp)
            u = Functor::u_a;
    } else {
        u = parse_along(o, x.kind());
    }
    emit_module(o, restrict_module(u, x));
    return 0;
}

int cmd_augment(const Options& o) {
    emit_module(o, to_module(augmented_chain(read_module(o))));
    return 0;
}

int cmd_truncate(const Options& o) {
    auto x = read_module(o);
    if (o.mode == "module") {
        if (o.trunc < x.min_degree() || o.trunc > x.truncation())
            throw InputError("--trunc must lie in [" + std::to_string(x.min_degree()) + ", " +
                             std::to_string(x.truncation()) + "]");
        emit_module(o, truncate(x, o.trunc));
    } else if (o.mode == "good" || o.mode == "brutal") {
        auto c = x.kind() == Kind::aug_ssimp ? augmented_chain(x) : to_complex(x);
        if (c.lower != -1)
            throw InputError(o.mode + " truncation needs a complex starting in degree -1");
        emit_module(o, to_module(o.mode == "good" ? good_truncation(c) : brutal_truncation(c)));
    } else {
        throw InputError("--mode must be module, good or brutal");
    }
    return 0;
}

int cmd_induce(const Options& o) {
    auto m = read_module(o);
    Functor u = parse_along(o, m.kind());
    auto res = induce(u, m);
    strict_window(o, u, m, res.window_upper);
    if (o.format == "json" || !o.out.empty()) {
        json j = module_to_json(res.module.data());
        json labels = json::object();
        for (std::size_t k = 0; k < res.presentation.size(); ++k) {
            json deg = json::array();
            for (const auto& l : res.presentation[k])
                deg.push_back({{"object", l.object}, {"morphism", to_string(l.morphism)}, {"index", l.index}});
            labels[std::to_string(res.window_lower + static_cast<int>(k))] = std::move(deg);
        }
        emit(o, dump_canonical({{"module", j}, {"window", {res.window_lower, res.window_upper}},
                                {"presentation", labels}}));
    } else {
        emit(o, "window [" + std::to_string(res.window_lower) + ", " + std::to_string(res.window_upper) + "]\n" +
                    text_dump(res.module));
    }
    return 0;
}

int cmd_adjunction(const Options& o, bool unit) {
    auto x = read_module(o);
    Functor u = Functor::u_delta;
    if (unit) {
        u = parse_along(o, x.kind());
    } else if (!o.along.empty()) {
        u = parse_along(o, x.kind());
    } else {
        switch (x.kind()) {
        case Kind::ssimp: u = Functor::u_delta; break;
        case Kind::aug_ssimp: u = Functor::u_a; break;
        case Kind::scube: u = Functor::v; break;
        default: throw InputError("no counit ends in " + to_string(x.kind()));
        }
    }
    auto f = unit ? unit_map(u, x) : counit_map(u, x);
    int covered = unit ? f.source.truncation() : f.target.truncation();
    if (covered < x.truncation()) {
        if (o.window_strict)
            throw InputError("the map only covers degrees up to " + std::to_string(covered) + " (--window-strict)");
        std::cerr << "note: map truncated to degrees <= " << covered << "\n";
    }
    auto v = check_weak_equivalence(f);
    if (o.format == "json" || !o.out.empty()) {
        json j = map_to_json(f);
        if (o.out.empty())
            emit(o, dump_canonical({{"map", j}, {"weak_equivalence", weq_to_json(v)}}));
        else
            emit(o, dump_canonical(j));
    } else {
        emit(o, std::string(unit ? "unit" : "counit") + " along " + to_string(u) + "\n" + weq_text(v));
    }
    return 0;
}

int cmd_tor(const Options& o) {
    auto x = read_module(o);
    CoefficientId c = CoefficientId::k_constant;
    if (!o.coeff.empty()) {
        try {
            c = parse_coefficient(o.coeff);
        } catch (const TransportError& ex) {
            throw InputError(ex.what());
        }
    } else if (x.kind() == Kind::aug_ssimp) {
        c = CoefficientId::k_constant_shifted;
    } else if (x.kind() == Kind::chain0) {
        c = CoefficientId::k_point;
    } else if (x.kind() == Kind::chain_neg1) {
        c = CoefficientId::k_point_neg1;
    }
    if (!is_legal_pairing(x.kind(), c))
        throw InputError("coefficient " + to_string(c) + " is not a legal Tor pairing for " + to_string(x.kind()));
    emit_homology(o, tor(x, c));
    return 0;
}

int cmd_weq(const Options& o) {
    auto v = check_weak_equivalence(read_map(o));
    emit(o, o.format == "json" ? dump_canonical(weq_to_json(v)) : weq_text(v));
    if (!v.agree)
        return 1;
    return v.holds ? 0 : 1;
}

int cmd_fib(const Options& o) {
    auto v = check_fibration(read_map(o));
    if (o.format == "json") {
        json j{{"holds", v.holds}, {"witness", v.witness}};
        if (v.failing_degree)
            j["failing_degree"] = *v.failing_degree;
        emit(o, dump_canonical(j));
    } else {
        emit(o, std::string("fibration: ") + (v.holds ? "yes" : "no") +
                    (v.witness.empty() ? "" : "  (" + v.witness + ")") + "\n");
    }
    return v.holds ? 0 : 1;
}

CorpusSpec spec_of(const Options& o) {
    CorpusSpec spec;
    spec.seed = o.seed;
    if (o.trunc != -100)
        spec.truncation = o.trunc;
    try {
        check_spec(spec, max_truncation());
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
    return spec;
}

int cmd_corpus(const Options& o) {
    auto corpus = generate_corpus(spec_of(o));
    json index = json::object();
    json modules = json::array();
    json maps = json::array();
    namespace fs = std::filesystem;
    if (!o.out.empty())
        fs::create_directories(o.out);
    for (std::size_t i = 0; i < corpus.modules.size(); ++i) {
        std::string file = "module_" + std::to_string(i) + ".json";
        modules.push_back({{"name", corpus.modules[i].name}, {"file", file}});
        if (!o.out.empty())
            save_module(corpus.modules[i].module, (fs::path(o.out) / file).string());
    }
    for (std::size_t i = 0; i < corpus.maps.size(); ++i) {
        std::string file = "map_" + std::to_string(i) + ".json";
        maps.push_back({{"name", corpus.maps[i].name}, {"file", file}});
        if (!o.out.empty())
            save_map(corpus.maps[i].map, (fs::path(o.out) / file).string());
    }
    index["modules"] = std::move(modules);
    index["maps"] = std::move(maps);
    index["seed"] = o.seed;
    std::string text = dump_canonical(index);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out((fs::path(o.out) / "index.json").string());
        out << text;
    }
    return 0;
}

int cmd_convert(const Options& o) {
    auto j = read_json(o.in);
    std::string format = j.is_object() ? j.value("format", std::string()) : std::string();
    if (format == kModuleFormat || (format.empty() && j.is_object() && j.contains("actions"))) {
        auto x = DiagramModule(module_data_from_json(j));
        if (o.to == "json")
            emit(o, dump_module(x));
        else if (o.to == "text")
            emit(o, text_dump(x));
        else
            throw InputError("modules convert to json or text");
    } else if (format == kMapFormat) {
        if (o.to != "json")
            throw InputError("maps convert to json only");
        emit(o, dump_canonical(map_to_json(map_from_json(j))));
    } else if (format == kReportFormat) {
        VerificationReport r;
        try {
            r = report_from_json(j);
        } catch (const std::exception& ex) {
            throw InputError(o.in + ": " + ex.what());
        }
        if (o.to == "json")
            emit(o, dump_canonical(report_to_json(r, o.timing)));
        else if (o.to == "table")
            emit(o, report_table(r));
        else
            throw InputError("reports convert to json or table");
    } else {
        throw InputError(o.in + ": unknown document format");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology of semisimplicial, semicubical and augmented modules over exact rationals"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub, bool needs_in) {
        auto* in = sub->add_option("--in", o.in, "input file");
        if (needs_in)
            in->required();
        sub->add_option("--out", o.out, "output file or directory");
        sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_flag("--window-strict", o.window_strict, "fail instead of shrinking to the stable window");
    };

    struct Entry {
        const char* name;
        const char* help;
        bool needs_in;
        std::function<int()> run;
    };
    std::vector<Entry> entries{
        {"validate", "check the defining identities of a module", true, [&] { return cmd_validate(o); }},
        {"homology", "homology of the detecting complex", true, [&] { return cmd_homology(o); }},
        {"restrict", "restriction along a comparison functor", true, [&] { return cmd_restrict(o); }},
        {"augment", "full augmented complex of an aug_ssimp module", true, [&] { return cmd_augment(o); }},
        {"truncate", "degree, good or brutal truncation", true, [&] { return cmd_truncate(o); }},
        {"induce", "induction along a comparison functor", true, [&] { return cmd_induce(o); }},
        {"unit", "unit of the induction-restriction adjunction", true, [&] { return cmd_adjunction(o, true); }},
        {"counit", "counit of the induction-restriction adjunction", true, [&] { return cmd_adjunction(o, false); }},
        {"tor", "Tor against a coefficient module", true, [&] { return cmd_tor(o); }},
        {"weq", "weak-equivalence verdict for a module map", true, [&] { return cmd_weq(o); }},
        {"fib", "fibration verdict for a module map", true, [&] { return cmd_fib(o); }},
        {"counterexample", "the degree -1 obstruction for the sign embedding", false,
         [&] { return emit_report(o, run_counterexample()); }},
        {"battery", "run every verification check over a generated corpus", false, [&] {
             return emit_report(o, run_battery(spec_of(o), o.threads));
         }},
        {"corpus", "write the generated corpus", false, [&] { return cmd_corpus(o); }},
        {"convert", "convert module, map and report documents", true, [&] { return cmd_convert(o); }},
    };
    std::map<CLI::App*, std::function<int()>> dispatch;
    for (auto& e : entries) {
        auto* sub = app.add_subcommand(e.name, e.help);
        add_common(sub, e.needs_in);
        std::string name = e.name;
        if (name == "restrict" || name == "induce" || name == "unit" || name == "counit")
            sub->add_option("--along", o.along, "u_delta, u_a, u_square or v");
        if (name == "tor")
            sub->add_option("--coeff", o.coeff, "k_point, k_constant, k_constant_shifted or k_point_neg1");
        if (name == "truncate") {
            sub->add_option("--trunc", o.trunc, "new truncation (mode module)");
            sub->add_option("--mode", o.mode, "module, good or brutal");
        }
        if (name == "battery" || name == "corpus") {
            sub->add_option("--seed", o.seed, "corpus seed");
            sub->add_option("--trunc", o.trunc, "corpus truncation");
        }
        if (name == "battery") {
            sub->add_option("--threads", o.threads, "worker threads");
            sub->add_flag("--timing", o.timing, "include elapsed times in JSON");
        }
        if (name == "convert") {
            sub->add_option("--to", o.to, "json, table or text");
            sub->add_flag("--timing", o.timing, "keep elapsed times of reports");
        }
        dispatch[sub] = e.run;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        for (auto* sub : app.get_subcommands())
            return dispatch.at(sub)();
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const FormatError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        // Module, category, complex and transport errors on user input.
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
