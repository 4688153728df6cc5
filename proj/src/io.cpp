#include "semihom/io.hpp"

#include <fstream>
#include <sstream>

namespace semihom {

using nlohmann::json;

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw FormatError(where + ": expected an array of " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw FormatError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = row[c];
            std::string at = where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            try {
                if (e.is_string())
                    m(r, c) = Rational::parse(e.get<std::string>());
                else if (e.is_number_integer())
                    m(r, c) = Rational(e.get<long>());
                else
                    throw FormatError(at + ": entry must be a rational string");
            } catch (const std::invalid_argument& ex) {
                throw FormatError(at + ": " + ex.what());
            }
        }
    }
    return m;
}

json module_to_json(const ModuleData& d) {
    json j;
    j["format"] = kModuleFormat;
    j["kind"] = to_string(d.kind);
    j["truncation"] = d.truncation;
    json dims = json::object();
    int lo = min_degree(d.kind);
    for (std::size_t k = 0; k < d.dims.size(); ++k)
        dims[std::to_string(lo + static_cast<int>(k))] = d.dims[k];
    j["dims"] = std::move(dims);
    json actions = json::object();
    for (const auto& [g, m] : d.actions)
        actions[g.token()] = matrix_to_json(m);
    j["actions"] = std::move(actions);
    return j;
}

ModuleData module_data_from_json(const json& j) {
    if (!j.is_object())
        throw FormatError("module: top level must be an object");
    if (j.contains("format") && j["format"] != kModuleFormat)
        throw FormatError("module.format: unsupported format " + j["format"].dump());
    ModuleData d;
    try {
        d.kind = parse_kind(j.at("kind").get<std::string>());
        d.truncation = j.at("truncation").get<int>();
    } catch (const json::exception& ex) {
        throw FormatError(std::string("module: ") + ex.what());
    } catch (const CategoryError& ex) {
        throw FormatError(std::string("module.kind: ") + ex.what());
    }
    int lo = min_degree(d.kind);
    if (d.truncation < lo)
        throw FormatError("module.truncation: below the minimum degree of " + to_string(d.kind));
    if (!j.contains("dims") || !j["dims"].is_object())
        throw FormatError("module.dims: missing or not an object");
    for (int n = lo; n <= d.truncation; ++n) {
        auto key = std::to_string(n);
        const auto& dims = j["dims"];
        if (!dims.contains(key))
            throw FormatError("module.dims: missing degree " + key);
        if (!dims[key].is_number_unsigned() && !(dims[key].is_number_integer() && dims[key].get<long>() >= 0))
            throw FormatError("module.dims." + key + ": not a nonnegative integer");
        d.dims.push_back(dims[key].get<std::size_t>());
    }
    for (const auto& [key, value] : j["dims"].items()) {
        int n = 0;
        try {
            n = std::stoi(key);
        } catch (const std::exception&) {
            throw FormatError("module.dims: bad degree key '" + key + "'");
        }
        if (n < lo || n > d.truncation)
            throw FormatError("module.dims: degree " + key + " outside the truncation range");
    }
    if (!j.contains("actions") || !j["actions"].is_object())
        throw FormatError("module.actions: missing or not an object");
    for (const auto& [key, value] : j["actions"].items()) {
        GeneratorId g;
        try {
            g = GeneratorId::parse(key);
        } catch (const CategoryError& ex) {
            throw FormatError("module.actions: " + std::string(ex.what()));
        }
        if (!is_legal(d.kind, g) || g.n > d.truncation)
            throw FormatError("module.actions: generator '" + key + "' not in " + to_string(d.kind) +
                              " truncated at " + std::to_string(d.truncation));
        d.actions.emplace(g, matrix_from_json(value, d.dim(g.n - 1), d.dim(g.n), "module.actions[\"" + key + "\"]"));
    }
    return d;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string dump_module(const DiagramModule& x) { return dump_canonical(module_to_json(x.data())); }

DiagramModule parse_module(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw FormatError(std::string("module: ") + ex.what());
    }
    return DiagramModule(module_data_from_json(j));
}

DiagramModule load_module(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_module(ss.str());
    } catch (const FormatError& ex) {
        throw FormatError(path + ": " + ex.what());
    }
}

void save_module(const DiagramModule& x, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw FormatError(path + ": cannot write");
    out << dump_module(x);
}

json map_to_json(const ModuleMap& f) {
    json j;
    j["format"] = kMapFormat;
    j["source"] = module_to_json(f.source.data());
    j["target"] = module_to_json(f.target.data());
    json comps = json::object();
    int lo = f.source.min_degree();
    for (std::size_t k = 0; k < f.components.size(); ++k)
        comps[std::to_string(lo + static_cast<int>(k))] = matrix_to_json(f.components[k]);
    j["components"] = std::move(comps);
    return j;
}

ModuleMap map_from_json(const json& j) {
    if (!j.is_object())
        throw FormatError("map: top level must be an object");
    if (j.contains("format") && j["format"] != kMapFormat)
        throw FormatError("map.format: unsupported format " + j["format"].dump());
    if (!j.contains("source") || !j.contains("target") || !j.contains("components"))
        throw FormatError("map: needs source, target and components");
    DiagramModule s(module_data_from_json(j["source"]));
    DiagramModule t(module_data_from_json(j["target"]));
    if (s.kind() != t.kind() || s.truncation() != t.truncation())
        throw FormatError("map: source and target differ in kind or truncation");
    const auto& comps = j["components"];
    if (!comps.is_object())
        throw FormatError("map.components: not an object");
    ModuleMap f{s, t, {}};
    for (int n = s.min_degree(); n <= s.truncation(); ++n) {
        auto key = std::to_string(n);
        if (!comps.contains(key))
            throw FormatError("map.components: missing degree " + key);
        f.components.push_back(matrix_from_json(comps[key], t.dim(n), s.dim(n), "map.components[\"" + key + "\"]"));
    }
    if (comps.size() != f.components.size())
        throw FormatError("map.components: degrees outside the truncation range");
    auto r = check_map(f);
    if (!r.ok())
        throw ModuleError(r.str());
    return f;
}

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError(path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw FormatError(path + ": " + ex.what());
    }
}

}  // namespace

ModuleMap load_map(const std::string& path) {
    auto j = read_json_file(path);
    try {
        return map_from_json(j);
    } catch (const FormatError& ex) {
        throw FormatError(path + ": " + ex.what());
    }
}

void save_map(const ModuleMap& f, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw FormatError(path + ": cannot write");
    out << dump_canonical(map_to_json(f));
}

std::string text_dump(const DiagramModule& x) {
    std::ostringstream os;
    os << to_string(x.kind()) << " truncated at " << x.truncation() << "\n";
    os << "dims:";
    for (int n = x.min_degree(); n <= x.truncation(); ++n)
        os << " " << n << ":" << x.dim(n);
    os << "\n";
    for (const auto& [g, m] : x.data().actions) {
        os << g.token() << ": " << m.rows() << " x " << m.cols() << "\n";
        if (!m.empty())
            os << m.str() << "\n";
    }
    return os.str();
}

}  // namespace semihom
