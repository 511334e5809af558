#include "porter/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "porter/errors.hpp"

namespace porter {

namespace {

using nlohmann::json;

json load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

void store_document(const json& doc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << doc.dump(2) << '\n';
}

void check_version(const json& doc, int expected, const std::string& where) {
    if (!doc.contains("schema_version")) {
        throw parse_error(where + ": missing schema_version");
    }
    const int version = doc.at("schema_version").get<int>();
    if (version != expected) {
        std::ostringstream os;
        os << where << ": unsupported schema_version " << version
           << ", expected " << expected;
        throw parse_error(os.str());
    }
}

Point read_point(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2 ||
        !node[0].is_number() || !node[1].is_number()) {
        throw parse_error(where + ": expected an [x, y] pair");
    }
    return Point{node[0].get<double>(), node[1].get<double>()};
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

std::vector<int> read_int_list(const json& doc, const char* field,
                               const std::string& where) {
    if (!doc.contains(field)) {
        throw parse_error(where + ": missing " + field);
    }
    const json& node = doc.at(field);
    if (!node.is_array()) {
        throw parse_error(where + ": " + field + " must be an array");
    }
    std::vector<int> out;
    for (const json& v : node) {
        if (!v.is_number_integer()) {
            throw parse_error(where + ": " + field + " must hold integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Instance read_instance(const std::filesystem::path& path) {
    const json doc = load_document(path);
    const std::string where = path.string();
    check_version(doc, kInstanceSchemaVersion, where);

    for (const char* field : {"name", "n", "depot_start", "depot_end", "items", "placeholders"}) {
        if (!doc.contains(field)) {
            throw parse_error(where + ": missing " + std::string(field));
        }
    }
    const int n = doc.at("n").get<int>();
    if (n < 0) throw parse_error(where + ": n must be non-negative");

    const Point depot_start = read_point(doc.at("depot_start"), where + ": depot_start");
    const Point depot_end = read_point(doc.at("depot_end"), where + ": depot_end");

    auto read_points = [&](const char* field) {
        const json& node = doc.at(field);
        if (!node.is_array() || static_cast<int>(node.size()) != n) {
            std::ostringstream os;
            os << where << ": " << field << " must list exactly n = " << n << " points";
            throw parse_error(os.str());
        }
        std::vector<Point> pts;
        pts.reserve(static_cast<size_t>(n) + 1);
        pts.push_back(Point{});  // depot slot, filled below
        for (size_t k = 0; k < node.size(); ++k) {
            std::ostringstream os;
            os << where << ": " << field << "[" << k << "]";
            pts.push_back(read_point(node[k], os.str()));
        }
        return pts;
    };

    std::vector<Point> items = read_points("items");
    std::vector<Point> placeholders = read_points("placeholders");
    items[0] = depot_end;
    placeholders[0] = depot_start;

    try {
        return Instance(std::move(items), std::move(placeholders),
                        doc.at("name").get<std::string>());
    } catch (const input_error& e) {
        throw parse_error(where + ": " + e.what());
    }
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
    json doc;
    doc["schema_version"] = kInstanceSchemaVersion;
    doc["name"] = inst.name();
    doc["n"] = inst.n();
    doc["depot_start"] = point_json(inst.depot_start());
    doc["depot_end"] = point_json(inst.depot_end());
    json items = json::array();
    json placeholders = json::array();
    for (int k = 1; k < inst.size(); ++k) {
        items.push_back(point_json(inst.item(k)));
        placeholders.push_back(point_json(inst.placeholder(k)));
    }
    doc["items"] = std::move(items);
    doc["placeholders"] = std::move(placeholders);
    store_document(doc, path);
}

Solution read_solution(const std::filesystem::path& path) {
    const json doc = load_document(path);
    const std::string where = path.string();
    check_version(doc, kSolutionSchemaVersion, where);

    Solution sol;
    sol.sequence.order = read_int_list(doc, "sequence", where);
    sol.assignment.map = read_int_list(doc, "assignment", where);
    if (!doc.contains("cost") || !doc.at("cost").is_number()) {
        throw parse_error(where + ": missing numeric cost");
    }
    sol.cost = doc.at("cost").get<double>();
    return sol;
}

void write_solution(const Solution& sol, const std::filesystem::path& path,
                    const std::string& instance_name) {
    json doc;
    doc["schema_version"] = kSolutionSchemaVersion;
    doc["instance"] = instance_name;
    doc["sequence"] = sol.sequence.order;
    doc["assignment"] = sol.assignment.map;
    doc["cost"] = sol.cost;
    store_document(doc, path);
}

std::map<std::string, double> read_reference_costs(const std::filesystem::path& path) {
    const json doc = load_document(path);
    if (!doc.is_object()) {
        throw parse_error(path.string() + ": reference costs must be an object");
    }
    std::map<std::string, double> refs;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) {
            throw parse_error(path.string() + ": reference cost for " + key +
                              " must be a number");
        }
        refs[key] = value.get<double>();
    }
    return refs;
}

void write_reference_costs(const std::map<std::string, double>& refs,
                           const std::filesystem::path& path) {
    json doc = json::object();
    for (const auto& [key, value] : refs) doc[key] = value;
    store_document(doc, path);
}

Instance generate(int n, std::uint64_t seed, double extent) {
    if (n < 1) throw input_error("generate: n must be positive");
    if (!(extent > 0.0) || !std::isfinite(extent)) {
        throw input_error("generate: extent must be positive and finite");
    }
    std::mt19937_64 rng(seed);
    // Fixed 53-bit mantissa recipe keeps instances platform-independent.
    auto coord = [&]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53 * extent;
    };

    const Point depot{extent / 2.0, extent / 2.0};
    std::vector<Point> items;
    std::vector<Point> placeholders;
    items.reserve(static_cast<size_t>(n) + 1);
    placeholders.reserve(static_cast<size_t>(n) + 1);
    items.push_back(depot);
    placeholders.push_back(depot);
    for (int i = 0; i < n; ++i) {
        const double x = coord();
        const double y = coord();
        items.push_back(Point{x, y});
    }
    for (int i = 0; i < n; ++i) {
        const double x = coord();
        const double y = coord();
        placeholders.push_back(Point{x, y});
    }

    std::ostringstream name;
    name << "uniform-n" << n << "-s" << seed;
    return Instance(std::move(items), std::move(placeholders), name.str());
}

}  // namespace porter
