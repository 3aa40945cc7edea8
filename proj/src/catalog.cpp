#include "hpl/catalog.hpp"

#include <fstream>

#include <json.hpp>

namespace hpl {

namespace {

using nlohmann::json;

std::optional<ConvexBodySpec> builtin_body(const std::string& name, int n) {
    if (name == "square" && n == 2) return ConvexBodySpec::from_polytope(make_cube(2));
    if (name == "cube") return ConvexBodySpec::from_polytope(make_cube(n));
    if (name == "triangle" && n == 2) return ConvexBodySpec::from_polytope(make_simplex(2));
    if (name == "simplex") return ConvexBodySpec::from_polytope(make_simplex(n));
    if (name == "cross") return ConvexBodySpec::from_polytope(make_cross_polytope(n));
    if (name == "ball") return ConvexBodySpec::ball(n, 1.0);
    if (name.starts_with("kgon") && n == 2) {
        const int k = std::stoi(name.substr(4));
        if (k < 3) return std::nullopt;
        return ConvexBodySpec::from_polytope(make_regular_kgon(k));
    }
    return std::nullopt;
}

ConvexBodySpec body_from_json(const json& spec, const std::string& name, int n) {
    const std::string type = spec.at("type").get<std::string>();
    if (type == "vertices") {
        std::vector<Vec> pts;
        for (const auto& row : spec.at("data")) {
            Vec v(row.size());
            for (size_t k = 0; k < row.size(); ++k) v[static_cast<int>(k)] = row[k].get<double>();
            pts.push_back(std::move(v));
        }
        if (pts.empty() || pts.front().size() != n)
            throw ConfigError("catalog body '" + name + "' has dimension != n");
        return ConvexBodySpec::from_polytope(convex_hull(pts));
    }
    if (type == "halfspaces") {
        std::vector<Halfspace> hs;
        const auto& normals = spec.at("normals");
        const auto& offsets = spec.at("offsets");
        for (size_t i = 0; i < normals.size(); ++i) {
            Vec a(normals[i].size());
            for (size_t k = 0; k < normals[i].size(); ++k)
                a[static_cast<int>(k)] = normals[i][k].get<double>();
            hs.push_back({std::move(a), offsets[i].get<double>()});
        }
        if (hs.empty() || hs.front().normal.size() != n)
            throw ConfigError("catalog body '" + name + "' has dimension != n");
        return ConvexBodySpec::from_polytope(halfspace_intersection(hs));
    }
    if (type == "ball") {
        if (spec.contains("n") && spec.at("n").get<int>() != n)
            throw ConfigError("catalog body '" + name + "' has dimension != n");
        return ConvexBodySpec::ball(n, spec.at("radius").get<double>());
    }
    if (type == "builtin") {
        std::string builtin = spec.at("name").get<std::string>();
        if (spec.contains("n") && spec.at("n").get<int>() != n)
            throw ConfigError("catalog body '" + name + "' has dimension != n");
        if (builtin == "kgon") {
            const int k = spec.contains("params") ? spec.at("params").value("k", 64) : 64;
            builtin = "kgon" + std::to_string(k);
        }
        auto b = builtin_body(builtin, n);
        if (!b) throw ConfigError("catalog body '" + name + "': unknown builtin");
        return *b;
    }
    throw ConfigError("catalog body '" + name + "': unknown type '" + type + "'");
}

}  // namespace

Catalog Catalog::builtin() { return Catalog{}; }

Catalog Catalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("catalog file not found: " + path);
    json doc = json::parse(in, nullptr, true, true);
    Catalog c;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        c.entries_.push_back({it.key(), it.value().dump()});
    return c;
}

ConvexBodySpec Catalog::body(const std::string& name, int n) const {
    for (const auto& e : entries_)
        if (e.name == name) return body_from_json(json::parse(e.raw), name, n);
    if (auto b = builtin_body(name, n)) return *b;
    throw ConfigError("unknown body '" + name + "' for n=" + std::to_string(n));
}

std::vector<std::string> Catalog::default_bodies(int n) const {
    if (!entries_.empty()) {
        std::vector<std::string> names;
        names.reserve(entries_.size());
        for (const auto& e : entries_) names.push_back(e.name);
        return names;
    }
    if (n == 2) return {"square", "triangle", "ball", "cross", "kgon256"};
    return {"cube", "simplex", "cross", "ball"};
}

}  // namespace hpl
