#include "steiner/body_io.hpp"

#include <fstream>
#include <optional>

#include "steiner/detail/body_nodes.hpp"
#include "steiner/minkowski.hpp"
#include "steiner/quadrature.hpp"

namespace steiner {

namespace {

using nlohmann::json;

double require_number(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_number())
        throw ParseError(std::string("body: missing or non-numeric \"") + key + "\"");
    return it->get<double>();
}

int resolve_dimension(const json& doc, std::optional<int> outer) {
    const auto it = doc.find("dimension");
    if (it == doc.end()) {
        if (!outer) throw ParseError("body: top-level \"dimension\" is required");
        return *outer;
    }
    if (!it->is_number_integer()) throw ParseError("body: \"dimension\" must be an integer");
    const int dim = it->get<int>();
    if (outer && dim != *outer)
        throw ParseError("body: nested \"dimension\" disagrees with the enclosing body");
    return dim;
}

// The rule used for parse-time summand certification, built on first use.
struct RuleCache {
    int level;
    std::optional<QuadratureRule> rule;

    const QuadratureRule& get(int dim) {
        if (!rule) {
            const int lv = level > 0 ? level : QuadratureRule::default_level(dim);
            rule = QuadratureRule::build(dim, lv);
        }
        return *rule;
    }
};

ConvexBody parse_node(const json& doc, std::optional<int> outer_dim, RuleCache& cache) {
    if (!doc.is_object()) throw ParseError("body: expected a JSON object");
    const auto type_it = doc.find("type");
    if (type_it == doc.end() || !type_it->is_string())
        throw ParseError("body: missing \"type\"");
    const std::string type = type_it->get<std::string>();
    const int dim = resolve_dimension(doc, outer_dim);

    if (type == "ball") return ConvexBody::ball(dim, require_number(doc, "radius"));

    if (type == "ellipsoid") {
        const auto it = doc.find("semi_axes");
        if (it == doc.end() || !it->is_array())
            throw ParseError("ellipsoid: missing \"semi_axes\" array");
        std::vector<double> axes;
        for (const auto& v : *it) {
            if (!v.is_number()) throw ParseError("ellipsoid: semi-axes must be numbers");
            axes.push_back(v.get<double>());
        }
        if (static_cast<int>(axes.size()) != dim)
            throw ParseError("ellipsoid: \"semi_axes\" length must equal the dimension");
        return ConvexBody::ellipsoid(std::move(axes));
    }

    if (type == "sum") {
        const auto it = doc.find("terms");
        if (it == doc.end() || !it->is_array() || it->empty())
            throw ParseError("sum: missing or empty \"terms\" array");
        std::vector<ConvexBody> parts;
        for (const auto& term : *it) parts.push_back(parse_node(term, dim, cache));
        return ConvexBody::sum(std::move(parts));
    }

    if (type == "offset") {
        const auto it = doc.find("inner");
        if (it == doc.end()) throw ParseError("offset: missing \"inner\" body");
        const double shift = require_number(doc, "shift");
        ConvexBody inner = parse_node(*it, dim, cache);
        if (shift >= 0.0) return ConvexBody::offset(std::move(inner), shift);
        // Inner parallel body: certify now so evaluation can't trip later.
        return inner_parallel(inner, -shift, cache.get(dim));
    }

    if (type == "complement") {
        const auto it = doc.find("inner");
        if (it == doc.end()) throw ParseError("complement: missing \"inner\" body");
        const double c = require_number(doc, "c");
        ConvexBody inner = parse_node(*it, dim, cache);
        return ball_complement(inner, c, cache.get(dim));
    }

    throw ParseError("body: unknown \"type\" \"" + type + "\"");
}

} // namespace

ConvexBody parse_body(const json& doc, int quad_level) {
    RuleCache cache{quad_level, std::nullopt};
    return parse_node(doc, std::nullopt, cache);
}

ConvexBody load_body_file(const std::string& path, int quad_level) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open body file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("body file " + path + ": " + e.what());
    }
    return parse_body(doc, quad_level);
}

namespace {

json node_to_json(const BodyNode& node) {
    json out;
    out["dimension"] = node.dim;
    switch (node.kind) {
        case BodyKind::Ball: {
            out["type"] = "ball";
            out["radius"] = static_cast<const detail::BallNode&>(node).radius;
            return out;
        }
        case BodyKind::Ellipsoid: {
            out["type"] = "ellipsoid";
            out["semi_axes"] = static_cast<const detail::EllipsoidNode&>(node).axes;
            return out;
        }
        case BodyKind::Sum: {
            out["type"] = "sum";
            json terms = json::array();
            for (const auto& part : static_cast<const detail::SumNode&>(node).parts)
                terms.push_back(node_to_json(*part));
            out["terms"] = std::move(terms);
            return out;
        }
        case BodyKind::Offset: {
            const auto& off = static_cast<const detail::OffsetNode&>(node);
            out["type"] = "offset";
            out["shift"] = off.shift;
            out["inner"] = node_to_json(*off.inner);
            return out;
        }
        case BodyKind::Complement: {
            const auto& comp = static_cast<const detail::ComplementNode&>(node);
            out["type"] = "complement";
            out["c"] = comp.c;
            out["inner"] = node_to_json(*comp.inner);
            return out;
        }
        case BodyKind::Translate:
            throw PreconditionError("translated bodies are internal and not serializable");
    }
    throw PreconditionError("body: unknown node kind");
}

} // namespace

json body_to_json(const ConvexBody& body) { return node_to_json(body.node()); }

} // namespace steiner
