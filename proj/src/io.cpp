#include "moplex/io.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "moplex/errors.hpp"

namespace moplex {

namespace {

using nlohmann::json;

std::string render(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    if (v == kInfinity) return "\"inf\"";
    if (v == -kInfinity) return "\"-inf\"";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

void expect_fields(const json& obj, const std::set<std::string>& required,
                   const std::string& where) {
    if (!obj.is_object()) throw SchemaError(where + " must be an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (required.count(key) == 0) {
            throw SchemaError("unknown field '" + key + "' in " + where);
        }
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) {
            throw SchemaError("missing field '" + key + "' in " + where);
        }
    }
}

double parse_bound(const json& v, const std::string& where) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf") return kInfinity;
        if (s == "-inf") return -kInfinity;
        throw SchemaError(where + ": expected a number, \"inf\", or \"-inf\"");
    }
    if (!v.is_number()) throw SchemaError(where + ": expected a number");
    return v.get<double>();
}

double parse_finite(const json& v, const std::string& where) {
    if (!v.is_number()) throw SchemaError(where + ": expected a number");
    return v.get<double>();
}

} // namespace

Problem parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    expect_fields(doc, {"format_version", "name", "sense", "variables", "objectives", "constraints"},
                  "instance document");
    if (!doc["format_version"].is_string() || doc["format_version"].get<std::string>() != "1") {
        throw SchemaError("format_version must be the string \"1\"");
    }
    if (!doc["name"].is_string()) throw SchemaError("name must be a string");
    const std::string sense_str = doc["sense"].is_string() ? doc["sense"].get<std::string>() : "";
    if (sense_str != "min" && sense_str != "max") {
        throw SchemaError("sense must be \"min\" or \"max\"");
    }

    if (!doc["variables"].is_array() || doc["variables"].empty()) {
        throw SchemaError("variables must be a non-empty array");
    }
    std::vector<VariableSpec> vars;
    std::map<std::string, int> index_of;
    for (const auto& v : doc["variables"]) {
        expect_fields(v, {"name", "lb", "ub", "kind"}, "variable");
        VariableSpec spec;
        if (!v["name"].is_string() || v["name"].get<std::string>().empty()) {
            throw SchemaError("variable name must be a non-empty string");
        }
        spec.name = v["name"].get<std::string>();
        if (index_of.count(spec.name)) {
            throw SchemaError("duplicate variable name '" + spec.name + "'");
        }
        spec.lower = parse_bound(v["lb"], "variable '" + spec.name + "' lb");
        spec.upper = parse_bound(v["ub"], "variable '" + spec.name + "' ub");
        const std::string kind = v["kind"].is_string() ? v["kind"].get<std::string>() : "";
        if (kind == "continuous") spec.kind = VarKind::Continuous;
        else if (kind == "integer") spec.kind = VarKind::Integer;
        else if (kind == "binary") spec.kind = VarKind::Binary;
        else throw SchemaError("variable kind must be continuous, integer, or binary");
        index_of[spec.name] = static_cast<int>(vars.size());
        vars.push_back(std::move(spec));
    }

    auto parse_coefficients = [&](const json& obj, const std::string& where) {
        std::map<int, double> coeffs;
        if (!obj.is_object()) throw SchemaError(where + ": coefficients must be an object");
        for (const auto& [key, value] : obj.items()) {
            const auto it = index_of.find(key);
            if (it == index_of.end()) {
                throw SchemaError(where + ": unknown variable '" + key + "'");
            }
            coeffs[it->second] = parse_finite(value, where + " coefficient '" + key + "'");
        }
        return coeffs;
    };

    if (!doc["objectives"].is_array()) throw SchemaError("objectives must be an array");
    if (doc["objectives"].size() < 2) {
        throw SchemaError("objectives must contain at least 2 entries, got " +
                          std::to_string(doc["objectives"].size()));
    }
    VectorObjective obj;
    obj.sense = (sense_str == "min") ? ObjectiveSense::Min : ObjectiveSense::Max;
    for (const auto& entry : doc["objectives"]) {
        expect_fields(entry, {"coefficients", "constant"}, "objective");
        const auto coeffs = parse_coefficients(entry["coefficients"], "objective");
        std::vector<double> row(vars.size(), 0.0);
        for (const auto& [idx, c] : coeffs) row[idx] = c;
        obj.matrix.push_back(std::move(row));
        obj.offsets.push_back(parse_finite(entry["constant"], "objective constant"));
    }

    if (!doc["constraints"].is_array()) throw SchemaError("constraints must be an array");
    std::vector<LinearRow> rows;
    for (const auto& entry : doc["constraints"]) {
        expect_fields(entry, {"coefficients", "op", "rhs"}, "constraint");
        LinearRow row;
        row.coefficients = parse_coefficients(entry["coefficients"], "constraint");
        const std::string op = entry["op"].is_string() ? entry["op"].get<std::string>() : "";
        if (op == "le") row.sense = RowSense::LessEqual;
        else if (op == "eq") row.sense = RowSense::Equal;
        else if (op == "ge") row.sense = RowSense::GreaterEqual;
        else throw SchemaError("constraint op must be le, eq, or ge");
        row.rhs = parse_finite(entry["rhs"], "constraint rhs");
        rows.push_back(std::move(row));
    }

    try {
        return Problem(std::move(vars), std::move(rows), std::move(obj));
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
}

std::string serialize_instance(const Problem& p, const std::string& name) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": \"1\",\n";
    out << "  \"name\": " << quote(name) << ",\n";
    out << "  \"sense\": " << (p.sense() == ObjectiveSense::Min ? "\"min\"" : "\"max\"") << ",\n";
    out << "  \"variables\": [\n";
    for (int j = 0; j < p.num_variables(); ++j) {
        const auto& v = p.variables()[j];
        const char* kind = v.kind == VarKind::Continuous ? "continuous"
                           : v.kind == VarKind::Integer  ? "integer"
                                                         : "binary";
        out << "    {\"name\": " << quote(v.name) << ", \"lb\": " << render(v.lower)
            << ", \"ub\": " << render(v.upper) << ", \"kind\": \"" << kind << "\"}"
            << (j + 1 < p.num_variables() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"objectives\": [\n";
    for (int k = 0; k < p.num_objectives(); ++k) {
        out << "    {\"coefficients\": {";
        bool first = true;
        for (int j = 0; j < p.num_variables(); ++j) {
            const double c = p.objective().matrix[k][j];
            if (c == 0.0) continue;
            out << (first ? "" : ", ") << quote(p.variables()[j].name) << ": " << render(c);
            first = false;
        }
        out << "}, \"constant\": " << render(p.objective().offsets[k]) << "}"
            << (k + 1 < p.num_objectives() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"constraints\": [\n";
    for (std::size_t r = 0; r < p.rows().size(); ++r) {
        const auto& row = p.rows()[r];
        const char* op = row.sense == RowSense::LessEqual      ? "le"
                         : row.sense == RowSense::GreaterEqual ? "ge"
                                                               : "eq";
        out << "    {\"coefficients\": {";
        bool first = true;
        for (const auto& [idx, c] : row.coefficients) {
            out << (first ? "" : ", ") << quote(p.variables()[idx].name) << ": " << render(c);
            first = false;
        }
        out << "}, \"op\": \"" << op << "\", \"rhs\": " << render(row.rhs) << "}"
            << (r + 1 < p.rows().size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

std::string write_results(const ResultSet& r, ResultFormat format) {
    std::ostringstream out;
    if (format == ResultFormat::Csv) {
        const std::size_t o =
            r.points.empty() ? static_cast<std::size_t>(r.objective_count) : r.points.front().y.size();
        for (std::size_t k = 0; k < o; ++k) {
            out << (k ? "," : "") << "y" << (k + 1);
        }
        for (const auto& name : r.variable_names) out << ",x_" << name;
        out << "\n";
        for (const auto& pt : r.points) {
            for (std::size_t k = 0; k < pt.y.size(); ++k) {
                out << (k ? "," : "") << render(pt.y[k]);
            }
            for (double v : pt.x) out << "," << render(v);
            out << "\n";
        }
        return out.str();
    }
    out << "{\n";
    out << "  \"status\": \"" << to_string(r.status) << "\",\n";
    out << "  \"stats\": {\"subproblem_count\": " << r.stats.subproblem_count << "},\n";
    out << "  \"points\": [";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto& pt = r.points[i];
        out << (i ? "," : "") << "\n    {\"x\": {";
        for (std::size_t j = 0; j < pt.x.size(); ++j) {
            out << (j ? ", " : "") << quote(r.variable_names[j]) << ": " << render(pt.x[j]);
        }
        out << "}, \"y\": [";
        for (std::size_t k = 0; k < pt.y.size(); ++k) {
            out << (k ? ", " : "") << render(pt.y[k]);
        }
        out << "]}";
    }
    out << (r.points.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

} // namespace moplex
