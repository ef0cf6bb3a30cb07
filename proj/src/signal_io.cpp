#include "tfa/signal_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tfa/uncertainty.hpp"

namespace tfa {

namespace {

using nlohmann::json;

json parse_or_rethrow(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": JSON parse error at byte " +
                                    std::to_string(e.byte) + ": " + e.what());
    }
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw std::invalid_argument("signal JSON: expected a number at " + where);
    }
    return j.get<double>();
}

complexd complex_field(const json& term, const char* key, const std::string& where) {
    if (!term.contains(key)) {
        throw std::invalid_argument("signal JSON: missing field '" + std::string(key) + "' in " +
                                    where);
    }
    const json& arr = term[key];
    if (!arr.is_array() || arr.size() != 2) {
        throw std::invalid_argument("signal JSON: field '" + std::string(key) + "' in " + where +
                                    " must be [re, im]");
    }
    return complexd(number_at(arr[0], where + "." + key + "[0]"),
                    number_at(arr[1], where + "." + key + "[1]"));
}

std::vector<double> vector_field(const json& term, const char* key, int d,
                                 const std::string& where) {
    if (!term.contains(key)) {
        throw std::invalid_argument("signal JSON: missing field '" + std::string(key) + "' in " +
                                    where);
    }
    const json& arr = term[key];
    if (!arr.is_array() || static_cast<int>(arr.size()) != d) {
        throw std::invalid_argument("signal JSON: field '" + std::string(key) + "' in " + where +
                                    " must be an array of length d = " + std::to_string(d));
    }
    std::vector<double> out(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out[i] = number_at(arr[i], where + "." + key + "[" + std::to_string(i) + "]");
    }
    return out;
}

const char* geometry_name(Geometry g) { return g == Geometry::cylinder ? "cylinder" : "sphere"; }

}  // namespace

GaussianMixture parse_signal_json(const std::string& text) {
    const json root = parse_or_rethrow(text, "signal");
    if (!root.is_object()) throw std::invalid_argument("signal JSON: top level must be an object");

    int d = 1;
    if (root.contains("d")) {
        if (!root["d"].is_number_integer() || root["d"].get<int>() < 1) {
            throw std::invalid_argument("signal JSON: field 'd' must be a positive integer");
        }
        d = root["d"].get<int>();
    }
    if (!root.contains("terms") || !root["terms"].is_array()) {
        throw std::invalid_argument("signal JSON: missing array field 'terms'");
    }

    GaussianMixture f(d);
    std::size_t index = 0;
    for (const json& term : root["terms"]) {
        const std::string where = "terms[" + std::to_string(index) + "]";
        if (!term.is_object()) {
            throw std::invalid_argument("signal JSON: " + where + " must be an object");
        }
        const complexd c = complex_field(term, "c", where);
        const complexd a = complex_field(term, "a", where);
        const std::vector<double> mu = vector_field(term, "mu", d, where);
        const std::vector<double> nu = vector_field(term, "nu", d, where);
        try {
            f.terms.emplace_back(c, a, mu, nu);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("signal JSON: " + where + ": " + e.what());
        }
        ++index;
    }
    return f;
}

GaussianMixture load_signal(const std::string& path) {
    try {
        return parse_signal_json(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::vector<PhasePoint> parse_points_json(const std::string& text) {
    const json root = parse_or_rethrow(text, "points");
    if (!root.is_object()) throw std::invalid_argument("points JSON: top level must be an object");
    if (root.contains("d") && (!root["d"].is_number_integer() || root["d"].get<int>() != 1)) {
        throw std::invalid_argument("points JSON: only d = 1 is supported");
    }
    if (!root.contains("points") || !root["points"].is_array()) {
        throw std::invalid_argument("points JSON: missing array field 'points'");
    }
    std::vector<PhasePoint> pts;
    std::size_t index = 0;
    for (const json& p : root["points"]) {
        const std::string where = "points[" + std::to_string(index) + "]";
        if (!p.is_array() || p.size() != 2) {
            throw std::invalid_argument("points JSON: " + where + " must be [x, omega]");
        }
        pts.emplace_back(number_at(p[0], where + "[0]"), number_at(p[1], where + "[1]"));
        ++index;
    }
    return pts;
}

std::vector<PhasePoint> load_points(const std::string& path) {
    try {
        return parse_points_json(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_bool(bool v) { return v ? "true" : "false"; }

std::string json_string(const std::string& v) {
    std::string out = "\"";
    for (char c : v) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += "\"";
    return out;
}

std::string json_pair(double a, double b) {
    return "[" + json_number(a) + "," + json_number(b) + "]";
}

std::string theorem_report_json(const TheoremReport& rep) {
    std::string out = "{";
    out += "\"theorem\":" + json_string(geometry_name(rep.theorem));
    out += ",\"R\":" + json_number(rep.R);
    out += ",\"N_effective\":" + json_number(rep.N_effective);
    out += ",\"bound\":" + json_number(rep.bound);
    out += ",\"holds\":" + json_bool(rep.holds);
    out += ",\"margin\":" + json_number(rep.margin);
    out += ",\"sup\":" + json_number(rep.sup_value);
    out += ",\"inner_product_abs\":" + json_number(rep.inner_product_abs);
    out += ",\"not_applicable\":" + json_bool(rep.not_applicable);
    out += ",\"tolerance\":" + json_number(rep.tolerance);
    out += "}\n";
    return out;
}

std::string sup_report_json(const SupReport& rep) {
    std::string out = "{";
    out += "\"geometry\":" + json_string(geometry_name(rep.geometry));
    out += ",\"R\":" + json_number(rep.R);
    out += ",\"sup\":" + json_number(rep.sup_value);
    out += ",\"argmax\":" + json_pair(rep.argmax.x[0], rep.argmax.omega[0]);
    out += ",\"x_truncation\":" + json_number(rep.x_truncation);
    out += ",\"grid_resolution\":" + json_number(rep.grid_resolution);
    out += ",\"refined\":" + json_bool(rep.refined);
    out += "}\n";
    return out;
}

std::string sharpness_json(double N, const std::vector<SharpnessRow>& rows) {
    std::string out = "{\"N\":" + json_number(N) + ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += "{\"lambda\":" + json_number(rows[i].lambda);
        out += ",\"R_min_numeric\":" + json_number(rows[i].r_min_numeric);
        out += ",\"R_min_formula\":" + json_number(rows[i].r_min_formula) + "}";
    }
    out += "]}\n";
    return out;
}

std::string sharpness_csv(const std::vector<SharpnessRow>& rows) {
    std::string out = "lambda,R_min_numeric,R_min_formula\n";
    for (const auto& r : rows) {
        out += json_number(r.lambda) + "," + json_number(r.r_min_numeric) + "," +
               json_number(r.r_min_formula) + "\n";
    }
    return out;
}

std::string gram_certificate_json(const GramCertificate& cert) {
    std::string out = "{\"size\":" + std::to_string(cert.gram.size());
    out += ",\"gram\":[";
    for (std::size_t j = 0; j < cert.gram.size(); ++j) {
        if (j) out += ",";
        out += "[";
        for (std::size_t k = 0; k < cert.gram[j].size(); ++k) {
            if (k) out += ",";
            out += json_pair(cert.gram[j][k].real(), cert.gram[j][k].imag());
        }
        out += "]";
    }
    out += "]";
    out += ",\"min_eigenvalue\":" + json_number(cert.min_eigenvalue);
    out += ",\"tolerance\":" + json_number(cert.tolerance);
    out += ",\"certified_independent\":" + json_bool(cert.certified_independent);
    out += "}\n";
    return out;
}

std::string fat_tail_report_json(const FatTailReport& rep) {
    std::string out = "{";
    out += "\"R\":" + json_number(rep.R);
    out += ",\"N\":" + json_number(rep.N);
    out += ",\"holds\":" + json_bool(rep.holds);
    out += ",\"worst_point\":" + json_pair(rep.worst_point.x[0], rep.worst_point.omega[0]);
    out += ",\"worst_ratio\":" + json_number(rep.worst_ratio);
    out += ",\"comparison\":" + json_string(rep.comparison);
    out += ",\"scan_radius_max\":" + json_number(rep.scan_radius_max);
    out += "}\n";
    return out;
}

std::string bounds_json(double N) {
    return "{\"N\":" + json_number(N) + ",\"bound_cylinder\":" + json_number(bound_cylinder(N)) +
           ",\"bound_sphere\":" + json_number(bound_sphere(N)) + "}\n";
}

std::string bounds_csv(double N) {
    return "N,bound_cylinder,bound_sphere\n" + json_number(N) + "," +
           json_number(bound_cylinder(N)) + "," + json_number(bound_sphere(N)) + "\n";
}

}  // namespace tfa
