#pragma once

#include "asym.hpp"
#include "fit.hpp"
#include "heat.hpp"
#include "models.hpp"
#include "zeta.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace fracheat {

using nlohmann::json;

// All floats cross the CLI boundary with 17 significant digits so runs
// round-trip exactly.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Float fields are emitted as fmt17 strings, never native JSON numbers: the
// stock dumper prints shortest-round-trip form, which does not meet the
// 17-significant-digit output contract.
inline json jnum(double v) { return json(fmt17(v)); }

inline double num_from_json(const json& j) {
    return j.is_string() ? std::stod(j.get<std::string>()) : j.get<double>();
}

inline json model_to_json(const spectral_model& m) {
    json radii = json::array();
    for (double p : m.radii) radii.push_back(jnum(p));
    return json{{"n", m.n}, {"radii", radii}, {"shift", jnum(m.shift)}};
}

inline spectral_model model_from_json(const json& j) {
    std::vector<double> radii;
    for (const auto& p : j.at("radii")) radii.push_back(num_from_json(p));
    return spectral_model::make(j.at("n").get<int>(), radii,
                                num_from_json(j.at("shift")));
}

inline json zeta_to_json(const zeta_value& z) {
    json j;
    j["s"] = {jnum(z.s.real()), jnum(z.s.imag())};
    j["value"] = {jnum(z.value.real()), jnum(z.value.imag())};
    j["is_pole"] = z.is_pole;
    if (z.is_pole) j["residue"] = {jnum(z.residue.real()), jnum(z.residue.imag())};
    if (z.near_pole) j["near_pole"] = true;
    return j;
}

inline std::string exponent_string(const expansion_term& t) {
    if (t.exact) {
        std::ostringstream os;
        os << t.exp_frac.num;
        if (t.exp_frac.den != 1) os << '/' << t.exp_frac.den;
        return os.str();
    }
    return fmt17(t.exponent);
}

inline const char* label_name(term_label l) {
    switch (l) {
        case term_label::neg_ladder: return "neg_ladder";
        case term_label::integer: return "integer";
        case term_label::fractional: return "fractional";
        case term_label::log: return "log";
    }
    return "?";
}

inline json template_to_json(const expansion_template& tmpl) {
    json terms = json::array();
    for (const auto& t : tmpl.terms) {
        terms.push_back({{"exponent", exponent_string(t)},
                         {"exponent_value", jnum(t.exponent)},
                         {"log_power", t.log_power},
                         {"label", label_name(t.label)},
                         {"index", t.j}});
    }
    const char* kind = tmpl.kind == expansion_case::even ? "even"
                       : tmpl.kind == expansion_case::odd_plain ? "odd_plain"
                                                                : "odd_log";
    return json{{"n", tmpl.n}, {"case", kind}, {"terms", terms}};
}

inline json report_to_json(const coefficient_report& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row{{"exponent", exponent_string(r.term)},
                 {"log_power", r.term.log_power},
                 {"label", label_name(r.term.label)},
                 {"predicted", jnum(r.predicted)}};
        if (r.has_fitted) {
            row["fitted"] = jnum(r.fitted);
            row["abs_err"] = jnum(r.abs_err);
            row["rel_err"] = jnum(r.rel_err);
            row["verdict"] = r.pass ? "pass" : "fail";
        }
        rows.push_back(row);
    }
    return json{{"template", template_to_json(rep.tmpl)},
                {"rows", rows},
                {"all_pass", rep.all_pass}};
}

inline std::string samples_to_csv(const std::vector<kernel_sample>& samples) {
    std::ostringstream os;
    os << "t,value,error_bound,method\n";
    for (const auto& s : samples)
        os << fmt17(s.t) << ',' << fmt17(s.value) << ',' << fmt17(s.error_bound)
           << ',' << method_name(s.method) << '\n';
    return os.str();
}

inline sample_grid samples_from_csv(std::istream& in) {
    sample_grid g;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        std::istringstream ls(line);
        std::string cell;
        sample_point p;
        if (!std::getline(ls, cell, ',')) continue;
        p.t = std::stod(cell);
        if (!std::getline(ls, cell, ',')) continue;
        p.value = std::stod(cell);
        if (std::getline(ls, cell, ',')) p.error_bound = std::stod(cell);
        g.points.push_back(p);
    }
    return g;
}

} // namespace fracheat
