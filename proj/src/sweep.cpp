#include "dyad/sweep.hpp"

#include "dyad/dynamics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace dyad {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// RFC-4180: quote when a field contains comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

struct Violations {
    std::vector<std::string> items;
    void add(const std::string& s) { items.push_back(s); }
    [[noreturn]] void raise() const {
        json j;
        j["errors"] = items;
        throw validation_error(j.dump());
    }
};

void check_known_keys(const json& obj, const std::string& where,
                      std::initializer_list<const char*> known,
                      Violations& v) {
    if (!obj.is_object()) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) { ok = true; break; }
        if (!ok) v.add(where + ": unknown key '" + it.key() + "'");
    }
}

bool positive_number(const json& j) {
    return j.is_number() && j.get<double>() > 0.0 &&
           std::isfinite(j.get<double>());
}

std::vector<double> parse_axis(const json& node, const std::string& where,
                               const char* scalar_key, const char* list_key,
                               bool allow_zero, Violations& v) {
    std::vector<double> values;
    if (!node.is_object()) {
        v.add(where + ": must be an object");
        return values;
    }
    const bool has_scalar = scalar_key && node.contains(scalar_key);
    const bool has_list = list_key && node.contains(list_key);
    const bool has_sweep = node.contains("sweep");
    const int n_forms = int(has_scalar) + int(has_list) + int(has_sweep);
    if (n_forms != 1) {
        std::string forms;
        if (scalar_key) forms += std::string("'") + scalar_key + "', ";
        if (list_key) forms += std::string("'") + list_key + "', ";
        v.add(where + ": give exactly one of " + forms + "'sweep'");
        return values;
    }
    const auto check_value = [&](double x) {
        if (!std::isfinite(x) || x < 0.0 || (x == 0.0 && !allow_zero))
            v.add(where + ": value " + fmt_double(x) + " must be " +
                  (allow_zero ? ">= 0" : "> 0"));
    };
    if (has_scalar) {
        const json& s = node[scalar_key];
        if (!s.is_number()) {
            v.add(where + ": '" + scalar_key + "' must be a number");
        } else {
            values.push_back(s.get<double>());
            check_value(values.back());
        }
    } else if (has_list) {
        const json& l = node[list_key];
        if (!l.is_array() || l.empty()) {
            v.add(where + ": '" + list_key + "' must be a nonempty array");
        } else {
            for (const auto& e : l) {
                if (!e.is_number()) {
                    v.add(where + ": '" + list_key + "' entries must be numbers");
                    break;
                }
                values.push_back(e.get<double>());
                check_value(values.back());
            }
        }
    } else {
        const json& s = node["sweep"];
        check_known_keys(s, where + ".sweep", {"start", "stop", "count", "spacing"}, v);
        double start = 0, stop = 0;
        long count = 0;
        std::string spacing = "linear";
        bool shape_ok = true;
        if (!s.contains("start") || !s["start"].is_number()) {
            v.add(where + ".sweep: numeric 'start' required");
            shape_ok = false;
        } else start = s["start"].get<double>();
        if (!s.contains("stop") || !s["stop"].is_number()) {
            v.add(where + ".sweep: numeric 'stop' required");
            shape_ok = false;
        } else stop = s["stop"].get<double>();
        if (!s.contains("count") || !s["count"].is_number_integer()) {
            v.add(where + ".sweep: integer 'count' required");
            shape_ok = false;
        } else count = s["count"].get<long>();
        if (s.contains("spacing")) {
            if (!s["spacing"].is_string()) {
                v.add(where + ".sweep: 'spacing' must be a string");
                shape_ok = false;
            } else spacing = s["spacing"].get<std::string>();
        }
        if (spacing != "linear" && spacing != "log") {
            v.add(where + ".sweep: spacing must be 'linear' or 'log'");
            shape_ok = false;
        }
        if (shape_ok) {
            if (count < 1) v.add(where + ".sweep: count must be >= 1");
            if (count > 1 && !(start < stop))
                v.add(where + ".sweep: start must be < stop");
            if (spacing == "log" && start <= 0.0)
                v.add(where + ".sweep: log spacing requires start > 0");
            check_value(start);
            if (count > 1) check_value(stop);
            if (count >= 1 && (count == 1 || start < stop) &&
                (spacing != "log" || start > 0.0)) {
                values.reserve(size_t(count));
                if (count == 1) {
                    values.push_back(start);
                } else if (spacing == "linear") {
                    for (long i = 0; i < count; ++i)
                        values.push_back(start + (stop - start) * double(i) /
                                                     double(count - 1));
                } else {
                    const double la = std::log(start), lb = std::log(stop);
                    for (long i = 0; i < count; ++i)
                        values.push_back(std::exp(la + (lb - la) * double(i) /
                                                           double(count - 1)));
                }
            }
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace

bool RunConfig::has(Observable o) const {
    return std::find(observables.begin(), observables.end(), o) !=
           observables.end();
}

RunConfig parse_run_config(const std::string& json_text) {
    Violations v;
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        v.add(std::string("config is not valid JSON: ") + e.what());
        v.raise();
    }
    if (!root.is_object()) {
        v.add("config root must be a JSON object");
        v.raise();
    }
    check_known_keys(root, "config",
                     {"system", "geometry", "times", "observables",
                      "emission_mode", "quadrature", "output"},
                     v);

    RunConfig out;

    // --- system -----------------------------------------------------------
    bool have_system = false;
    double mass_kg = 0.0;
    if (!root.contains("system") || !root["system"].is_object()) {
        v.add("system: object required");
    } else {
        const json& sys = root["system"];
        check_known_keys(sys, "system", {"rydberg", "explicit"}, v);
        const bool ry = sys.contains("rydberg");
        const bool ex = sys.contains("explicit");
        if (int(ry) + int(ex) != 1) {
            v.add("system: give exactly one of 'rydberg' or 'explicit'");
        } else if (ry) {
            const json& r = sys["rydberg"];
            check_known_keys(r, "system.rydberg",
                             {"n", "isotope_mass_u", "lambda0_um"}, v);
            int n = 0;
            double mass_u = 0.0;
            std::optional<double> lambda0;
            if (!r.contains("n") || !r["n"].is_number_integer() ||
                r["n"].get<int>() < 2)
                v.add("system.rydberg: integer n >= 2 required");
            else n = r["n"].get<int>();
            if (!r.contains("isotope_mass_u") || !positive_number(r["isotope_mass_u"]))
                v.add("system.rydberg: positive isotope_mass_u required");
            else mass_u = r["isotope_mass_u"].get<double>();
            if (r.contains("lambda0_um")) {
                if (!positive_number(r["lambda0_um"]))
                    v.add("system.rydberg: lambda0_um must be positive");
                else lambda0 = r["lambda0_um"].get<double>() * 1e-6;
            }
            if (n >= 2 && mass_u > 0.0) {
                mass_kg = mass_u * codata2018().amu;
                out.base = rydberg_pair(n, mass_kg, 1.0, lambda0);
                out.is_rydberg = true;
                out.rydberg_n = n;
                have_system = true;
            }
        } else {
            const json& e = sys["explicit"];
            check_known_keys(e, "system.explicit",
                             {"mu_Cm", "omega0", "gamma0", "mass_kg"}, v);
            Vec3 mu = Vec3::Zero();
            bool mu_ok = false;
            if (!e.contains("mu_Cm")) {
                v.add("system.explicit: mu_Cm required");
            } else if (e["mu_Cm"].is_number()) {
                if (positive_number(e["mu_Cm"])) {
                    mu = e["mu_Cm"].get<double>() * Vec3::UnitX();
                    mu_ok = true;
                } else {
                    v.add("system.explicit: scalar mu_Cm must be positive");
                }
            } else if (e["mu_Cm"].is_array() && e["mu_Cm"].size() == 3) {
                bool numeric = true;
                for (int i = 0; i < 3; ++i) {
                    if (!e["mu_Cm"][i].is_number()) numeric = false;
                    else mu[i] = e["mu_Cm"][i].get<double>();
                }
                if (!numeric || mu.norm() <= 0.0 || !mu.allFinite())
                    v.add("system.explicit: mu_Cm vector must be finite and nonzero");
                else mu_ok = true;
            } else {
                v.add("system.explicit: mu_Cm must be a number or a 3-array");
            }
            double omega0 = 0, gamma0 = 0;
            if (!e.contains("omega0") || !positive_number(e["omega0"]))
                v.add("system.explicit: positive omega0 required");
            else omega0 = e["omega0"].get<double>();
            if (!e.contains("gamma0") || !positive_number(e["gamma0"]))
                v.add("system.explicit: positive gamma0 required");
            else gamma0 = e["gamma0"].get<double>();
            if (!e.contains("mass_kg") || !positive_number(e["mass_kg"]))
                v.add("system.explicit: positive mass_kg required");
            else mass_kg = e["mass_kg"].get<double>();
            if (mu_ok && omega0 > 0 && gamma0 > 0 && mass_kg > 0) {
                out.base.mu_a = mu;
                out.base.mu_b = mu;
                out.base.omega0 = omega0;
                out.base.gamma0 = gamma0;
                out.base.mass = mass_kg;
                out.base.r_vec = (1.0 / out.base.k0()) * Vec3::UnitZ();
                have_system = true;
            }
        }
    }

    // --- geometry / times ---------------------------------------------------
    if (!root.contains("geometry")) v.add("geometry: object required");
    else out.k0R_values = parse_axis(root["geometry"], "geometry", "k0R",
                                     nullptr, false, v);
    if (!root.contains("times")) v.add("times: object required");
    else out.gamma0T_values = parse_axis(root["times"], "times", nullptr,
                                         "gamma0_T", true, v);

    // --- observables --------------------------------------------------------
    if (!root.contains("observables") || !root["observables"].is_array() ||
        root["observables"].empty()) {
        v.add("observables: nonempty array required");
    } else {
        for (const auto& o : root["observables"]) {
            const std::string name = o.is_string() ? o.get<std::string>() : "";
            Observable obs;
            if (name == "populations") obs = Observable::populations;
            else if (name == "forces") obs = Observable::forces;
            else if (name == "emission") obs = Observable::emission;
            else if (name == "displacement") obs = Observable::displacement;
            else {
                v.add("observables: unknown observable '" + name + "'");
                continue;
            }
            if (!out.has(obs)) out.observables.push_back(obs);
        }
    }

    // --- options ------------------------------------------------------------
    if (root.contains("emission_mode")) {
        const json& m = root["emission_mode"];
        const std::string s = m.is_string() ? m.get<std::string>() : "";
        if (s == "as_printed") out.emission_mode = EmissionMode::as_printed;
        else if (s == "consistent") out.emission_mode = EmissionMode::consistent;
        else v.add("emission_mode: must be 'as_printed' or 'consistent'");
    }
    if (root.contains("quadrature")) {
        const json& q = root["quadrature"];
        check_known_keys(q, "quadrature", {"order", "base_panels", "rel_tol"}, v);
        if (q.contains("order")) {
            if (!q["order"].is_number_integer() || q["order"].get<int>() < 2)
                v.add("quadrature: order must be an integer >= 2");
            else out.quad.order = q["order"].get<int>();
        }
        if (q.contains("base_panels")) {
            if (!q["base_panels"].is_number_integer() ||
                q["base_panels"].get<int>() < 1)
                v.add("quadrature: base_panels must be an integer >= 1");
            else out.quad.base_panels = q["base_panels"].get<int>();
        }
        if (q.contains("rel_tol")) {
            if (!positive_number(q["rel_tol"]))
                v.add("quadrature: rel_tol must be positive");
            else out.quad.rel_tol = q["rel_tol"].get<double>();
        }
    }
    if (root.contains("output")) {
        const json& o = root["output"];
        check_known_keys(o, "output", {"path", "format"}, v);
        if (o.contains("path")) {
            if (!o["path"].is_string() || o["path"].get<std::string>().empty())
                v.add("output: path must be a nonempty string");
            else out.output_path = o["path"].get<std::string>();
        }
        if (o.contains("format")) {
            const std::string f =
                o["format"].is_string() ? o["format"].get<std::string>() : "";
            if (f == "csv") out.format = OutputFormat::csv;
            else if (f == "json") out.format = OutputFormat::json;
            else v.add("output: format must be 'csv' or 'json'");
        }
    }

    if (!v.items.empty()) v.raise();
    (void)have_system;
    return out;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("{\"errors\":[\"cannot open config file: " +
                                    path + "\"]}");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

std::vector<std::string> column_names(const RunConfig& cfg) {
    std::vector<std::string> cols = {"k0R", "T_s"};
    if (cfg.has(Observable::populations)) {
        cols.push_back("P_A");
        cols.push_back("P_B");
    }
    if (cfg.has(Observable::emission)) {
        cols.push_back("P_gamma");
        cols.push_back("unitarity_defect");
    }
    if (cfg.has(Observable::forces)) {
        cols.push_back("Fc_A_R");
        cols.push_back("Fc_B_R");
        cols.push_back("Fc_net_R");
        for (const char* who : {"A", "B", "net"})
            for (const char* ax : {"x", "y", "z"})
                cols.push_back(std::string("Fnc_") + who + "_" + ax);
        cols.push_back("Foff_A_R");
    }
    if (cfg.has(Observable::displacement)) cols.push_back("S_CM_m");
    return cols;
}

SweepResult run_sweep(const RunConfig& cfg, unsigned threads) {
    cfg.base.require_valid();
    if (cfg.k0R_values.empty() || cfg.gamma0T_values.empty() ||
        cfg.observables.empty())
        throw validation_error(
            "{\"errors\":[\"run_sweep: empty grid or observable list\"]}");

    const size_t nx = cfg.k0R_values.size();
    const size_t nt = cfg.gamma0T_values.size();
    const size_t n_rows = nx * nt;

    SweepResult result;
    result.columns = column_names(cfg);
    result.rows.assign(n_rows, {});

    const Vec3 rhat = cfg.base.r_vec.normalized();
    const auto eval_row = [&](size_t flat) {
        const size_t ix = flat / nt;
        const size_t it = flat % nt;
        const double x0 = cfg.k0R_values[ix];
        const double tt = cfg.gamma0T_values[it];

        DyadConfig c = cfg.base;
        c.r_vec = (x0 / cfg.base.k0()) * rhat;
        const CouplingRates rates = coupling_rates(c);
        const double T_s = tt / c.gamma0;

        std::vector<double>& row = result.rows[flat];
        row.reserve(result.columns.size());
        row.push_back(x0);
        row.push_back(T_s);
        if (cfg.has(Observable::populations) || cfg.has(Observable::emission)) {
            const PopulationSample p = populations(rates, T_s);
            if (cfg.has(Observable::populations)) {
                row.push_back(p.p_a);
                row.push_back(p.p_b);
            }
            if (cfg.has(Observable::emission)) {
                row.push_back(p.p_gamma);
                row.push_back(std::abs(p.unitarity_sum - 1.0));
            }
        }
        if (cfg.has(Observable::forces)) {
            const ConservativeForces fc = conservative_forces(rates, T_s);
            row.push_back(fc.f_a.dot(rhat));
            row.push_back(fc.f_b.dot(rhat));
            row.push_back(fc.f_net.dot(rhat));
            const NonconservativeForces fnc = nonconservative_forces(rates, T_s);
            for (const Vec3* f : {&fnc.f_a, &fnc.f_b, &fnc.f_net})
                for (int k = 0; k < 3; ++k) row.push_back((*f)[k]);
            const Vec3 foff = offresonant_force(c, rates, T_s, cfg.quad);
            row.push_back(foff.dot(rhat));
        }
        if (cfg.has(Observable::displacement))
            row.push_back(cm_displacement(c, rates, T_s));
    };

    unsigned n_workers = threads ? threads : std::thread::hardware_concurrency();
    if (n_workers == 0) n_workers = 1;
    n_workers = std::min<unsigned>(n_workers, std::max<size_t>(n_rows, 1));

    if (n_workers <= 1) {
        for (size_t i = 0; i < n_rows; ++i) eval_row(i);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::mutex err_mutex;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    for (size_t i = w; i < n_rows; i += n_workers) eval_row(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    return result;
}

std::string to_csv(const SweepResult& result) {
    std::string out;
    for (size_t i = 0; i < result.columns.size(); ++i) {
        if (i) out += ",";
        out += csv_field(result.columns[i]);
    }
    out += "\n";
    for (const auto& row : result.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += fmt_double(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const SweepResult& result) {
    // Hand-rolled so numeric formatting matches the CSV path exactly.
    std::string out = "{\n  \"columns\": [";
    for (size_t i = 0; i < result.columns.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + result.columns[i] + "\"";
    }
    out += "],\n  \"rows\": [\n";
    for (size_t rix = 0; rix < result.rows.size(); ++rix) {
        out += "    [";
        const auto& row = result.rows[rix];
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ", ";
            out += std::isfinite(row[i]) ? fmt_double(row[i]) : "null";
        }
        out += (rix + 1 < result.rows.size()) ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

size_t run_to_file(const RunConfig& cfg, unsigned threads,
                   std::ostream& summary) {
    const SweepResult result = run_sweep(cfg, threads);
    const std::string body =
        cfg.format == OutputFormat::csv ? to_csv(result) : to_json(result);
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw validation_error("{\"errors\":[\"cannot open output path: " +
                               cfg.output_path + "\"]}");
    out.write(body.data(), std::streamsize(body.size()));
    out.close();
    if (!out)
        throw numerical_error("run: failed writing " + cfg.output_path);
    summary << "wrote " << result.rows.size() << " rows x "
            << result.columns.size() << " columns to " << cfg.output_path
            << "\n";
    return body.size();
}

}  // namespace dyad
