// Command-line front end: scenario verification, pointwise metric and
// curvature queries, geodesic integration with CSV export, and the invariant
// table.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 configuration
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <hartogs/hartogs.hpp>

namespace {

using namespace hartogs;

HartogsSpec parse_domain(const std::string& domain_json, std::optional<double> mu_flag) {
    HartogsSpec spec;
    try {
        const auto j = nlohmann::json::parse(domain_json);
        from_json(j, spec);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("cannot parse --domain JSON: ") + e.what());
    }
    if (mu_flag) spec.mu = *mu_flag;
    spec.validate();
    return spec;
}

std::vector<cdouble> parse_point(const std::string& text, int expected_dim) {
    std::vector<cdouble> pt;
    try {
        const auto j = nlohmann::json::parse(text);
        for (const auto& entry : j) {
            if (entry.is_array())
                pt.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
            else
                pt.emplace_back(entry.get<double>(), 0.0);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("cannot parse point JSON: ") + e.what());
    }
    if (expected_dim >= 0 && static_cast<int>(pt.size()) != expected_dim) {
        std::ostringstream os;
        os << "point has " << pt.size() << " coordinates, expected " << expected_dim;
        throw ConfigError(os.str());
    }
    return pt;
}

PotentialKind make_kind(const HartogsSpec& spec, const std::string& family) {
    if (family == "hartogs") return PotentialKind::hartogs(spec);
    if (family == "dual-hartogs") return PotentialKind::dual_hartogs(spec);
    if (family == "base") return PotentialKind::base_domain(spec.base);
    if (family == "dual-base") return PotentialKind::dual_base_domain(spec.base);
    throw ConfigError("unknown --kind '" + family + "' (hartogs, dual-hartogs, base, dual-base)");
}

/// Plane tokens like "x1,y1" or "x0,x2": coordinate real directions.
SectionalPlane parse_plane(const std::string& text, int m) {
    const auto parse_dir = [m](const std::string& tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
            throw ConfigError("plane direction must look like x1 or y1");
        const int slot = std::stoi(tok.substr(1));
        if (slot < 0 || slot >= m) throw ConfigError("plane direction index out of range");
        return std::make_pair(slot, tok[0] == 'y');
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ConfigError("--plane expects two comma-separated directions");
    const auto [sa, ya] = parse_dir(text.substr(0, comma));
    const auto [sb, yb] = parse_dir(text.substr(comma + 1));
    return coordinate_plane(m, sa, ya, sb, yb);
}

int cmd_verify(const ScenarioConfig& cfg, const std::string& out_path, bool text_format) {
    const auto report = run_verification(cfg);
    std::cout << report_to_text(report, cfg.timings);
    if (!out_path.empty())
        emit_report(report, text_format ? ReportFormat::text : ReportFormat::json, out_path,
                    cfg.timings);
    return report.all_passed() ? 0 : 1;
}

int cmd_invariants(const std::optional<std::string>& domain_json) {
    std::vector<CartanDomainSpec> specs;
    if (domain_json) {
        const auto spec = parse_domain(*domain_json, std::nullopt);
        specs = spec.base.factors;
    } else {
        specs = {{CartanKind::I, 2, 3},  {CartanKind::II, 6, 6}, {CartanKind::III, 3, 3},
                 {CartanKind::IV, 5, 5}, {CartanKind::V},        {CartanKind::VI}};
    }
    std::cout << "kind      d     r     a     b  gamma   identities\n";
    bool ok = true;
    for (const auto& s : specs) {
        const auto v = invariants_of(s);
        const bool good = v.satisfies_identities();
        ok = ok && good;
        std::ostringstream name;
        name << to_string(s.kind);
        if (s.kind == CartanKind::I) name << "(" << s.n << "," << s.m << ")";
        else if (s.kind == CartanKind::II || s.kind == CartanKind::III || s.kind == CartanKind::IV)
            name << "(" << s.n << ")";
        std::cout << name.str();
        for (std::size_t pad = name.str().size(); pad < 8; ++pad) std::cout << ' ';
        std::printf("%5ld %5ld %5ld %5ld %6ld   %s\n", v.d, v.r, v.a, v.b, v.gamma,
                    good ? "ok" : "VIOLATED");
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hartogs-domain geometry toolkit"};
    app.require_subcommand(1);

    // verify ------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run named verification checks");
    std::string cfg_path, domain_json, checks_csv, out_path, embed_name;
    std::optional<double> mu_flag;
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0, t_end = 0.0, step = 0.0;
    int trajectories = 0;
    bool text_format = false, timings = false;
    verify->add_option("--config", cfg_path, "scenario config JSON file");
    verify->add_option("--domain", domain_json, "inline domain JSON, e.g. '{\"factors\":[{\"kind\":\"VI\"}],\"mu\":1.5}'");
    verify->add_option("--mu", mu_flag, "override the Hartogs exponent");
    verify->add_option("--checks", checks_csv, "comma-separated check names or 'all'");
    verify->add_option("--embed", embed_name, "embedding descriptor (default 'standard')");
    verify->add_option("--samples", samples, "sample count per check");
    verify->add_option("--seed", seed, "master RNG seed");
    verify->add_option("--tol", tol, "tolerance override (0 = per-check defaults)");
    verify->add_option("--trajectories", trajectories, "geodesic trajectory count");
    verify->add_option("--t-end", t_end, "geodesic integration time");
    verify->add_option("--step", step, "geodesic step size");
    verify->add_option("--out", out_path, "write the report to this file");
    verify->add_flag("--text", text_format, "write the report in text format instead of JSON");
    verify->add_flag("--timings", timings, "include wall times in the report (breaks byte-level reproducibility)");

    // metric ------------------------------------------------------------------
    auto* metric = app.add_subcommand("metric", "print the metric matrix at a point");
    std::string m_domain, m_kind = "hartogs", m_point;
    std::optional<double> m_mu;
    metric->add_option("--domain", m_domain, "domain JSON")->required();
    metric->add_option("--mu", m_mu, "Hartogs exponent override");
    metric->add_option("--kind", m_kind, "hartogs | dual-hartogs | base | dual-base");
    metric->add_option("--point", m_point, "point as JSON [[re,im],...] (fiber first for fibered kinds)")->required();

    // curvature ---------------------------------------------------------------
    auto* curv = app.add_subcommand("curvature", "sectional curvature of a coordinate plane");
    std::string c_domain, c_kind = "dual-hartogs", c_point, c_plane = "x1,y1";
    std::optional<double> c_mu;
    curv->add_option("--domain", c_domain, "domain JSON")->required();
    curv->add_option("--mu", c_mu, "Hartogs exponent override");
    curv->add_option("--kind", c_kind, "potential family");
    curv->add_option("--point", c_point, "evaluation point JSON")->required();
    curv->add_option("--plane", c_plane, "two real directions, e.g. x1,y1");

    // geodesic ----------------------------------------------------------------
    auto* geo = app.add_subcommand("geodesic", "integrate a geodesic and export CSV");
    std::string g_domain, g_kind = "hartogs", g_start, g_vel, g_out;
    std::optional<double> g_mu;
    double g_tend = 1.0, g_step = 1e-3;
    geo->add_option("--domain", g_domain, "domain JSON")->required();
    geo->add_option("--mu", g_mu, "Hartogs exponent override");
    geo->add_option("--kind", g_kind, "potential family");
    geo->add_option("--start", g_start, "start point JSON")->required();
    geo->add_option("--velocity", g_vel, "initial velocity JSON")->required();
    geo->add_option("--t-end", g_tend, "integration time");
    geo->add_option("--step", g_step, "step size");
    geo->add_option("--out", g_out, "CSV output path")->required();

    // invariants ----------------------------------------------------------------
    auto* inv = app.add_subcommand("invariants", "print the invariant table and identity checks");
    std::string i_domain;
    inv->add_option("--domain", i_domain, "domain JSON (default: the six canonical kinds)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            ScenarioConfig cfg;
            if (!cfg_path.empty()) {
                std::ifstream in(cfg_path);
                if (!in) throw ConfigError("cannot open config file: " + cfg_path);
                nlohmann::json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw ConfigError(std::string("cannot parse config file: ") + e.what());
                }
                from_json(j, cfg);
            }
            // explicit flags take precedence over the config file
            if (!domain_json.empty()) cfg.domain = parse_domain(domain_json, mu_flag);
            else if (mu_flag) cfg.domain.mu = *mu_flag;
            if (verify->count("--checks")) {
                cfg.checks.clear();
                std::stringstream ss(checks_csv);
                std::string tok;
                while (std::getline(ss, tok, ',')) cfg.checks.push_back(tok);
            }
            if (verify->count("--embed")) cfg.embed = embed_name;
            if (verify->count("--samples")) cfg.samples = samples;
            if (verify->count("--seed")) cfg.seed = seed;
            if (verify->count("--tol")) cfg.tolerance_override = tol;
            if (verify->count("--trajectories")) cfg.trajectories = trajectories;
            if (verify->count("--t-end")) cfg.t_end = t_end;
            if (verify->count("--step")) cfg.step = step;
            if (timings) cfg.timings = true;
            expand_check_list(cfg.checks); // validate names before running
            cfg.validate_embed();
            return cmd_verify(cfg, out_path, text_format);
        }
        if (metric->parsed()) {
            const auto kind = make_kind(parse_domain(m_domain, m_mu), m_kind);
            const auto pt = parse_point(m_point, kind.ambient_dim());
            const auto h = metric_at(kind, pt);
            std::cout << "positive_definite: " << (h.positive_definite() ? "yes" : "no") << "\n";
            for (int i = 0; i < h.dim(); ++i) {
                for (int j = 0; j < h.dim(); ++j) {
                    const auto v = h.g(i, j);
                    std::printf("(%+.12e%+.12ei) ", v.real(), v.imag());
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (curv->parsed()) {
            const auto kind = make_kind(parse_domain(c_domain, c_mu), c_kind);
            const auto pt = parse_point(c_point, kind.ambient_dim());
            const auto plane = parse_plane(c_plane, kind.ambient_dim());
            std::printf("K = %.12f\n", sectional_curvature(kind, pt, plane));
            return 0;
        }
        if (geo->parsed()) {
            const auto kind = make_kind(parse_domain(g_domain, g_mu), g_kind);
            const auto start = parse_point(g_start, kind.ambient_dim());
            const auto vel = parse_point(g_vel, kind.ambient_dim());
            const auto traj = geodesic_integrate(kind, start, vel, g_tend, g_step);
            std::ofstream out(g_out, std::ios::binary);
            if (!out) throw ConfigError("cannot open CSV output: " + g_out);
            out << "t";
            for (int i = 0; i < kind.ambient_dim(); ++i) out << ",re_z" << i << ",im_z" << i;
            out << ",energy\n";
            out.precision(15);
            for (std::size_t n = 0; n < traj.t.size(); ++n) {
                out << traj.t[n];
                for (const auto& z : traj.position[n]) out << "," << z.real() << "," << z.imag();
                out << "," << traj.energy[n] << "\n";
            }
            std::cout << "wrote " << traj.t.size() << " samples to " << g_out << "\n";
            return 0;
        }
        if (inv->parsed())
            return cmd_invariants(i_domain.empty() ? std::nullopt
                                                   : std::optional<std::string>(i_domain));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
