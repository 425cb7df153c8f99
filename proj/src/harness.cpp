#include "oilfilm/harness.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace oilfilm {

namespace {

// 17 significant digits round-trip a double exactly.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

}  // namespace

std::vector<Eigen::Index> parse_n_list(const std::string& text) {
    std::vector<Eigen::Index> ns;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid grid size: " + item);
        }
        if (pos != item.size() || value <= 0)
            throw std::invalid_argument("invalid grid size: " + item);
        ns.push_back(static_cast<Eigen::Index>(value));
    }
    if (ns.empty()) throw std::invalid_argument("empty grid size list");
    return ns;
}

void validate_config(const CaseConfig& config) {
    if (config.interface_kind != "flat" && config.interface_kind != "sine" &&
        config.interface_kind != "cosine" && config.interface_kind != "file")
        throw std::invalid_argument("unknown interface kind: " + config.interface_kind);
    if (config.interface_kind == "file" && config.sample_file.empty())
        throw std::invalid_argument("interface kind 'file' requires a sample file path");
    if (!(config.h0 > 0)) throw std::invalid_argument("h0 must be positive");
    if (!(config.L > 0)) throw std::invalid_argument("L must be positive");
    if (!(config.eps1 > 0) || !(config.eps2 > 0))
        throw std::invalid_argument("dielectric constants must be positive");
    if (config.ns.empty()) throw std::invalid_argument("at least one grid size is required");
    for (Eigen::Index n : config.ns)
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("grid sizes must be even and at least 8");
    if (config.mode == CaseConfig::Mode::solve) {
        if (config.ns.size() != 1)
            throw std::invalid_argument("solve mode takes a single grid size");
    } else {
        for (std::size_t k = 0; k + 1 < config.ns.size(); ++k)
            if (config.ns[k + 1] != 2 * config.ns[k])
                throw std::invalid_argument("convergence mode requires a doubling grid size list");
    }
    if (config.reference == CaseConfig::Reference::analytic && config.interface_kind != "flat")
        throw std::invalid_argument("analytic reference is only valid for the flat interface");
}

CaseConfig parse_config_file(std::istream& in, CaseConfig base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "interface") {
            if (value.rfind("file:", 0) == 0) {
                base.interface_kind = "file";
                base.sample_file = value.substr(5);
            } else {
                base.interface_kind = value;
            }
        } else if (key == "h0") {
            base.h0 = std::stod(value);
        } else if (key == "L") {
            base.L = std::stod(value);
        } else if (key == "A") {
            base.A = std::stod(value);
        } else if (key == "eps1") {
            base.eps1 = std::stod(value);
        } else if (key == "eps2") {
            base.eps2 = std::stod(value);
        } else if (key == "n") {
            base.ns = parse_n_list(value);
        } else if (key == "mode") {
            if (value == "solve") base.mode = CaseConfig::Mode::solve;
            else if (value == "convergence") base.mode = CaseConfig::Mode::convergence;
            else throw std::invalid_argument("unknown mode: " + value);
        } else if (key == "reference") {
            if (value == "analytic") base.reference = CaseConfig::Reference::analytic;
            else if (value == "self") base.reference = CaseConfig::Reference::self;
            else throw std::invalid_argument("unknown reference: " + value);
        } else if (key == "out") {
            base.out_dir = value;
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return base;
}

InterfaceProfile<double> make_profile(const CaseConfig& config) {
    const double L = config.L;
    if (config.interface_kind == "file") {
        std::ifstream in(config.sample_file);
        if (!in)
            throw std::runtime_error("cannot read sample file: " + config.sample_file.string());
        std::vector<double> samples;
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty()) continue;
            samples.push_back(std::stod(line));
        }
        if (samples.size() < 2)
            throw std::runtime_error("sample file must contain at least two heights");
        return fit_profile(Eigen::Map<const VectorX<double>>(samples.data(), samples.size()), L);
    }

    const Eigen::Index n_s = 32;
    VectorX<double> samples(n_s);
    for (Eigen::Index k = 0; k < n_s; ++k) {
        const double x = -L + 2 * L * static_cast<double>(k) / static_cast<double>(n_s);
        if (config.interface_kind == "flat")
            samples[k] = config.h0;
        else if (config.interface_kind == "sine")
            samples[k] = config.h0 * (1 + 0.2 * std::sin(std::numbers::pi * x / L));
        else
            samples[k] = config.h0 * (1 - std::cos(2 * std::numbers::pi * x / L) / (2 * std::numbers::pi));
    }
    return fit_profile(samples, L);
}

ProblemParams<double> make_params(const CaseConfig& config) {
    ProblemParams<double> params;
    params.eps1 = config.eps1;
    params.eps2 = config.eps2;
    params.boundary = BoundaryData<double>::single_cosine(config.A, config.L);
    return params;
}

namespace {

void write_solution_csv(const std::filesystem::path& path, const InterfaceSolution<double>& sol) {
    std::ofstream out = open_output(path);
    out << "x,h,phi,dphi_dtau,dphi_dnu_1,dphi_dnu_2\n";
    for (Eigen::Index j = 0; j < sol.grid.size(); ++j) {
        out << fmt(sol.grid.x[j]) << ',' << fmt(sol.grid.h[j]) << ',' << fmt(sol.phi[j]) << ','
            << fmt(sol.dphi_dtau[j]) << ',' << fmt(sol.dphi_dnu1[j]) << ','
            << fmt(sol.dphi_dnu2[j]) << '\n';
    }
}

void write_convergence_csv(const std::filesystem::path& path,
                           const std::vector<ConvergenceRow<double>>& rows) {
    std::ofstream out = open_output(path);
    out << "n,error_phi,eoc_phi,error_dtau,eoc_dtau,error_dnu1,eoc_dnu1\n";
    for (const auto& row : rows) {
        auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string(); };
        out << row.n << ',' << fmt(row.error_phi) << ',' << opt(row.eoc_phi) << ','
            << fmt(row.error_dtau) << ',' << opt(row.eoc_dtau) << ',' << fmt(row.error_dnu1)
            << ',' << opt(row.eoc_dnu1) << '\n';
    }
}

nlohmann::json config_json(const CaseConfig& config) {
    nlohmann::json j;
    j["interface"] = config.interface_kind;
    if (config.interface_kind == "file") j["sample_file"] = config.sample_file.string();
    j["h0"] = config.h0;
    j["L"] = config.L;
    j["A"] = config.A;
    j["eps1"] = config.eps1;
    j["eps2"] = config.eps2;
    j["n"] = config.ns;
    j["mode"] = config.mode == CaseConfig::Mode::solve ? "solve" : "convergence";
    j["reference"] = config.reference == CaseConfig::Reference::analytic ? "analytic" : "self";
    j["out"] = config.out_dir.string();
    return j;
}

}  // namespace

RunArtifacts run_case(const CaseConfig& config) {
    validate_config(config);
    const InterfaceProfile<double> profile = make_profile(config);
    const ProblemParams<double> params = make_params(config);

    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + config.out_dir.string());

    RunArtifacts artifacts;
    nlohmann::json summary;
    summary["config"] = config_json(config);

    using clock = std::chrono::steady_clock;
    if (config.mode == CaseConfig::Mode::solve) {
        const auto t0 = clock::now();
        const InterfaceSolution<double> sol = solve_transmission(profile, params, config.ns[0]);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

        artifacts.solution_csv = config.out_dir / "solution.csv";
        write_solution_csv(artifacts.solution_csv, sol);
        summary["runs"] = nlohmann::json::array({{{"n", sol.grid.size()},
                                                  {"residual_second_kind", sol.residual_second_kind},
                                                  {"residual_first_kind", sol.residual_first_kind},
                                                  {"wall_ms", ms}}});
    } else {
        const ReferenceKind kind = config.reference == CaseConfig::Reference::analytic
                                       ? ReferenceKind::analytic_flat
                                       : ReferenceKind::self;
        const auto t0 = clock::now();
        const std::vector<ConvergenceRow<double>> rows =
            convergence_study(profile, params, config.ns, kind);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

        artifacts.convergence_csv = config.out_dir / "convergence.csv";
        write_convergence_csv(artifacts.convergence_csv, rows);

        // Plot-ready nodal data at the finest grid.
        const InterfaceSolution<double> sol = solve_transmission(profile, params, config.ns.back());
        artifacts.solution_csv = config.out_dir / "solution.csv";
        write_solution_csv(artifacts.solution_csv, sol);

        summary["wall_ms"] = ms;
        summary["runs"] = nlohmann::json::array();
        summary["runs"].push_back({{"n", sol.grid.size()},
                                   {"residual_second_kind", sol.residual_second_kind},
                                   {"residual_first_kind", sol.residual_first_kind}});
        summary["convergence"] = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = {{"n", row.n},
                                {"error_phi", row.error_phi},
                                {"error_dtau", row.error_dtau},
                                {"error_dnu1", row.error_dnu1}};
            if (row.eoc_phi) r["eoc_phi"] = *row.eoc_phi;
            if (row.eoc_dtau) r["eoc_dtau"] = *row.eoc_dtau;
            if (row.eoc_dnu1) r["eoc_dnu1"] = *row.eoc_dnu1;
            summary["convergence"].push_back(std::move(r));
        }
    }

    artifacts.summary_json = config.out_dir / "summary.json";
    std::ofstream out = open_output(artifacts.summary_json);
    out << summary.dump(2) << '\n';
    return artifacts;
}

}  // namespace oilfilm
