#pragma once

#include "oilfilm/convergence.hpp"
#include "oilfilm/field.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace oilfilm {

/*
 * One solver run as configured from the command line or a key=value
 * config file.  Interfaces: the built-in profiles
 *
 *   flat    h(x) = h0
 *   sine    h(x) = h0 (1 + 0.2 sin(pi x / L))
 *   cosine  h(x) = h0 (1 - cos(2 pi x / L) / (2 pi))
 *
 * or "file" with equispaced height samples on [-L, L), one per line.
 * All of them are routed through fit_profile so closed-form and sampled
 * interfaces behave identically.
 */
struct CaseConfig {
    enum class Mode { solve, convergence };
    enum class Reference { analytic, self };

    std::string interface_kind = "flat";  // flat | sine | cosine | file
    std::filesystem::path sample_file;
    double h0 = 0.03;
    double L = 1.0;
    double A = 1.0;
    double eps1 = 8.0;
    double eps2 = 1.0;
    std::vector<Eigen::Index> ns = {64};
    Mode mode = Mode::solve;
    Reference reference = Reference::analytic;
    std::filesystem::path out_dir = "out";
};

struct RunArtifacts {
    std::filesystem::path solution_csv;
    std::filesystem::path convergence_csv;  // empty in solve mode
    std::filesystem::path summary_json;
};

void validate_config(const CaseConfig& config);

// "16,32,64" -> {16, 32, 64}
std::vector<Eigen::Index> parse_n_list(const std::string& text);

// Flat key=value lines mirroring the CLI flags ('#' starts a comment).
CaseConfig parse_config_file(std::istream& in, CaseConfig base = {});

InterfaceProfile<double> make_profile(const CaseConfig& config);
ProblemParams<double> make_params(const CaseConfig& config);

// Runs the configured case and writes solution/convergence CSVs plus a
// machine-readable JSON summary into config.out_dir.
RunArtifacts run_case(const CaseConfig& config);

}  // namespace oilfilm
