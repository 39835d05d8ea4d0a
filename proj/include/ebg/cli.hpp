#pragma once

#include <string>
#include <vector>

namespace ebg {

// Fully resolved run description. h and n_intervals are both stored in their
// canonical form (h = (domain_b - domain_a) / n_intervals) so a manifest
// serialized to the run record and re-parsed compares equal.
struct RunManifest {
    std::string problem;  // "shock" | "wave"
    double nu = 0.01;
    int n_intervals = 0;
    double h = 0.0;
    double dt = 0.0;
    double tmax = 0.0;
    bool scan = false;
    double p = 0.0;  // fixed tension; ignored when scan is set
    double scan_min = 0.0, scan_max = 0.0;
    bool exhaustive = false;
    double exhaustive_step = 0.0;
    double domain_a = 0.0, domain_b = 1.0;
    std::vector<double> snapshots;  // nonempty; defaults to {tmax}
    int inner_iters = 3;
    int quad_order = 8;
    int plot_oversample = 4;
    std::string out_dir = ".";

    bool operator==(const RunManifest&) const = default;
};

// Parses flags (program name not included). Usage problems (unknown flag,
// missing required flag, unparsable number, inconsistent pair) surface as
// std::invalid_argument.
RunManifest parse_args(const std::vector<std::string>& args);

// Runs the solve or scan described by the manifest and writes
// profile_<time>.csv, errors.csv, scan.csv (scans only) and run.json into
// out_dir, printing the error summary table to stdout. Returns the process
// exit status: 0 on success, 2 on solver failure.
int execute(const RunManifest& manifest);

// JSON round-trip used by the run record.
std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);

// Full driver: parse, execute, map failures to exit codes (1 usage, 2 solver).
int cli_main(int argc, const char* const* argv);

}  // namespace ebg
