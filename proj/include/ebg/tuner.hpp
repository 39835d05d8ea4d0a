#pragma once

#include <utility>
#include <vector>

#include "ebg/problems.hpp"
#include "ebg/stepper.hpp"

namespace ebg {

// Tension-scan request: minimize the L-infinity error at target_time over
// p in [p_min, p_max]. A coarse uniform grid is followed by refine_rounds
// rounds of re-gridding the bracket one grid cell either side of the
// incumbent minimum, shrinking the increment each round.
struct ScanSpec {
    double p_min = 1e-4;
    double p_max = 1e-2;
    int coarse_count = 50;
    int refine_rounds = 3;
    double target_time = 0.0;
};

// trace holds every (p, error) pair evaluated, sorted by p within each round;
// best_error is the minimum over the trace and best_p its location.
// Divergent candidates appear in the trace with error = +infinity.
struct ScanResult {
    double best_p = 0.0;
    double best_error = 0.0;
    std::vector<std::pair<double, double>> trace;
};

// Candidate runs are independent and are evaluated in parallel; the trace and
// the result are deterministic regardless of thread scheduling. Throws
// no_viable_p_error when every candidate diverged.
ScanResult scan_p(const ProblemSpec& problem, const SolverConfig& config_template,
                  const ScanSpec& spec);

// Literal linear scan with a fixed increment, for fidelity checks against the
// coarse-to-fine search. Same result and trace conventions as scan_p.
ScanResult scan_exhaustive(const ProblemSpec& problem,
                           const SolverConfig& config_template, double p_min,
                           double p_max, double step, double target_time);

}  // namespace ebg
