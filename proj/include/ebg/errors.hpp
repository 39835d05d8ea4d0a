#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ebg {

// Thrown by make_basis when sinh/cosh of p*h would overflow double range.
class tension_overflow_error : public std::domain_error {
public:
    explicit tension_overflow_error(double ph)
        : std::domain_error("tension argument p*h = " + std::to_string(ph) +
                            " overflows sinh/cosh"),
          ph_(ph) {}
    double ph() const noexcept { return ph_; }

private:
    double ph_;
};

// Thrown by the direct solvers on a zero or near-zero pivot.
class singular_matrix_error : public std::runtime_error {
public:
    singular_matrix_error(std::size_t pivot_index, double pivot_value)
        : std::runtime_error("numerically singular matrix at pivot " +
                            std::to_string(pivot_index) + " (value " +
                            std::to_string(pivot_value) + ")"),
          pivot_index_(pivot_index),
          pivot_value_(pivot_value) {}
    std::size_t pivot_index() const noexcept { return pivot_index_; }
    double pivot_value() const noexcept { return pivot_value_; }

private:
    std::size_t pivot_index_;
    double pivot_value_;
};

// Thrown by the time loop when the iterate stops being finite (or grows
// past any physically meaningful magnitude).
class blow_up_error : public std::runtime_error {
public:
    blow_up_error(std::size_t step, double max_abs)
        : std::runtime_error("solution blew up at step " + std::to_string(step) +
                            " (max |delta| = " + std::to_string(max_abs) + ")"),
          step_(step),
          max_abs_(max_abs) {}
    std::size_t step() const noexcept { return step_; }
    double max_abs() const noexcept { return max_abs_; }

private:
    std::size_t step_;
    double max_abs_;
};

// Thrown by the tension scan when every candidate run diverged.
class no_viable_p_error : public std::runtime_error {
public:
    no_viable_p_error()
        : std::runtime_error("tension scan: every candidate run diverged") {}
};

}  // namespace ebg
