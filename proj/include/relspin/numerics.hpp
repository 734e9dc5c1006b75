// Deterministic numeric helpers: compensated summation and a thread fan-out
// whose results do not depend on the worker count.
//
// Contract used throughout the library: per-sample maps may run on any number
// of threads (each index is written to its own slot), while every reduction
// runs serially in sample-index order with Kahan compensation. Outputs are
// therefore bit-identical for any RELSPIN_THREADS value.

#ifndef RELSPIN_NUMERICS_HPP
#define RELSPIN_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace relspin {

/// Raised when a computation leaves its numeric contract (frame singularity,
/// degenerate eigenvector, density-matrix invariant violation, ...).
/// Distinct from std::invalid_argument, which flags bad call arguments.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by config parsing and CLI argument handling.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

namespace numerics {

/// Kahan compensated accumulator. T must support +, - and zero-init via T{}
/// (doubles) or be an Eigen fixed-size matrix (use the matrix overload below).
template <typename T>
struct KahanSum {
    T sum{};
    T carry{};

    void add(const T& value) {
        const T y = value - carry;
        const T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/// Worker count for parallel maps. Defaults to RELSPIN_THREADS (or 1 when
/// unset). Never affects results, only wall time.
int thread_count();
void set_thread_count(int n);

/// Reads RELSPIN_THREADS. Returns 1 when unset; throws config_error on a
/// value that is not a positive integer.
int thread_count_from_env();

/// Runs fn(i) for i in [0, n), partitioned into contiguous ranges over the
/// configured worker count. fn must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace numerics
} // namespace relspin

#endif
