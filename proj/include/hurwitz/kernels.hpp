#pragma once

#include <string>

namespace hurwitz {

/// Which implementation of a hot loop to run. Both produce identical results;
/// Serial is the reference the parallel kernels are tested against.
enum class ExecPolicy { Serial, Parallel };

std::string to_string(ExecPolicy policy);

/// Threads available to the Parallel policy (1 without OpenMP).
int max_threads();

}  // namespace hurwitz
