#pragma once

namespace retractlab {

/// Serial runs are the reference path; parallel runs must return identical results.
enum class Execution { Serial, Parallel };

/// Worker threads available to the parallel kernels (1 without OpenMP).
int max_threads();

}  // namespace retractlab
