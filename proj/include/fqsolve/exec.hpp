#pragma once

namespace fqsolve {

// Every data-parallel kernel takes one of these. `serial` is the reference
// path; `parallel` must produce bit-identical results.
enum class Exec { serial, parallel };

// True when a kernel asked to run with `exec` should open an OpenMP region
// here (never nested inside an existing one).
bool use_openmp(Exec exec);

void set_thread_count(int threads);

}  // namespace fqsolve
