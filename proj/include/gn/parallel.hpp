#pragma once

// Runtime switch between the OpenMP kernels and their serial twins.
// Both paths must produce bit-identical results; tests and the benchmark
// tool flip this flag.

namespace gn::parallel {

bool enabled();
void setEnabled(bool on);

}  // namespace gn::parallel
