#pragma once

namespace walkwatch {

// Worker count used by the parallel kernels. Resolution order: value given
// to set_thread_count, then the WALKWATCH_THREADS environment variable, then
// hardware concurrency. 0 means auto. All kernels reduce over fixed-size row
// blocks merged in block order, so results do not depend on this value.
int thread_count();
void set_thread_count(int n);

}  // namespace walkwatch
