#pragma once

namespace lps {

// Worker count used by the parallel scan loops.  Outputs are deterministic
// regardless of this setting: tasks are independent and merges happen in
// fixed index order.
void set_threads(unsigned n);
unsigned threads();

}  // namespace lps
