// echoed-walks: simulation laboratory for random walks with echoed steps.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace ew::cli {

// Full command-line surface of the echoed-walks tool. Streams are injected
// so tests can capture output without touching process state. Returns the
// process exit code: 0 success, 1 verification failure, 2 config error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ew::cli
