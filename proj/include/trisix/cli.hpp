#pragma once

// Command-line surface: count / verify / eval subcommands with
// reproducible seeded runs and text/json/csv output.
//
// Exit codes: 0 success, 1 verification failure, 2 resource or
// configuration error.

namespace trisix {

int cli_main(int argc, const char* const* argv);

}  // namespace trisix
