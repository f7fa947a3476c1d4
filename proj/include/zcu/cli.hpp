#pragma once

namespace zcu {

// CLI entry point; returns the process exit code.
int run(int argc, char** argv);

} // namespace zcu
