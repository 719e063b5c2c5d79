#pragma once

namespace mzv {

/// command-line front end; returns the process exit code
int cli_main(int argc, char** argv);

}  // namespace mzv
