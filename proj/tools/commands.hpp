#pragma once

namespace symstress::cli {

// Exit codes: 0 success, 1 usage or input error, 2 domain error.
int run(int argc, char** argv);

}  // namespace symstress::cli
