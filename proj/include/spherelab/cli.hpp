#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spherelab::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Printed normalisations depend on this choice, so every report carries it.
inline constexpr const char* kConvention =
    "V(n,m) carries <z^a, z^b> = delta_ab a!/m!, making the components of z^(x)m orthonormal "
    "and ||z^(x)m||^2 = ||z||^(2m); Gram entries are inner products of monomial coefficient vectors";

/// Runs one command line (args exclude the program name). Exit status: 0
/// pass, 1 fail or rejected, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spherelab::cli
