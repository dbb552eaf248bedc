#pragma once

#include <cstdint>
#include <string>

namespace ttw {

/// Size limits for the exact solvers. Exceeding a cap raises InstanceTooLarge;
/// the oracles never fall back to approximation silently.
struct OracleCaps {
    int tsp_max_nodes = 14;
    int steiner_max_terminals = 10;
    int opt_max_requests = 18;
    std::int64_t opt_bundle_max_states = std::int64_t{1} << 22;

    /// Parses "tsp=14,steiner=10,opt=18,bundle=4194304" on top of `base`.
    static OracleCaps parse(const std::string& spec, OracleCaps base);
    static OracleCaps parse(const std::string& spec) { return parse(spec, OracleCaps{}); }
    /// Applies the TTW_CAPS environment variable, if set.
    static OracleCaps from_env(OracleCaps base);
    static OracleCaps from_env() { return from_env(OracleCaps{}); }
};

}  // namespace ttw
