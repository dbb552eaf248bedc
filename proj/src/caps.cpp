#include "ttw/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "ttw/errors.hpp"

namespace ttw {

OracleCaps OracleCaps::parse(const std::string& spec, OracleCaps base) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw PreconditionViolated("bad caps entry '" + item + "' (want key=value)");
        std::string key = item.substr(0, eq);
        long long value = std::stoll(item.substr(eq + 1));
        if (key == "tsp")
            base.tsp_max_nodes = static_cast<int>(value);
        else if (key == "steiner")
            base.steiner_max_terminals = static_cast<int>(value);
        else if (key == "opt")
            base.opt_max_requests = static_cast<int>(value);
        else if (key == "bundle")
            base.opt_bundle_max_states = value;
        else
            throw PreconditionViolated("unknown caps key '" + key + "'");
    }
    return base;
}

OracleCaps OracleCaps::from_env(OracleCaps base) {
    const char* env = std::getenv("TTW_CAPS");
    if (!env || !*env) return base;
    return parse(env, base);
}

}  // namespace ttw
