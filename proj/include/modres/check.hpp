#pragma once

#include <string>
#include <vector>

namespace modres {

struct Check {
    std::string name;
    bool pass = false;
    std::string details;
};

inline bool all_pass(const std::vector<Check>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

}  // namespace modres
