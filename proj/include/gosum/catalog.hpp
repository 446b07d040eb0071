#ifndef GOSUM_CATALOG_HPP
#define GOSUM_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

namespace gosum
{

// Outcome of one identity check. lhs/rhs show the first mismatching pair on
// failure and the last compared pair on success.
struct IdentityResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct Identity {
    std::string id;
    std::string description;
    std::function<IdentityResult()> check;
};

// Every displayed summation identity, constant list, table and generating
// function relation covered by the engine.
const std::vector<Identity> &identity_catalog();

// Runs the catalog, evaluating entries concurrently; results come back in
// catalog order.
std::vector<IdentityResult> run_catalog();

} // namespace gosum

#endif
