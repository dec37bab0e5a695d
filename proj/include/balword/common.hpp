#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace balword {

using int128 = __int128;
using uint128 = unsigned __int128;

// Thrown when a request exceeds a configured enumeration or memory bound
// (as opposed to a domain error, which means the arguments are invalid).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace balword
