#pragma once

#include <stdexcept>
#include <string>

namespace sqt {

// A property that is a theorem for valid inputs failed at runtime. Either a
// bug in this library or a genuine counterexample; callers report it instead
// of aborting the process.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

}  // namespace sqt
