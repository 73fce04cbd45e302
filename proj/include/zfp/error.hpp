#pragma once

#include <stdexcept>
#include <string>

namespace zfp {

// Library-wide error type. All recoverable failures (bad input files,
// contract violations at API boundaries) throw this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zfp
