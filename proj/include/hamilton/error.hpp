#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hamilton {

// Domain error carrying a stable machine-readable code. The CLI maps the
// code straight into its JSON error object, so codes are part of the
// public surface and must not be renamed casually.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace hamilton
