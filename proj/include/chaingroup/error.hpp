#pragma once

#include <stdexcept>
#include <string>

namespace chaingroup {

// Every failure carries a stable kebab-case code so the CLI and tests can
// match on it without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + (detail.empty() ? "" : ": " + detail)), code_(std::move(code)) {}
    explicit Error(std::string code) : Error(std::move(code), "") {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace chaingroup
