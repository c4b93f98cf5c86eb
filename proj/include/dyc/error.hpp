#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyc {

enum class ErrorCode {
    invalid_argument,
    not_in_region,
    precondition_violated,
    internal_infeasible,
    invalid_plan,
    unresolvable_chain,
};

std::string_view to_string(ErrorCode code);

/// Library error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dyc
