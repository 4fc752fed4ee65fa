#pragma once

#include <stdexcept>
#include <string>

namespace mmchaos {

// Error classes map onto process exit codes: config -> 2, resource -> 3,
// admissibility -> 4. Type errors are reported as config errors at the
// process boundary; internal errors exit 1.
enum class ErrorCode { Type, Config, Resource, Admissibility, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    const char* code_name() const noexcept {
        switch (code_) {
        case ErrorCode::Type: return "type";
        case ErrorCode::Config: return "config";
        case ErrorCode::Resource: return "resource";
        case ErrorCode::Admissibility: return "admissibility";
        case ErrorCode::Internal: break;
        }
        return "internal";
    }

    int exit_status() const noexcept {
        switch (code_) {
        case ErrorCode::Type:
        case ErrorCode::Config: return 2;
        case ErrorCode::Resource: return 3;
        case ErrorCode::Admissibility: return 4;
        case ErrorCode::Internal: break;
        }
        return 1;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail_type(const std::string& m) { throw Error(ErrorCode::Type, m); }
[[noreturn]] inline void fail_config(const std::string& m) { throw Error(ErrorCode::Config, m); }
[[noreturn]] inline void fail_resource(const std::string& m) { throw Error(ErrorCode::Resource, m); }
[[noreturn]] inline void fail_admissibility(const std::string& m) { throw Error(ErrorCode::Admissibility, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrorCode::Internal, m); }

} // namespace mmchaos
