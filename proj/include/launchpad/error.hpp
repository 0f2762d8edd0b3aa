#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace launchpad
{

enum class ErrorKind
{
    precondition_violation,
    overflow,
    state_violation,
    parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure in the library surfaces as an Error; nothing aborts.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string const &message)
        : std::runtime_error(message)
        , kind_{kind}
    {
    }

    ErrorKind kind() const noexcept
    {
        return kind_;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string const &message)
{
    throw Error(kind, message);
}

inline void require(bool condition, char const *message)
{
    if (!condition) {
        fail(ErrorKind::precondition_violation, message);
    }
}

} // namespace launchpad
