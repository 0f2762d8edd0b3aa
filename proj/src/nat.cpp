#include <launchpad/error.hpp>
#include <launchpad/nat.hpp>

#include <algorithm>

namespace launchpad
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::precondition_violation:
        return "precondition_violation";
    case ErrorKind::overflow:
        return "overflow";
    case ErrorKind::state_violation:
        return "state_violation";
    case ErrorKind::parse:
        return "parse";
    }
    return "unknown";
}

std::string to_string(Nat value)
{
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Nat parse_nat(std::string_view text)
{
    if (text.empty()) {
        fail(ErrorKind::parse, "empty integer string");
    }
    if (text.size() > 1 && text.front() == '0') {
        fail(
            ErrorKind::parse,
            "leading zero in integer string \"" + std::string(text) + "\"");
    }
    Nat value = 0;
    for (char const c : text) {
        if (c < '0' || c > '9') {
            fail(
                ErrorKind::parse,
                "not a decimal integer: \"" + std::string(text) + "\"");
        }
        Nat const digit = static_cast<Nat>(c - '0');
        if (value > (kNatMax - digit) / 10) {
            fail(
                ErrorKind::parse,
                "integer exceeds 128-bit range: \"" + std::string(text) + "\"");
        }
        value = value * 10 + digit;
    }
    return value;
}

} // namespace launchpad
