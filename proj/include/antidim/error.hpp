#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antidim {

enum class Errc {
    IndexOutOfRange,
    SelfLoop,
    Disconnected,
    InvalidSize,
    EmptySet,
    FullSet,
    InvalidK,
    DimensionMismatch,
    TooLarge,
    InvalidSpec,
    GenerationFailed,
    ParseError,
};

auto to_string(Errc code) -> std::string_view;

/// All library failures are reported through this exception; `code()` lets
/// callers (the CLI in particular) map them to exit statuses.
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string & what);

    auto code() const noexcept -> Errc { return _code; }

private:
    Errc _code;
};

} // namespace antidim
