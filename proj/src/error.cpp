#include "antidim/error.hpp"

namespace antidim {

auto to_string(Errc code) -> std::string_view
{
    switch (code) {
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::Disconnected: return "Disconnected";
        case Errc::InvalidSize: return "InvalidSize";
        case Errc::EmptySet: return "EmptySet";
        case Errc::FullSet: return "FullSet";
        case Errc::InvalidK: return "InvalidK";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::TooLarge: return "TooLarge";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::GenerationFailed: return "GenerationFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string & what) :
    std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
{
}

} // namespace antidim
