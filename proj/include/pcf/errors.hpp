#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeError : Error { using Error::Error; };
struct ZeroPolyError : Error { using Error::Error; };
struct SquarefreeError : Error { using Error::Error; };
struct BracketError : Error { using Error::Error; };
struct RationalElementError : Error { using Error::Error; };
struct RatioUndefinedError : Error { using Error::Error; };
struct ReducibleError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct PrecisionError : Error { using Error::Error; };
struct SelectorError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace pcf
