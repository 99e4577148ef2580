#pragma once

#include <stdexcept>
#include <string>

namespace brpic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidField : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct SizeGuardExceeded : Error { using Error::Error; };
struct WrongCharacteristic : Error { using Error::Error; };
struct WrongShape : Error { using Error::Error; };
struct NotACocycle : Error { using Error::Error; };
struct UnknownGroup : Error { using Error::Error; };
struct GeneratorNotInvertible : Error { using Error::Error; };
struct GeneratorNotStabilizing : Error { using Error::Error; };
struct MemoryGuardExceeded : Error { using Error::Error; };
struct NondegenerateRequired : Error { using Error::Error; };
struct NotTabulated : Error { using Error::Error; };
struct FormNotInvariant : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace brpic
