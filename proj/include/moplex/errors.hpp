#ifndef MOPLEX_ERRORS_HPP
#define MOPLEX_ERRORS_HPP

#include <stdexcept>

namespace moplex {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct BadBounds : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct AlreadyMin : Error { using Error::Error; };
struct AllZeroWeights : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };
struct UnknownAlgorithm : Error { using Error::Error; };
struct DuplicateIdentifier : Error { using Error::Error; };
struct MissingConfig : Error { using Error::Error; };
struct BadConfig : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct ContinuousUnsupported : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace moplex

#endif
