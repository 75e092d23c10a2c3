#pragma once

#include <stdexcept>
#include <string>

namespace atcert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InconsistentRotation : Error { using Error::Error; };
struct NotPlanarEmbedding : Error { using Error::Error; };
struct RootNotOnOuterFace : Error { using Error::Error; };
struct RootDeleted : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotInClass : Error { using Error::Error; };
struct ConfigurationStale : Error { using Error::Error; };

// Raised when the artifact fails to produce a certificate the theorem
// promises. Never swallowed: any sighting is a reportable event.
struct TheoremViolation : Error { using Error::Error; };

}  // namespace atcert
