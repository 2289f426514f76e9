#ifndef PHYTA_ERRORS_HPP
#define PHYTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace phyta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fuzzy arithmetic
struct DivisionBySupportContainingZero : Error {
    using Error::Error;
};
struct AlphaOutOfRange : Error {
    using Error::Error;
};
struct ParameterOutOfRange : Error {
    using Error::Error;
};

// network model
struct NegativeFlow : Error {
    using Error::Error;
};
struct PathNotInNetwork : Error {
    using Error::Error;
};
struct NoPathExists : Error {
    using Error::Error;
};

// linear systems and solver dynamics
struct DisconnectedSourceSink : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct MismatchedNodeSets : Error {
    using Error::Error;
};

// ingestion
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct UnknownFixture : Error {
    using Error::Error;
};

}  // namespace phyta

#endif
