#pragma once

#include <stdexcept>
#include <string>

namespace hrl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed point left the representable part of the disk.
struct OutOfDiskPrecision : Error {
    using Error::Error;
};

struct DegenerateGeodesic : Error {
    using Error::Error;
};

struct PointNotOnGeodesic : Error {
    using Error::Error;
};

struct IdenticalGeodesics : Error {
    using Error::Error;
};

struct InvalidBound : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct BracketingFailed : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct NoIntersection : Error {
    using Error::Error;
};

struct DegenerateCenters : Error {
    using Error::Error;
};

struct RadiusInsideBound : Error {
    using Error::Error;
};

struct RadiusBelowBound : Error {
    using Error::Error;
};

struct EmptySampleRegion : Error {
    using Error::Error;
};

struct NoWitness : Error {
    using Error::Error;
};

struct InvalidPartitionFile : Error {
    using Error::Error;
};

}  // namespace hrl
