#pragma once

#include <stdexcept>
#include <string>

namespace hypdisk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error {
    using Error::Error;
};
struct NotInDisk : Error {
    using Error::Error;
};
struct DegenerateTransform : Error {
    using Error::Error;
};
struct CoincidentIdealPoints : Error {
    using Error::Error;
};
struct CoincidentPoints : Error {
    using Error::Error;
};
struct IdenticalGeodesics : Error {
    using Error::Error;
};
struct NumericalInstability : Error {
    using Error::Error;
};
struct NotAHorodisk : Error {
    using Error::Error;
};
struct SameBasePoint : Error {
    using Error::Error;
};
struct InvalidAngles : Error {
    using Error::Error;
};
struct InvalidArc : Error {
    using Error::Error;
};
struct DegenerateTriangle : Error {
    using Error::Error;
};
struct InternalError : Error {
    using Error::Error;
};

} // namespace hypdisk
