#pragma once

#include <stdexcept>
#include <string>

namespace diskgeo {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define DISKGEO_DEFINE_ERROR(Name)                            \
    struct Name : Error {                                     \
        explicit Name(const std::string& msg) : Error(msg) {} \
    }

DISKGEO_DEFINE_ERROR(InvalidPoint);       // NaN or infinite coordinate
DISKGEO_DEFINE_ERROR(OutsideDisk);        // DiskPoint with |z| >= 1
DISKGEO_DEFINE_ERROR(OutsideHalfPlane);   // HalfPlanePoint with Im(z) <= 0
DISKGEO_DEFINE_ERROR(InvalidPolygon);     // not strictly convex counterclockwise
DISKGEO_DEFINE_ERROR(DegenerateLine);
DISKGEO_DEFINE_ERROR(ParallelLines);
DISKGEO_DEFINE_ERROR(CoincidentPoints);
DISKGEO_DEFINE_ERROR(DegenerateCrossRatio);
DISKGEO_DEFINE_ERROR(CollinearPoints);
DISKGEO_DEFINE_ERROR(PointOutsidePolygon);
DISKGEO_DEFINE_ERROR(InvalidOffset);      // chord offset outside [0, 1)
DISKGEO_DEFINE_ERROR(InvalidDilatation);  // dilatation K < 1
DISKGEO_DEFINE_ERROR(InvalidRadius);      // nonpositive metric radius
DISKGEO_DEFINE_ERROR(PoleEvaluation);
DISKGEO_DEFINE_ERROR(SingularMap);
DISKGEO_DEFINE_ERROR(DegenerateImage);
DISKGEO_DEFINE_ERROR(ConvergenceFailure);
DISKGEO_DEFINE_ERROR(InadmissibleConfiguration);
DISKGEO_DEFINE_ERROR(UnknownSuite);

#undef DISKGEO_DEFINE_ERROR

}  // namespace diskgeo
