#pragma once

namespace beansub {

/// Named tolerances shared by the library and echoed in every report.
struct Tolerances {
    double membership = 1e-9;  ///< margin band treated as boundary
    double symmetry = 1e-12;   ///< conjugate-symmetry and unit-circle checks
    double extremal = 1e-6;    ///< argument tolerance of the 1-D extremal search
    double display = 1e-3;     ///< agreement with 3-5 digit displayed constants
};

}  // namespace beansub
