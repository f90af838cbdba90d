#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "beansub/bean.hpp"

namespace beansub {

/// Outcome of a brute-force scan. `worst_margin` is the extreme value of the scanned
/// quantity (its meaning depends on the scan). `witness` is the sample point where it
/// occurred (w on the lemma circle, zeta for admissibility, z for subordination) and
/// `witness_image` the value that was tested there.
struct GridReport {
    std::size_t grid_size = 0;  ///< coarse grid samples (refinement not counted)
    double worst_margin = NAN;
    Complex witness{NAN, NAN};
    Complex witness_image{NAN, NAN};
    double witness_angle = NAN;
    double witness_m = NAN;     ///< multiplier m for admissibility scans
    double witness_radius = NAN;  ///< circle radius for subordination scans
    bool pass = false;
    std::vector<std::string> notes;
};

}  // namespace beansub
