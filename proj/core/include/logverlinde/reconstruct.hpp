#pragma once

#include <string>
#include <vector>

#include "logverlinde/fusion.hpp"
#include "logverlinde/labels.hpp"

namespace verlinde {

// Rebuilds the simple-projective tensor ring from three inputs only:
//   (i)  the socle data of the projective covers (their composition factors,
//        and the fact that R^eps_i covers U^eps_i, so twisting by the order-2
//        simple current sends R^eps_i to R^{-eps}_i; a single socle seed
//        resolves the remaining cover-orientation choice),
//   (ii) the order-2 involution generated by the simple current,
//   (iii) the complete table of logarithmic Hopf link invariants.
// The derived table is compared against the closure oracle.
struct ReconstructionResult {
    FusionTable table;
    bool generator_rows_unique = false;  // each generator product had a unique realization
    bool matches_closure = false;
    bool coordinates_consistent = false;  // every product row re-checks against the Hopf data
    std::string detail;
};

// flipped_seed = true resolves the one socle-orientation choice the other way;
// the result is then the cover-swap image of the true ring, demonstrating that
// the socle input is what pins the orientation.
ReconstructionResult reconstruct_tensor_ring(int p, bool flipped_seed = false);

}  // namespace verlinde
