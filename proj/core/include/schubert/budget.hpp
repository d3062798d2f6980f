#pragma once

namespace schubert {

// Size guards for the brute-force computations. Every knob can be set from a
// config file through the CLI; library defaults match the documented desk scale.
struct Budget {
    int p_max = 7;                       // max tensor rank / symmetrizer weight
    long long tensor_entries = 262144;   // max dimension d^p of the tensor space
    int exterior_cells = 9;              // max m*n for the exterior algebra
    int series_slack = 2;                // extra truncation orders for gr computations
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

}  // namespace schubert
