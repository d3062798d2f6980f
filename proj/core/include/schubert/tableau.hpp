#pragma once

#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

// The canonical numbering of the diagram of a partition: row 1 gets 1..la_1,
// row 2 continues, and so on. Rows and columns are exposed as the entry sets
// they carry, which is all the symmetrizer construction needs.
struct CanonicalTableau {
    Partition shape;
    std::vector<std::vector<int>> row_groups;     // entries 1..p, one vector per row
    std::vector<std::vector<int>> column_groups;  // one vector per column
};

// Throws input_error on the empty partition (no boxes to number).
CanonicalTableau canonical_tableau(const Partition& la);

}  // namespace schubert
