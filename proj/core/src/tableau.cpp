#include "schubert/tableau.hpp"

#include "schubert/errors.hpp"

namespace schubert {

CanonicalTableau canonical_tableau(const Partition& la) {
    if (la.weight() == 0) throw input_error("canonical tableau of the empty partition has no boxes");
    CanonicalTableau t;
    t.shape = la;
    int next = 1;
    for (int r = 0; r < la.length(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < la.parts()[static_cast<std::size_t>(r)]; ++c) row.push_back(next++);
        t.row_groups.push_back(std::move(row));
    }
    int cols = la.parts()[0];
    t.column_groups.assign(static_cast<std::size_t>(cols), {});
    for (const auto& row : t.row_groups)
        for (std::size_t c = 0; c < row.size(); ++c) t.column_groups[c].push_back(row[c]);
    return t;
}

}  // namespace schubert
