#pragma once

#include <compare>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

// Permutation of {0,...,p-1} given by its image table. Composition follows
// function application: (a*b)(i) = a(b(i)).
class Permutation {
public:
    explicit Permutation(int p);  // identity
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    int sign() const;
    Partition cycle_type() const;
    bool is_identity() const;

    const std::vector<int>& images() const { return img_; }
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// All p! elements in lexicographic image order.
std::vector<Permutation> symmetric_group(int p);

}  // namespace schubert
