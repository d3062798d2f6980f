#include "schubert/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

Permutation::Permutation(int p) : img_(static_cast<std::size_t>(p)) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    Permutation out(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
            throw input_error("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    out.img_ = std::move(images);
    return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    Permutation out(degree());
    for (int i = 0; i < degree(); ++i) out.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(rhs(i))];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(degree());
    for (int i = 0; i < degree(); ++i) out.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = img_[static_cast<std::size_t>(j)];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

int Permutation::sign() const {
    Partition type = cycle_type();
    int parity = 0;
    for (int len : type.parts()) parity += len - 1;
    return parity % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

std::vector<Permutation> symmetric_group(int p) {
    std::vector<int> img(static_cast<std::size_t>(p));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace schubert
