#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace schubert {

// Integer partition: weakly decreasing positive parts, no trailing zeros
// stored. The empty partition is the multiplicative unit of everything built
// on top, so it is a first-class value here.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Text form "a,b,c" with strictly the decreasing parts; "" is the empty
    // partition. Throws input_error on anything else.
    static Partition parse(const std::string& text);
    std::string to_string() const;

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the length read as 0.
    int part(int i) const;

    Partition conjugate() const;
    bool fits_rectangle(int n_rows, int m_cols) const;

    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Number of standard Young tableaux of shape la (the Specht module dimension
// f^la). Exhaustive filling enumeration for weight <= 8, corner-removal
// recursion beyond; the overlap of the two routes is covered by tests.
long long standard_tableau_count(const Partition& la);

// Both routes individually, so they can be played against each other.
long long standard_tableau_count_enumerated(const Partition& la);
long long standard_tableau_count_recursive(const Partition& la);

// All partitions of weight k with at most n_rows parts, each part <= m_cols,
// in decreasing lexicographic order.
std::vector<Partition> partitions_in_rectangle(int k, int n_rows, int m_cols);

// All partitions of weight k (optionally with parts capped), decreasing lex.
std::vector<Partition> partitions_of(int k);
std::vector<Partition> partitions_of_max_part(int k, int max_part);

}  // namespace schubert
