#include "schubert/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void validate(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw input_error("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw input_error("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    validate(parts_);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("malformed partition '" + text + "'");
        long value = std::stol(piece);
        if (value < 1 || value > 1000000)
            throw input_error("partition part out of range in '" + text + "'");
        parts.push_back(static_cast<int>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const input_error&) {
        throw input_error("malformed partition '" + text + "'");
    }
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::fits_rectangle(int n_rows, int m_cols) const {
    return length() <= n_rows && (parts_.empty() || parts_[0] <= m_cols);
}

namespace {

// Shapes are compared as plain part vectors; fine as map keys.
long long count_recursive(std::vector<int> shape, std::map<std::vector<int>, long long>& memo) {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        bool corner = (i + 1 == shape.size()) || shape[i] > shape[i + 1];
        if (!corner) continue;
        std::vector<int> smaller = shape;
        --smaller[i];
        total += count_recursive(std::move(smaller), memo);
    }
    memo[shape] = total;
    return total;
}

}  // namespace

long long standard_tableau_count_enumerated(const Partition& la) {
    int p = la.weight();
    if (p == 0) return 1;
    // Boxes in reading order; box b lives at (row[b], col[b]).
    std::vector<int> row, col;
    for (int r = 0; r < la.length(); ++r)
        for (int c = 0; c < la.parts()[static_cast<std::size_t>(r)]; ++c) {
            row.push_back(r);
            col.push_back(c);
        }
    // entry[b] = value placed in box b; left/up neighbours must be smaller.
    std::vector<int> entry(static_cast<std::size_t>(p));
    std::iota(entry.begin(), entry.end(), 0);
    // index of the box at (r,c)
    std::vector<std::vector<int>> at(static_cast<std::size_t>(la.length()));
    {
        int b = 0;
        for (int r = 0; r < la.length(); ++r)
            for (int c = 0; c < la.parts()[static_cast<std::size_t>(r)]; ++c) at[static_cast<std::size_t>(r)].push_back(b++);
    }
    long long count = 0;
    do {
        bool ok = true;
        for (int b = 0; b < p && ok; ++b) {
            int r = row[static_cast<std::size_t>(b)], c = col[static_cast<std::size_t>(b)];
            if (c > 0 && entry[static_cast<std::size_t>(b)] < entry[static_cast<std::size_t>(at[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)])]) ok = false;
            if (r > 0 && entry[static_cast<std::size_t>(b)] < entry[static_cast<std::size_t>(at[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)])]) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(entry.begin(), entry.end()));
    return count;
}

long long standard_tableau_count_recursive(const Partition& la) {
    std::map<std::vector<int>, long long> memo;
    return count_recursive(la.parts(), memo);
}

long long standard_tableau_count(const Partition& la) {
    if (la.weight() <= 8) return standard_tableau_count_enumerated(la);
    return standard_tableau_count_recursive(la);
}

namespace {

void gen_rect(int k, int max_part, int rows_left, std::vector<int>& acc, std::vector<Partition>& out) {
    if (k == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0 || max_part == 0) return;
    int hi = std::min(max_part, k);
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long long>(p) * rows_left < k) break;  // cannot finish
        acc.push_back(p);
        gen_rect(k - p, p, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_rectangle(int k, int n_rows, int m_cols) {
    std::vector<Partition> out;
    if (k < 0) return out;
    std::vector<int> acc;
    gen_rect(k, m_cols, n_rows, acc, out);
    return out;
}

std::vector<Partition> partitions_of(int k) {
    return partitions_in_rectangle(k, k, k);
}

std::vector<Partition> partitions_of_max_part(int k, int max_part) {
    return partitions_in_rectangle(k, k, max_part);
}

}  // namespace schubert
