#ifndef KEPLER_PARTITION_HPP
#define KEPLER_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kepler {

// Weakly decreasing tuple of nonnegative integers.  Trailing zeros are
// trimmed, so (2,1,0) and (2,1) are the same partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    // Part at 1-based index j; zero beyond the length.
    int part(int j) const {
        return (j >= 1 && j <= length()) ? parts_[j - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    // True when parts_[i] <= other_[i] for all i (containment of diagrams).
    bool contained_in(const Partition& other) const;

    // Dominance order on partitions of equal weight.
    bool dominated_by(const Partition& other) const;

    // Conjugate (transposed) diagram.
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Graded lexicographic: weight first, then lex descending.
    bool operator<(const Partition& o) const;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// All partitions of weight k with at most max_len parts, lex descending
// ((k), (k-1,1), ...).  Deterministic truncation order for every series.
std::vector<Partition> partitions_of_weight(int k, int max_len);

// Graded lexicographic enumeration of all partitions with weight <= max_weight.
std::vector<Partition> partitions_up_to(int max_weight, int max_len);

// Number of distinct permutations of the parts vector padded to n slots
// (the size of the monomial orbit of the exponent vector).
long long monomial_orbit_size(const Partition& p, int n);

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace kepler

#endif
