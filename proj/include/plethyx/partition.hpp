#ifndef PLETHYX_PARTITION_HPP
#define PLETHYX_PARTITION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plethyx {

// Exponent vectors lambda in N^ell and weak compositions. Entries are not
// required to be monotone; negative entries are rejected where they matter.
using IntVector = std::vector<int>;

/* A partition: weakly decreasing positive parts. The empty partition is a
 * first-class value, printed "[]". Immutable after construction; indexing
 * reads beyond the length return 0, which keeps the zero-padding conventions
 * of the closed formulas out of caller code.
 */
class Partition {
public:
    Partition() = default;
    // accepts trailing zeros (stripped); throws std::invalid_argument unless
    // weakly decreasing and nonnegative
    explicit Partition(std::vector<int> parts);

    int part(int i) const { return i >= 0 && i < int(parts_.size()) ? parts_[size_t(i)] : 0; }
    int length() const { return int(parts_.size()); }
    int size() const { return size_; } // number of boxes
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    Partition transposed() const;
    bool contains(const Partition& inner) const;

    std::string to_string() const; // "3,2,1"; "[]" for the empty partition

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// "3,2,1", "[3,2,1]" or "[]"; throws parse_error on malformed input
Partition parse_partition(std::string_view text);

// canonical order used everywhere terms are enumerated or printed:
// larger degree first, ties broken by lexicographically larger parts first
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/* A skew shape outer/inner with inner contained in outer (checked). */
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    int box_count() const { return outer.size() - inner.size(); }
    bool operator==(const SkewShape&) const = default;
};

// no two boxes in the same column: outer_i >= inner_i >= outer_{i+1}
bool is_horizontal_strip(const SkewShape& shape);
// no two boxes in the same row: the transposed shape is a horizontal strip
bool is_vertical_strip(const SkewShape& shape);

// All partitions of n within the optional bounds, in decreasing
// lexicographic order.
std::vector<Partition> enumerate_partitions(int n,
                                            std::optional<int> max_part = std::nullopt,
                                            std::optional<int> max_length = std::nullopt);

} // namespace plethyx

#endif
