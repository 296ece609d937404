#ifndef PLETHYX_TABLEAUX_HPP
#define PLETHYX_TABLEAUX_HPP

#include <string>
#include <vector>

#include "plethyx/partition.hpp"

namespace plethyx {

/* A Littlewood-Richardson filling of a skew shape: semistandard (rows weakly
 * increase, columns strictly increase) and the reverse reading word -- rows
 * read right-to-left, top row first -- is a lattice word. Inner boxes hold 0.
 */
class LRTableau {
public:
    LRTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    // 0-based coordinates; 0 for inner boxes
    int entry(int row, int col) const { return rows_[size_t(row)][size_t(col)]; }
    Partition content() const;

    std::string to_string() const; // "[[.,1],[2]]", "." marking inner boxes

    bool operator==(const LRTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

// All LR tableaux of the given shape and content, in the deterministic
// backtracking order (boxes filled along the reverse reading word, smaller
// entries tried first). Empty when none exist.
std::vector<LRTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& content);

// c^lambda_{mu,nu}; 0 whenever mu is not contained in lambda or the sizes
// do not add up.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace plethyx

#endif
