#include "plethyx/tableaux.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace plethyx {

LRTableau::LRTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (int(rows_.size()) != shape_.outer.length())
        throw std::invalid_argument("LRTableau: row count does not match shape");
    for (int i = 0; i < shape_.outer.length(); ++i)
        if (int(rows_[size_t(i)].size()) != shape_.outer.part(i))
            throw std::invalid_argument("LRTableau: row length does not match shape");
}

Partition LRTableau::content() const {
    std::vector<int> counts;
    for (const auto& row : rows_)
        for (int v : row)
            if (v > 0) {
                if (int(counts.size()) < v) counts.resize(size_t(v), 0);
                ++counts[size_t(v) - 1];
            }
    return Partition(std::move(counts));
}

std::string LRTableau::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += '[';
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) s += ',';
            s += rows_[i][j] == 0 ? "." : std::to_string(rows_[i][j]);
        }
        s += ']';
    }
    return s + "]";
}

namespace {

/* Backtracking fill along the reverse reading word: row by row, each row
 * right-to-left. In that order the lattice condition is a running prefix
 * check, the row condition compares with the already-placed right neighbour,
 * and the column condition compares with the already-placed box above.
 */
struct LRFiller {
    SkewShape shape;
    Partition content;
    int nvalues;
    std::vector<std::vector<int>> rows;
    std::vector<int> remaining; // boxes of each value still to place
    std::vector<int> placed;    // running counts for the lattice check
    std::function<void(const std::vector<std::vector<int>>&)> emit;

    LRFiller(SkewShape sh, Partition ct)
        : shape(std::move(sh)), content(std::move(ct)), nvalues(content.length()) {
        rows.resize(size_t(shape.outer.length()));
        for (int i = 0; i < shape.outer.length(); ++i)
            rows[size_t(i)].assign(size_t(shape.outer.part(i)), 0);
        remaining.assign(size_t(nvalues), 0);
        for (int v = 0; v < nvalues; ++v) remaining[size_t(v)] = content.part(v);
        placed.assign(size_t(nvalues), 0);
    }

    void run() {
        if (shape.box_count() != content.size()) return;
        fill(0, shape.outer.part(0) - 1);
    }

    void fill(int row, int col) {
        // advance past inner boxes and exhausted rows
        while (row < shape.outer.length() && col < shape.inner.part(row)) {
            ++row;
            col = shape.outer.part(row) - 1;
        }
        if (row >= shape.outer.length()) {
            emit(rows);
            return;
        }
        int above = 0;
        if (row > 0 && col < shape.outer.part(row - 1))
            above = rows[size_t(row) - 1][size_t(col)]; // 0 when that box is inner
        int right = col + 1 < shape.outer.part(row) ? rows[size_t(row)][size_t(col) + 1] : nvalues;
        for (int v = above + 1; v <= right; ++v) {
            if (remaining[size_t(v) - 1] == 0) continue;
            // lattice: after placing v, #v must not exceed #(v-1)
            if (v > 1 && placed[size_t(v) - 1] + 1 > placed[size_t(v) - 2]) continue;
            --remaining[size_t(v) - 1];
            ++placed[size_t(v) - 1];
            rows[size_t(row)][size_t(col)] = v;
            if (col - 1 >= shape.inner.part(row))
                fill(row, col - 1);
            else
                fill(row + 1, shape.outer.part(row + 1) - 1);
            rows[size_t(row)][size_t(col)] = 0;
            ++remaining[size_t(v) - 1];
            --placed[size_t(v) - 1];
        }
    }
};

} // namespace

std::vector<LRTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& content) {
    std::vector<LRTableau> out;
    LRFiller filler(shape, content);
    filler.emit = [&](const std::vector<std::vector<int>>& rows) {
        out.emplace_back(shape, rows);
    };
    filler.run();
    return out;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!lambda.contains(mu)) return 0;
    long long count = 0;
    LRFiller filler(SkewShape(lambda, mu), nu);
    filler.emit = [&](const std::vector<std::vector<int>>&) { ++count; };
    filler.run();
    return count;
}

} // namespace plethyx
