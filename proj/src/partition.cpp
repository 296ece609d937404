#include "plethyx/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "plethyx/errors.hpp"

namespace plethyx {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transposed() const {
    if (parts_.empty()) return {};
    std::vector<int> t(size_t(parts_[0]), 0);
    for (int col = 0; col < parts_[0]; ++col)
        t[size_t(col)] = int(std::count_if(parts_.begin(), parts_.end(),
                                           [col](int p) { return p >= col + 1; }));
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition parse_partition(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw parse_error("unbalanced '[' in partition: " + std::string(text));
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    std::vector<int> parts;
    if (!body.empty()) {
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string_view tok = body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            int value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw parse_error("bad partition part '" + std::string(tok) + "' in: " + std::string(text));
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string(e.what()) + ": " + std::string(text));
    }
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("SkewShape: inner not contained in outer");
}

bool is_horizontal_strip(const SkewShape& shape) {
    for (int i = 0; i < shape.outer.length(); ++i)
        if (shape.inner.part(i) < shape.outer.part(i + 1)) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& shape) {
    return is_horizontal_strip(SkewShape(shape.outer.transposed(), shape.inner.transposed()));
}

namespace {

void enumerate_rec(int remaining, int max_part, int max_length, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_length == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, max_length - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part,
                                            std::optional<int> max_length) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, max_part.value_or(n), max_length.value_or(n), acc, out);
    return out;
}

} // namespace plethyx
