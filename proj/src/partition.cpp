#include "sixj/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sixj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "0") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty part in partition");
        long long v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("partition parts must be unsigned integers");
            v = v * 10 + (c - '0');
            if (v > 1'000'000) throw std::invalid_argument("partition part too large");
        }
        parts.push_back(static_cast<int>(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int c = 1; c <= parts_[0]; ++c) {
            int count = 0;
            for (int p : parts_)
                if (p >= c) ++count;
            cols[c - 1] = count;
        }
    }
    return Partition(std::move(cols));
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.parts_ <=> b.parts_;
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.part(r) > outer.part(r)) return false;
    return true;
}

std::vector<Box> addable_boxes(const Partition& p) {
    std::vector<Box> boxes;
    for (int r = 1; r <= p.length() + 1; ++r) {
        int new_len = p.part(r) + 1;
        if (r == 1 || new_len <= p.part(r - 1)) boxes.push_back(Box{r, new_len});
    }
    return boxes;
}

Partition with_box_added(const Partition& p, Box b) {
    std::vector<int> parts = p.parts();
    if (b.row == p.length() + 1) {
        parts.push_back(1);
    } else {
        parts.at(b.row - 1) += 1;
    }
    if (parts.at(b.row - 1) != b.col)
        throw std::invalid_argument("box is not addable to partition");
    return Partition(std::move(parts));
}

std::vector<Partition> pieri_expand(const Partition& p) {
    std::vector<Partition> out;
    for (Box b : addable_boxes(p)) out.push_back(with_box_added(p, b));
    return out;
}

TwoCellSkew analyze_two_cell_skew(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu))
        throw DomainError(ErrorCode::NotContained,
                          "'" + lambda.str() + "' is not contained in '" + mu.str() + "'");
    std::vector<Box> cells;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = lambda.part(r) + 1; c <= mu.part(r); ++c) cells.push_back(Box{r, c});
    if (cells.size() != 2)
        throw DomainError(ErrorCode::WrongDegree,
                          "'" + mu.str() + "' \\ '" + lambda.str() + "' has " +
                              std::to_string(cells.size()) + " cells, need exactly 2");
    Box a = cells[0], b = cells[1];
    if (a.row == b.row || a.col == b.col)
        throw DomainError(ErrorCode::MultiplicityOne,
                          "the two cells of '" + mu.str() + "' \\ '" + lambda.str() +
                              "' lie in a single " + (a.row == b.row ? "row" : "column") +
                              "; only one intermediate partition exists");
    // Row-major with distinct rows and columns: the first cell is in the upper
    // row and the longer row, so it has the larger content.
    TwoCellSkew result{a, b, axial_distance(a, b)};
    return result;
}

std::pair<Partition, Partition> intermediate_partitions(const Partition& lambda,
                                                        const Partition& mu) {
    TwoCellSkew skew = analyze_two_cell_skew(lambda, mu);
    return {with_box_added(lambda, skew.high), with_box_added(lambda, skew.low)};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        partitions_rec(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() < b.parts();
    });
    return out;
}

SkewShape::SkewShape(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
    if (!contains(inner_, outer_))
        throw DomainError(ErrorCode::NotContained,
                          "'" + inner_.str() + "' is not contained in '" + outer_.str() + "'");
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) cells_.push_back(Box{r, c});
}

std::optional<int> SkewShape::cell_index(Box b) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), b);
    if (it != cells_.end() && *it == b) return static_cast<int>(it - cells_.begin());
    return std::nullopt;
}

std::string SkewShape::str() const {
    return "'" + outer_.str() + "' \\ '" + inner_.str() + "'";
}

} // namespace sixj
