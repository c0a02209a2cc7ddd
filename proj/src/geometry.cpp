#include "dhl/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhl {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("point must have at least one coordinate");
    }
}

std::strong_ordering lex_compare(const RationalPoint& a, const RationalPoint& b) {
    require_same_dim(a.dim(), b.dim(), "lex_compare");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

AxisBox::AxisBox(std::size_t dim_only) : dim_(dim_only), empty_(true) {}

AxisBox AxisBox::empty(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("box dimension must be at least 1");
    return AxisBox(dim);
}

AxisBox::AxisBox(std::vector<Interval> axes) : dim_(axes.size()), axes_(std::move(axes)) {
    if (dim_ == 0) throw std::invalid_argument("box dimension must be at least 1");
    for (const Interval& iv : axes_) {
        if (iv.lo > iv.hi) {
            empty_ = true;
            axes_.clear();
            break;
        }
    }
}

const Interval& AxisBox::axis(std::size_t i) const {
    if (empty_) throw std::logic_error("empty box has no interval data");
    return axes_[i];
}

std::span<const Interval> AxisBox::axes() const {
    return axes_;
}

bool AxisBox::contains(const RationalPoint& p) const {
    require_same_dim(dim_, p.dim(), "box_contains");
    if (empty_) return false;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (p[i] < axes_[i].lo || p[i] > axes_[i].hi) return false;
    }
    return true;
}

PointSet::PointSet(std::vector<RationalPoint> points, bool multiset)
    : multiset_(multiset), points_(std::move(points)) {
    for (const RationalPoint& p : points_) {
        require_same_dim(points_.front().dim(), p.dim(), "PointSet");
    }
    std::sort(points_.begin(), points_.end(), lex_less);
    if (multiset_) {
        distinct_ = points_;
        distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
    } else {
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }
}

bool PointSet::contains(const RationalPoint& p) const {
    return std::binary_search(distinct().begin(), distinct().end(), p, lex_less);
}

bool box_contains(const AxisBox& box, const RationalPoint& p) {
    return box.contains(p);
}

AxisBox box_intersection(std::span<const AxisBox> boxes) {
    if (boxes.empty()) {
        throw std::invalid_argument("intersection of an empty family is undefined");
    }
    const std::size_t d = boxes.front().dim();
    for (const AxisBox& b : boxes) require_same_dim(d, b.dim(), "box_intersection");
    for (const AxisBox& b : boxes) {
        if (b.is_empty()) return AxisBox::empty(d);
    }
    std::vector<Interval> axes(boxes.front().axes().begin(), boxes.front().axes().end());
    for (std::size_t k = 1; k < boxes.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            const Interval& iv = boxes[k].axis(i);
            if (iv.lo > axes[i].lo) axes[i].lo = iv.lo;
            if (iv.hi < axes[i].hi) axes[i].hi = iv.hi;
        }
    }
    return AxisBox(std::move(axes));  // normalizes to Empty when some axis inverted
}

AxisBox bbox(std::span<const RationalPoint> points) {
    if (points.empty()) {
        throw std::invalid_argument("bbox of an empty point set is undefined");
    }
    const std::size_t d = points.front().dim();
    std::vector<Interval> axes(d);
    for (std::size_t i = 0; i < d; ++i) {
        axes[i] = Interval{points.front()[i], points.front()[i]};
    }
    for (const RationalPoint& p : points) {
        require_same_dim(d, p.dim(), "bbox");
        for (std::size_t i = 0; i < d; ++i) {
            if (p[i] < axes[i].lo) axes[i].lo = p[i];
            if (p[i] > axes[i].hi) axes[i].hi = p[i];
        }
    }
    return AxisBox(std::move(axes));
}

AxisBox bbox(const PointSet& points) {
    return bbox(std::span<const RationalPoint>(points.points()));
}

std::vector<std::size_t> achiever_subfamily(std::span<const AxisBox> boxes) {
    if (boxes.empty()) {
        throw std::invalid_argument("achiever_subfamily of an empty family is undefined");
    }
    const std::size_t d = boxes.front().dim();
    for (const AxisBox& b : boxes) require_same_dim(d, b.dim(), "achiever_subfamily");
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k].is_empty()) return {k};
    }

    std::vector<std::size_t> picks;
    picks.reserve(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t left = 0;
        for (std::size_t k = 1; k < boxes.size(); ++k) {
            if (boxes[k].axis(i).lo > boxes[left].axis(i).lo) left = k;
        }
        picks.push_back(left);
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t right = 0;
        for (std::size_t k = 1; k < boxes.size(); ++k) {
            if (boxes[k].axis(i).hi < boxes[right].axis(i).hi) right = k;
        }
        picks.push_back(right);
    }

    std::vector<std::size_t> out;
    for (std::size_t k : picks) {
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    return out;
}

}  // namespace dhl
