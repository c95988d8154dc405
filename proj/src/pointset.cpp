#include "khovlab/pointset.hpp"

#include <algorithm>
#include <cstdlib>

#include "khovlab/errors.hpp"

namespace khovlab {

bool lex_less(std::span<const Coord> a, std::span<const Coord> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void PointSetBuilder::insert(ExponentVector p) {
    if (static_cast<int>(p.size()) != dim_)
        throw dimension_error("point of length " + std::to_string(p.size()) +
                              " inserted into dimension-" +
                              std::to_string(dim_) + " set");
    for (Coord c : p)
        if (c >= kCoordLimit || c <= -kCoordLimit)
            throw guard_error("coordinate magnitude exceeds machine guard");
    seen_.insert(std::move(p));
}

PointSet PointSetBuilder::finish() {
    std::vector<ExponentVector> pts;
    pts.reserve(seen_.size());
    for (auto it = seen_.begin(); it != seen_.end();)
        pts.push_back(std::move(seen_.extract(it++).value()));
    std::sort(pts.begin(), pts.end());

    PointSet out(dim_);
    out.count_ = pts.size();
    out.data_.reserve(pts.size() * static_cast<std::size_t>(dim_));
    for (const auto &p : pts)
        out.data_.insert(out.data_.end(), p.begin(), p.end());
    return out;
}

PointSet PointSet::from_points(int dim, std::vector<ExponentVector> points) {
    PointSetBuilder b(dim);
    b.reserve(points.size());
    for (auto &p : points)
        b.insert(std::move(p));
    return b.finish();
}

PointSet PointSet::zero(int dim) {
    return from_points(dim, {ExponentVector(static_cast<std::size_t>(dim), 0)});
}

bool PointSet::contains(std::span<const Coord> p) const {
    if (static_cast<int>(p.size()) != dim_)
        return false;
    if (dim_ == 0)
        return count_ > 0;
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto q = point(mid);
        if (lex_less(q, p))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < count_ && std::ranges::equal(point(lo), p);
}

std::vector<ExponentVector> PointSet::to_vectors() const {
    std::vector<ExponentVector> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i)
        out.push_back(point_vector(i));
    return out;
}

PointSet set_difference(const PointSet &a, const PointSet &b) {
    if (a.dim() != b.dim())
        throw dimension_error("set_difference: dimension mismatch");
    PointSetBuilder out(a.dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b.contains(a.point(i)))
            out.insert(a.point_vector(i));
    return out.finish();
}

bool is_subset(const PointSet &a, const PointSet &b) {
    if (a.dim() != b.dim())
        throw dimension_error("is_subset: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b.contains(a.point(i)))
            return false;
    return true;
}

} // namespace khovlab
