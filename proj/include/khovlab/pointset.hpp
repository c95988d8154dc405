#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

namespace khovlab {

using Coord = std::int64_t;

/// One lattice point; length is the ambient dimension (0 permitted).
using ExponentVector = std::vector<Coord>;

/// Exponents stay far below this at desk scale; coordinates are checked
/// against it so machine-width sums can never overflow silently.
inline constexpr Coord kCoordLimit = Coord(1) << 48;

struct VectorHash {
    std::size_t operator()(std::span<const Coord> v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Coord c : v) {
            h ^= static_cast<std::size_t>(c);
            h *= 1099511628211ULL;
        }
        return h;
    }
    std::size_t operator()(const ExponentVector &v) const noexcept {
        return (*this)(std::span<const Coord>(v));
    }
};

/// A deduplicated set of equal-length lattice points in canonical
/// (lexicographic) order. Construction order never leaks into iteration or
/// serialization order.
class PointSet {
  public:
    PointSet() = default;
    explicit PointSet(int dim) : dim_(dim) {}

    /// Canonicalizes: hash-dedup, then lexicographic sort.
    static PointSet from_points(int dim, std::vector<ExponentVector> points);

    /// The singleton {0} in the given dimension.
    static PointSet zero(int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    std::span<const Coord> point(std::size_t i) const {
        return {data_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }
    ExponentVector point_vector(std::size_t i) const {
        auto p = point(i);
        return ExponentVector(p.begin(), p.end());
    }

    bool contains(std::span<const Coord> p) const;
    bool contains(const ExponentVector &p) const {
        return contains(std::span<const Coord>(p));
    }

    bool operator==(const PointSet &other) const {
        return dim_ == other.dim_ && count_ == other.count_ &&
               data_ == other.data_;
    }

    std::vector<ExponentVector> to_vectors() const;

  private:
    friend class PointSetBuilder;

    int dim_ = 0;
    std::size_t count_ = 0;
    std::vector<Coord> data_; // row-major, count_ rows of dim_ coords
};

/// Accumulates points with hash-based dedup; finish() emits the canonical set.
class PointSetBuilder {
  public:
    explicit PointSetBuilder(int dim) : dim_(dim) {}

    void reserve(std::size_t n) { seen_.reserve(n); }

    /// Ignores duplicates. Throws guard_error when a coordinate exceeds
    /// kCoordLimit, dimension_error on length mismatch.
    void insert(ExponentVector p);

    std::size_t size() const { return seen_.size(); }

    PointSet finish();

  private:
    int dim_;
    std::unordered_set<ExponentVector, VectorHash> seen_;
};

/// a \ b; dimensions must match.
PointSet set_difference(const PointSet &a, const PointSet &b);

/// true iff every point of a is in b.
bool is_subset(const PointSet &a, const PointSet &b);

bool lex_less(std::span<const Coord> a, std::span<const Coord> b);

} // namespace khovlab
