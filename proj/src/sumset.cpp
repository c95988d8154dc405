#include "khovlab/sumset.hpp"

#include <stdexcept>

#include "khovlab/errors.hpp"

namespace khovlab {

namespace {

constexpr std::size_t kSetSizeGuard = 50'000'000;

void check_growth_guard(std::size_t size) {
    if (size > kSetSizeGuard)
        throw guard_error("sumset size exceeds guard");
}

/// Plain incremental step: every pairwise sum, hash-deduplicated.
PointSet add_sets_plain(const PointSet &a, const PointSet &b) {
    const int d = a.dim();
    PointSetBuilder out(d);
    out.reserve(a.size() + b.size());
    ExponentVector sum(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto pa = a.point(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto pb = b.point(j);
            for (int c = 0; c < d; ++c)
                sum[static_cast<std::size_t>(c)] =
                    pa[static_cast<std::size_t>(c)] +
                    pb[static_cast<std::size_t>(c)];
            out.insert(sum);
        }
        check_growth_guard(out.size());
    }
    return out.finish();
}

} // namespace

PointSet add_sets(const PointSet &a, const PointSet &b) {
    if (a.dim() != b.dim())
        throw dimension_error("add_sets: dimension mismatch");
    return add_sets_plain(a, b);
}

bool is_downset(const PointSet &a) {
    const int d = a.dim();
    ExponentVector below;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        for (int j = 0; j < d; ++j)
            if (p[static_cast<std::size_t>(j)] < 0)
                throw std::domain_error("is_downset: negative coordinate");
        // Closure under single decrements implies the full down-set property.
        below.assign(p.begin(), p.end());
        for (int j = 0; j < d; ++j) {
            if (p[static_cast<std::size_t>(j)] == 0)
                continue;
            --below[static_cast<std::size_t>(j)];
            if (!a.contains(below))
                return false;
            ++below[static_cast<std::size_t>(j)];
        }
    }
    return true;
}

PointSet maximal_elements(const PointSet &downset) {
    const int d = downset.dim();
    PointSetBuilder out(d);
    ExponentVector above;
    for (std::size_t i = 0; i < downset.size(); ++i) {
        auto p = downset.point(i);
        above.assign(p.begin(), p.end());
        bool maximal = true;
        for (int j = 0; j < d && maximal; ++j) {
            ++above[static_cast<std::size_t>(j)];
            if (downset.contains(above))
                maximal = false;
            --above[static_cast<std::size_t>(j)];
        }
        if (maximal)
            out.insert(downset.point_vector(i));
    }
    return out.finish();
}

PointSet down_closure(const PointSet &generators) {
    const int d = generators.dim();
    std::unordered_set<ExponentVector, VectorHash> seen;
    std::vector<ExponentVector> stack;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        auto g = generators.point_vector(i);
        for (Coord c : g)
            if (c < 0)
                throw std::domain_error("down_closure: negative coordinate");
        if (seen.insert(g).second)
            stack.push_back(std::move(g));
    }
    while (!stack.empty()) {
        ExponentVector p = std::move(stack.back());
        stack.pop_back();
        for (int j = 0; j < d; ++j) {
            if (p[static_cast<std::size_t>(j)] == 0)
                continue;
            ExponentVector q = p;
            --q[static_cast<std::size_t>(j)];
            if (seen.insert(q).second)
                stack.push_back(std::move(q));
        }
        check_growth_guard(seen.size());
    }
    PointSetBuilder out(d);
    out.reserve(seen.size());
    for (auto it = seen.begin(); it != seen.end();)
        out.insert(std::move(seen.extract(it++).value()));
    return out.finish();
}

PointSet kfold(const PointSet &a, std::int64_t k, SumsetPath path) {
    if (k < 0)
        throw std::domain_error("kfold: k must be >= 0");
    PointSet acc = PointSet::zero(a.dim());
    if (k == 0)
        return acc;

    if (path == SumsetPath::downset_pruned) {
        // For down-sets D and A, D + A = down_closure(Max(D) + Max(A)):
        // every d + a is dominated by d' + a' with d', a' maximal, and the
        // sum of down-sets is itself a down-set.
        if (!is_downset(a))
            throw std::domain_error("kfold: pruned path requires a down-set");
        PointSet acc_set = a;
        PointSet max_a = maximal_elements(a);
        for (std::int64_t step = 2; step <= k; ++step)
            acc_set = down_closure(add_sets(maximal_elements(acc_set), max_a));
        return acc_set;
    }

    for (std::int64_t step = 1; step <= k; ++step)
        acc = add_sets(acc, a);
    return acc;
}

GrowthSequence growth_sequence(const PointSet &a, std::int64_t kmax) {
    if (kmax < 0)
        throw std::domain_error("growth_sequence: kmax must be >= 0");
    GrowthSequence seq;
    seq.values.reserve(static_cast<std::size_t>(kmax) + 1);
    PointSet acc = PointSet::zero(a.dim());
    seq.values.push_back(static_cast<std::int64_t>(acc.size()));
    for (std::int64_t k = 1; k <= kmax; ++k) {
        acc = add_sets(acc, a);
        seq.values.push_back(static_cast<std::int64_t>(acc.size()));
    }
    return seq;
}

} // namespace khovlab
