#pragma once

// Diagonal walks: moving one unit-cell diagonal at a time in any of the 2^p
// directions. Each move flips the parity of every coordinate, so the parity
// index of a point is preserved and the lattice splits into 2^{p-1} orbits.

#include <billiards/billiards.hpp>
#include <billiards/checked.hpp>
#include <billiards/grid.hpp>

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace billiards {

struct OrbitSummary {
    OrbitIndex index;
    Int size = 0;
    Point sample;
};

inline bool same_orbit(const GridSpec& grid, const Point& a, const Point& b)
{
    validate(grid, a);
    validate(grid, b);
    return index_of(a) == index_of(b);
}

namespace detail {

// Number of integers in [0, m] with the given parity.
constexpr Int parity_count(Int m, Int parity) noexcept
{
    const Int n = m + 1;
    const Int odd_extra = n % 2;
    return parity == 0 ? (n + odd_extra) / 2 : (n - odd_extra) / 2;
}

} // namespace detail

/// Closed-form orbit size: points with x_1 even and x_i ≡ δ_{i-1}, plus points
/// with x_1 odd and x_i ≡ δ_{i-1} + 1 (mod 2).
inline Int orbit_size(const GridSpec& grid, const OrbitIndex& index)
{
    if (index.arity() + 1 != grid.arity()) {
        throw std::invalid_argument("orbit index must have arity p - 1");
    }
    Int even_first = 1;
    Int odd_first = 1;
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        const Int delta = i == 0 ? 0 : index.bits[i - 1];
        even_first = checked_mul(even_first, detail::parity_count(grid.dim(i), delta % 2), "orbit size");
        odd_first = checked_mul(odd_first, detail::parity_count(grid.dim(i), (delta + 1) % 2), "orbit size");
    }
    return checked_add(even_first, odd_first, "orbit size");
}

/// One summary per index value, in lexicographic index order.
inline std::vector<OrbitSummary> orbit_partition(const GridSpec& grid)
{
    const std::size_t p = grid.arity();
    std::vector<OrbitSummary> out;
    for (const auto& mask : DirectionMask::all(p - 1)) {
        OrbitIndex index{mask.signs};
        Point sample{std::vector<Int>(p, 0)};
        for (std::size_t j = 1; j < p; ++j) {
            sample.coords[j] = index.bits[j - 1];
        }
        const Int size = orbit_size(grid, index);
        out.push_back(OrbitSummary{std::move(index), size, std::move(sample)});
    }
    return out;
}

namespace detail {

class PointCodec {
public:
    explicit PointCodec(const GridSpec& grid) : dims_(grid.dims()), strides_(grid.arity())
    {
        Int stride = 1;
        for (std::size_t i = dims_.size(); i-- > 0;) {
            strides_[i] = stride;
            stride = checked_mul(stride, dims_[i] + 1, "point count");
        }
        count_ = stride;
    }

    Int count() const noexcept { return count_; }

    Int encode(const Point& x) const noexcept
    {
        Int id = 0;
        for (std::size_t i = 0; i < strides_.size(); ++i) {
            id += x[i] * strides_[i];
        }
        return id;
    }

    Point decode(Int id) const
    {
        Point x{std::vector<Int>(strides_.size())};
        decode_into(id, x);
        return x;
    }

    void decode_into(Int id, Point& x) const noexcept
    {
        for (std::size_t i = 0; i < strides_.size(); ++i) {
            x.coords[i] = id / strides_[i];
            id %= strides_[i];
        }
    }

    // Id of the diagonal neighbour of `x` in direction `mask`, reflecting at walls.
    Int neighbour(const Point& x, Int id, std::size_t mask_bits) const noexcept
    {
        const std::size_t p = strides_.size();
        for (std::size_t i = 0; i < p; ++i) {
            const bool backward = (mask_bits >> (p - 1 - i)) & 1U;
            const Int m = dims_[i];
            Int delta;
            if (backward) {
                delta = x[i] == 0 ? 1 : -1;
            } else {
                delta = x[i] == m ? -1 : 1;
            }
            id += delta * strides_[i];
        }
        return id;
    }

private:
    std::vector<Int> dims_;
    std::vector<Int> strides_;
    Int count_ = 1;
};

} // namespace detail

/// Connected components of the lattice under diagonal moves, found by breadth-first search.
struct Connectivity {
    std::vector<std::int32_t> component; ///< per point, indexed by mixed-radix id (first coordinate most significant)
    std::int32_t component_count = 0;
};

inline Connectivity diagonal_connectivity(const GridSpec& grid, Int max_points = default_state_budget)
{
    const detail::PointCodec codec(grid);
    if (codec.count() > max_points) {
        throw budget_exceeded("grid has " + std::to_string(codec.count()) + " points, budget is "
                              + std::to_string(max_points));
    }
    const std::size_t moves = std::size_t{1} << grid.arity();
    Connectivity out;
    out.component.assign(static_cast<std::size_t>(codec.count()), -1);
    std::vector<Int> queue;
    queue.reserve(static_cast<std::size_t>(codec.count()));
    Point x{std::vector<Int>(grid.arity())};
    for (Int seed = 0; seed < codec.count(); ++seed) {
        if (out.component[static_cast<std::size_t>(seed)] >= 0) {
            continue;
        }
        const std::int32_t label = out.component_count++;
        queue.clear();
        queue.push_back(seed);
        out.component[static_cast<std::size_t>(seed)] = label;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Int id = queue[head];
            codec.decode_into(id, x);
            for (std::size_t mask = 0; mask < moves; ++mask) {
                const Int next = codec.neighbour(x, id, mask);
                auto& slot = out.component[static_cast<std::size_t>(next)];
                if (slot < 0) {
                    slot = label;
                    queue.push_back(next);
                }
            }
        }
    }
    return out;
}

/// First shortest sequence of diagonal moves taking `from` to `to`, or nullopt
/// when `to` is unreachable. Moves are explored in lexicographic mask order.
inline std::optional<std::vector<DirectionMask>> find_walk(const GridSpec& grid, const Point& from, const Point& to,
                                                           Int max_points = default_state_budget)
{
    validate(grid, from);
    validate(grid, to);
    const detail::PointCodec codec(grid);
    if (codec.count() > max_points) {
        throw budget_exceeded("grid has " + std::to_string(codec.count()) + " points, budget is "
                              + std::to_string(max_points));
    }
    const std::size_t p = grid.arity();
    const std::size_t moves = std::size_t{1} << p;
    const Int source = codec.encode(from);
    const Int target = codec.encode(to);

    // parent[id] = (previous id, mask used), -1 when unvisited.
    std::vector<Int> parent(static_cast<std::size_t>(codec.count()), -1);
    std::vector<std::uint32_t> via(static_cast<std::size_t>(codec.count()), 0);
    std::deque<Int> queue{source};
    parent[static_cast<std::size_t>(source)] = source;
    while (!queue.empty() && parent[static_cast<std::size_t>(target)] < 0) {
        const Int id = queue.front();
        queue.pop_front();
        const Point x = codec.decode(id);
        for (std::size_t mask = 0; mask < moves; ++mask) {
            const Int next = codec.neighbour(x, id, mask);
            if (parent[static_cast<std::size_t>(next)] < 0) {
                parent[static_cast<std::size_t>(next)] = id;
                via[static_cast<std::size_t>(next)] = static_cast<std::uint32_t>(mask);
                queue.push_back(next);
            }
        }
    }
    if (parent[static_cast<std::size_t>(target)] < 0) {
        return std::nullopt;
    }

    const auto all_masks = DirectionMask::all(p);
    std::vector<DirectionMask> walk;
    for (Int id = target; id != source; id = parent[static_cast<std::size_t>(id)]) {
        walk.push_back(all_masks[via[static_cast<std::size_t>(id)]]);
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

/// Apply a walk move by move; used to check find_walk output.
inline Point replay_walk(const GridSpec& grid, Point start, const std::vector<DirectionMask>& walk)
{
    for (const auto& mask : walk) {
        start = diagonal_move(grid, start, mask);
    }
    return start;
}

} // namespace billiards
