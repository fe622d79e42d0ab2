#pragma once

// Grids, lattice points and phase states.
//
// Each coordinate of a billiard lives on a phase circle of length 2m: residue u
// encodes both the position and the direction of travel. The tent map
// x = m - |m - u| projects the circle onto the segment [0, m]. A unit step of
// the billiard adds 1 to every residue; reflections at the walls fall out of
// the projection.

#include <billiards/checked.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace billiards {

/// One coordinate's phase circle Z_{2m} with the tent projection onto [0, m].
struct PhaseCircle {
    Int height = 1;

    constexpr Int length() const noexcept { return 2 * height; }
    constexpr Int project(Int u) const noexcept { return height - (u > height ? u - height : height - u); }
    constexpr Int step(Int u) const noexcept { return u + 1 == length() ? 0 : u + 1; }
    constexpr Int step_back(Int u) const noexcept { return u == 0 ? length() - 1 : u - 1; }
    constexpr Int reverse(Int u) const noexcept { return u == 0 ? 0 : length() - u; }
    /// Ascending branch gives u = x, descending gives u = 2m - x (mod 2m).
    constexpr Int lift(Int x, bool backward) const noexcept { return backward ? reverse(x) : x; }
    constexpr bool is_wall(Int u) const noexcept { return u == 0 || u == height; }
};

/// Dimensions m_1..m_p of a grid, p ≥ 2, every m_i ≥ 1.
class GridSpec {
public:
    GridSpec(std::initializer_list<Int> dims) : GridSpec(std::vector<Int>(dims)) {}

    explicit GridSpec(std::vector<Int> dims) : dims_(std::move(dims))
    {
        if (dims_.size() < 2) {
            throw std::invalid_argument("grid needs at least 2 dimensions, got " + std::to_string(dims_.size()));
        }
        Int l = 1;
        for (Int m : dims_) {
            if (m < 1) {
                throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(m));
            }
            l = checked_lcm(l, m);
            checked_mul(2, m, "phase circle length");
        }
        period_ = checked_mul(2, l, "step length");
        lcm_ = l;
    }

    std::size_t arity() const noexcept { return dims_.size(); }
    const std::vector<Int>& dims() const noexcept { return dims_; }
    Int dim(std::size_t i) const { return dims_.at(i); }
    PhaseCircle circle(std::size_t i) const { return PhaseCircle{dims_.at(i)}; }
    Int lcm() const noexcept { return lcm_; }
    /// 2·lcm(dims): the length of every orbit of the unit step.
    Int period() const noexcept { return period_; }

    /// Number of phase states, ∏ 2m_i.
    Int state_count() const
    {
        Int n = 1;
        for (Int m : dims_) {
            n = checked_mul(n, 2 * m, "state count");
        }
        return n;
    }

    /// Number of lattice points, ∏ (m_i + 1).
    Int point_count() const
    {
        Int n = 1;
        for (Int m : dims_) {
            n = checked_mul(n, m + 1, "point count");
        }
        return n;
    }

    friend bool operator==(const GridSpec& a, const GridSpec& b) noexcept { return a.dims_ == b.dims_; }

private:
    std::vector<Int> dims_;
    Int lcm_ = 1;
    Int period_ = 2;
};

struct Point {
    std::vector<Int> coords;

    std::size_t arity() const noexcept { return coords.size(); }
    Int operator[](std::size_t i) const { return coords[i]; }
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct PhaseState {
    std::vector<Int> residues;

    std::size_t arity() const noexcept { return residues.size(); }
    Int operator[](std::size_t i) const { return residues[i]; }
    friend auto operator<=>(const PhaseState&, const PhaseState&) = default;
};

/// Per-coordinate direction: 0 moves forward along the phase circle, 1 backward.
struct DirectionMask {
    std::vector<std::uint8_t> signs;

    static DirectionMask forward(std::size_t p) { return {std::vector<std::uint8_t>(p, 0)}; }
    static DirectionMask backward(std::size_t p) { return {std::vector<std::uint8_t>(p, 1)}; }

    /// All 2^p masks in lexicographic order, first coordinate most significant.
    static std::vector<DirectionMask> all(std::size_t p)
    {
        std::vector<DirectionMask> out;
        out.reserve(std::size_t{1} << p);
        for (std::size_t bits = 0; bits < (std::size_t{1} << p); ++bits) {
            DirectionMask mask{std::vector<std::uint8_t>(p)};
            for (std::size_t i = 0; i < p; ++i) {
                mask.signs[i] = static_cast<std::uint8_t>((bits >> (p - 1 - i)) & 1U);
            }
            out.push_back(std::move(mask));
        }
        return out;
    }

    std::size_t arity() const noexcept { return signs.size(); }
    friend auto operator<=>(const DirectionMask&, const DirectionMask&) = default;
};

/// Parity vector ([x_1+x_2]_2, ..., [x_1+x_p]_2).
struct OrbitIndex {
    std::vector<std::uint8_t> bits;

    std::size_t arity() const noexcept { return bits.size(); }
    friend auto operator<=>(const OrbitIndex&, const OrbitIndex&) = default;
};

namespace detail {

inline void require_arity(const GridSpec& grid, std::size_t n, const char* what)
{
    if (n != grid.arity()) {
        throw std::invalid_argument(std::string(what) + " has arity " + std::to_string(n) + ", grid has "
                                    + std::to_string(grid.arity()));
    }
}

} // namespace detail

inline void validate(const GridSpec& grid, const Point& point)
{
    detail::require_arity(grid, point.arity(), "point");
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        if (point[i] < 0 || point[i] > grid.dim(i)) {
            throw std::invalid_argument("point coordinate " + std::to_string(i) + " = " + std::to_string(point[i])
                                        + " outside [0, " + std::to_string(grid.dim(i)) + "]");
        }
    }
}

inline void validate(const GridSpec& grid, const PhaseState& state)
{
    detail::require_arity(grid, state.arity(), "phase state");
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        if (state[i] < 0 || state[i] >= grid.circle(i).length()) {
            throw std::invalid_argument("phase residue " + std::to_string(i) + " = " + std::to_string(state[i])
                                        + " outside [0, " + std::to_string(grid.circle(i).length()) + ")");
        }
    }
}

inline void validate(const GridSpec& grid, const DirectionMask& mask)
{
    detail::require_arity(grid, mask.arity(), "direction mask");
    for (auto s : mask.signs) {
        if (s > 1) {
            throw std::invalid_argument("direction mask entries must be 0 or 1");
        }
    }
}

/// Build a phase state from arbitrary integers, reducing each modulo 2m_i.
inline PhaseState make_state(const GridSpec& grid, std::vector<Int> values)
{
    detail::require_arity(grid, values.size(), "phase state");
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = mod_floor(values[i], grid.circle(i).length());
    }
    return PhaseState{std::move(values)};
}

inline Point project(const GridSpec& grid, const PhaseState& state)
{
    validate(grid, state);
    Point out{std::vector<Int>(grid.arity())};
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        out.coords[i] = grid.circle(i).project(state[i]);
    }
    return out;
}

inline PhaseState lift(const GridSpec& grid, const Point& point, const DirectionMask& mask)
{
    validate(grid, point);
    validate(grid, mask);
    PhaseState out{std::vector<Int>(grid.arity())};
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        out.residues[i] = grid.circle(i).lift(point[i], mask.signs[i] != 0);
    }
    return out;
}

/// Lift onto the all-ascending branch.
inline PhaseState lift(const GridSpec& grid, const Point& point)
{
    return lift(grid, point, DirectionMask::forward(grid.arity()));
}

inline PhaseState step(const GridSpec& grid, PhaseState state)
{
    validate(grid, state);
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        state.residues[i] = grid.circle(i).step(state.residues[i]);
    }
    return state;
}

inline PhaseState step_back(const GridSpec& grid, PhaseState state)
{
    validate(grid, state);
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        state.residues[i] = grid.circle(i).step_back(state.residues[i]);
    }
    return state;
}

/// u_i ← u_i + (-1)^{s_i} (mod 2m_i).
inline PhaseState step_directed(const GridSpec& grid, PhaseState state, const DirectionMask& mask)
{
    validate(grid, state);
    validate(grid, mask);
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        const auto c = grid.circle(i);
        state.residues[i] = mask.signs[i] ? c.step_back(state.residues[i]) : c.step(state.residues[i]);
    }
    return state;
}

/// Time reversal: same position, opposite direction of travel.
inline PhaseState reverse(const GridSpec& grid, PhaseState state)
{
    validate(grid, state);
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        state.residues[i] = grid.circle(i).reverse(state.residues[i]);
    }
    return state;
}

/// Advance by k unit steps in one jump (k may be negative).
inline PhaseState advance(const GridSpec& grid, PhaseState state, Int k)
{
    validate(grid, state);
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        const Int len = grid.circle(i).length();
        state.residues[i] = mod_floor(state.residues[i] + mod_floor(k, len), len);
    }
    return state;
}

inline OrbitIndex index_of(const Point& point)
{
    if (point.arity() < 2) {
        throw std::invalid_argument("index_of needs a point with at least 2 coordinates");
    }
    OrbitIndex out{std::vector<std::uint8_t>(point.arity() - 1)};
    for (std::size_t j = 1; j < point.arity(); ++j) {
        out.bits[j - 1] = static_cast<std::uint8_t>(mod_floor(point[0] + point[j], 2));
    }
    return out;
}

/// One diagonal move of a walk: each coordinate moves ±1 per the mask, reflecting off the walls.
inline Point diagonal_move(const GridSpec& grid, const Point& point, const DirectionMask& mask)
{
    return project(grid, step_directed(grid, lift(grid, point), mask));
}

/// True when every residue sits on a wall, i.e. the state projects onto a grid vertex.
inline bool is_vertex_state(const GridSpec& grid, const PhaseState& state)
{
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        if (!grid.circle(i).is_wall(state[i])) {
            return false;
        }
    }
    return true;
}

/// True when some residue sits on a wall, i.e. the state projects onto the grid boundary.
inline bool is_boundary_state(const GridSpec& grid, const PhaseState& state)
{
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        if (grid.circle(i).is_wall(state[i])) {
            return true;
        }
    }
    return false;
}

} // namespace billiards
