#pragma once

// Trajectories of the light ray, open/closed path enumeration and counting,
// boundary and coordinate-sum statistics, and reachability queries.

#include <billiards/checked.hpp>
#include <billiards/crt.hpp>
#include <billiards/grid.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace billiards {

/// Default cap on the number of phase states an enumeration may touch.
inline constexpr Int default_state_budget = 10'000'000;
/// Default cap on the number of steps a single simulation may record.
inline constexpr Int default_step_budget = 10'000'000;

struct Trajectory {
    std::vector<Point> points;
    std::vector<PhaseState> states;

    std::size_t steps() const noexcept { return states.empty() ? 0 : states.size() - 1; }
};

enum class PathKind { Closed, Open };

constexpr std::string_view to_string(PathKind kind) noexcept
{
    return kind == PathKind::Closed ? "closed" : "open";
}

/// One geometric (undirected) billiard path.
struct Path {
    PhaseState representative; ///< lexicographically least phase state over the path's orbits
    PathKind kind = PathKind::Closed;
    Int step_length = 0;       ///< orbit length of the unit step, always 2·lcm(dims)
    Int distinct_segments = 0; ///< step_length for closed paths, step_length / 2 for open ones
};

struct ReachAnswer {
    bool reachable = false;
    std::optional<Int> witness_steps;
    /// Per coordinate: 0 when the target is met on the ascending branch, 1 on the descending one.
    std::optional<std::vector<std::uint8_t>> sign_choice;
};

inline Trajectory simulate(const GridSpec& grid, PhaseState state, Int n_steps, Int max_steps = default_step_budget)
{
    validate(grid, state);
    if (n_steps < 0) {
        throw std::invalid_argument("step count must be nonnegative");
    }
    if (n_steps > max_steps) {
        throw budget_exceeded("simulation of " + std::to_string(n_steps) + " steps exceeds budget of "
                              + std::to_string(max_steps));
    }
    Trajectory out;
    out.states.reserve(static_cast<std::size_t>(n_steps) + 1);
    out.points.reserve(static_cast<std::size_t>(n_steps) + 1);
    for (Int k = 0;; ++k) {
        out.points.push_back(project(grid, state));
        out.states.push_back(state);
        if (k == n_steps) {
            break;
        }
        state = step(grid, std::move(state));
    }
    return out;
}

inline Trajectory simulate(const GridSpec& grid, const Point& start, const DirectionMask& mask, Int n_steps,
                           Int max_steps = default_step_budget)
{
    return simulate(grid, lift(grid, start, mask), n_steps, max_steps);
}

/// Number of unit steps in one full period: 2·lcm(dims).
inline Int step_length(const GridSpec& grid)
{
    return grid.period();
}

/// Euclidean length of a closed path: every step is a unit-cell main diagonal of length √p.
inline double geometric_length(const GridSpec& grid)
{
    return static_cast<double>(grid.period()) * std::sqrt(static_cast<double>(grid.arity()));
}

/// Open iff the orbit passes through a vertex state, which happens iff the
/// system k ≡ -u_i (mod m_i) is solvable.
inline PathKind classify_path(const GridSpec& grid, const PhaseState& state)
{
    validate(grid, state);
    std::vector<Congruence> system;
    system.reserve(grid.arity());
    for (std::size_t i = 0; i < grid.arity(); ++i) {
        system.push_back({mod_floor(-state[i], grid.dim(i)), grid.dim(i)});
    }
    return solve_congruences(system) ? PathKind::Open : PathKind::Closed;
}

namespace detail {

// Mixed-radix encoding of phase states; the first coordinate is most
// significant so numeric order equals lexicographic order.
class StateCodec {
public:
    explicit StateCodec(const GridSpec& grid) : grid_(grid), strides_(grid.arity())
    {
        Int stride = 1;
        for (std::size_t i = grid.arity(); i-- > 0;) {
            strides_[i] = stride;
            stride = checked_mul(stride, grid.circle(i).length(), "state count");
        }
        count_ = stride;
    }

    Int count() const noexcept { return count_; }

    Int encode(const PhaseState& s) const noexcept
    {
        Int id = 0;
        for (std::size_t i = 0; i < strides_.size(); ++i) {
            id += s[i] * strides_[i];
        }
        return id;
    }

    PhaseState decode(Int id) const
    {
        PhaseState s{std::vector<Int>(strides_.size())};
        for (std::size_t i = 0; i < strides_.size(); ++i) {
            s.residues[i] = id / strides_[i];
            id %= strides_[i];
        }
        return s;
    }

    // Unit step applied in place; returns the new id.
    Int advance(PhaseState& s, Int id) const noexcept
    {
        for (std::size_t i = 0; i < strides_.size(); ++i) {
            const Int len = 2 * grid_.dims()[i];
            if (s.residues[i] + 1 == len) {
                s.residues[i] = 0;
                id -= (len - 1) * strides_[i];
            } else {
                ++s.residues[i];
                id += strides_[i];
            }
        }
        return id;
    }

private:
    const GridSpec& grid_;
    std::vector<Int> strides_;
    Int count_ = 1;
};

} // namespace detail

/// Partition every phase state into orbits of the unit step, pair each orbit
/// with its time-reversed image, and return one Path per geometric path.
/// Self-paired orbits are open paths. Output is ordered by representative.
inline std::vector<Path> enumerate_paths(const GridSpec& grid, Int max_states = default_state_budget)
{
    const detail::StateCodec codec(grid);
    if (codec.count() > max_states) {
        throw budget_exceeded("grid has " + std::to_string(codec.count()) + " phase states, budget is "
                              + std::to_string(max_states));
    }
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> orbit_of(static_cast<std::size_t>(codec.count()), unset);
    std::vector<Int> reps;
    std::vector<Int> lengths;

    for (Int id = 0; id < codec.count(); ++id) {
        if (orbit_of[static_cast<std::size_t>(id)] != unset) {
            continue;
        }
        const auto orbit = static_cast<std::uint32_t>(reps.size());
        reps.push_back(id);
        PhaseState s = codec.decode(id);
        Int cur = id;
        Int len = 0;
        do {
            orbit_of[static_cast<std::size_t>(cur)] = orbit;
            cur = codec.advance(s, cur);
            ++len;
        } while (cur != id);
        lengths.push_back(len);
    }

    std::vector<Path> paths;
    std::vector<bool> paired(reps.size(), false);
    for (std::size_t o = 0; o < reps.size(); ++o) {
        if (paired[o]) {
            continue;
        }
        PhaseState rep = codec.decode(reps[o]);
        const auto mirror = orbit_of[static_cast<std::size_t>(codec.encode(reverse(grid, rep)))];
        paired[o] = true;
        paired[mirror] = true;
        const bool open = mirror == o;
        paths.push_back(Path{std::move(rep), open ? PathKind::Open : PathKind::Closed, lengths[o],
                             open ? lengths[o] / 2 : lengths[o]});
    }
    return paths;
}

/// Closed-path count 2^{p-2}·(∏m_i / lcm − 1).
inline Int count_closed(const GridSpec& grid)
{
    __int128 product = 1;
    for (Int m : grid.dims()) {
        if (__builtin_mul_overflow(product, static_cast<__int128>(m), &product)) {
            throw std::overflow_error("integer overflow in grid volume");
        }
    }
    const __int128 ratio = product / grid.lcm();
    if (ratio - 1 > std::numeric_limits<Int>::max()) {
        throw std::overflow_error("integer overflow in closed path count");
    }
    Int count = static_cast<Int>(ratio - 1);
    // 2^{p-2} for p ≥ 2.
    for (std::size_t i = 2; i < grid.arity(); ++i) {
        count = checked_mul(count, 2, "closed path count");
    }
    return count;
}

/// Open-path count 2^{p-1}: one per pair of opposite grid vertices.
inline Int count_open(const GridSpec& grid)
{
    Int count = 1;
    for (std::size_t i = 1; i < grid.arity(); ++i) {
        count = checked_mul(count, 2, "open path count");
    }
    return count;
}

/// States with some residue on a wall, counted over one full period starting at the path's representative.
inline Int boundary_hits(const GridSpec& grid, const Path& path)
{
    validate(grid, path.representative);
    PhaseState s = path.representative;
    Int hits = 0;
    for (Int k = 0; k < grid.period(); ++k) {
        hits += is_boundary_state(grid, s) ? 1 : 0;
        s = step(grid, std::move(s));
    }
    return hits;
}

/// Per-coordinate sum of projected positions over steps k = 0 .. 2·lcm − 1.
inline std::vector<Int> coordinate_sums(const GridSpec& grid, const PhaseState& start)
{
    validate(grid, start);
    std::vector<Int> sums(grid.arity(), 0);
    PhaseState s = start;
    for (Int k = 0; k < grid.period(); ++k) {
        for (std::size_t i = 0; i < grid.arity(); ++i) {
            sums[i] = checked_add(sums[i], grid.circle(i).project(s[i]), "coordinate sum");
        }
        s = step(grid, std::move(s));
    }
    return sums;
}

/// Does the ray starting at `from` (initial direction `mask`) ever pass through `to`?
/// For each lift v of the target, k ≡ v_i − u_i (mod 2m_i) is solved by generalized CRT;
/// the least witness wins, ties go to the lexicographically smaller sign choice.
inline ReachAnswer light_reachable(const GridSpec& grid, const Point& from, const DirectionMask& mask, const Point& to)
{
    const PhaseState source = lift(grid, from, mask);
    validate(grid, to);
    const std::size_t p = grid.arity();

    ReachAnswer best;
    std::vector<Congruence> system(p);
    for (const auto& choice : DirectionMask::all(p)) {
        for (std::size_t i = 0; i < p; ++i) {
            const auto c = grid.circle(i);
            const Int target = c.lift(to[i], choice.signs[i] != 0);
            system[i] = {mod_floor(target - source[i], c.length()), c.length()};
        }
        const auto solution = solve_congruences(system);
        if (solution && (!best.reachable || solution->residue < *best.witness_steps)) {
            best.reachable = true;
            best.witness_steps = solution->residue;
            best.sign_choice = choice.signs;
        }
    }
    return best;
}

/// Same contract as light_reachable, decided by stepping through one full period.
inline ReachAnswer light_reachable_oracle(const GridSpec& grid, const Point& from, const DirectionMask& mask,
                                          const Point& to, Int max_steps = default_step_budget)
{
    PhaseState s = lift(grid, from, mask);
    validate(grid, to);
    if (grid.period() > max_steps) {
        throw budget_exceeded("reachability oracle needs " + std::to_string(grid.period()) + " steps, budget is "
                              + std::to_string(max_steps));
    }
    const std::size_t p = grid.arity();
    for (Int k = 0; k < grid.period(); ++k) {
        bool hit = true;
        for (std::size_t i = 0; i < p && hit; ++i) {
            hit = grid.circle(i).project(s[i]) == to[i];
        }
        if (hit) {
            std::vector<std::uint8_t> signs(p);
            for (std::size_t i = 0; i < p; ++i) {
                signs[i] = s[i] > grid.dim(i) ? 1 : 0;
            }
            return ReachAnswer{true, k, std::move(signs)};
        }
        s = step(grid, std::move(s));
    }
    return ReachAnswer{};
}

/// The drawable trajectory of a path: a full period for closed paths, and
/// vertex-to-vertex (half a period) for open paths.
inline Trajectory trace(const GridSpec& grid, const Path& path)
{
    validate(grid, path.representative);
    if (path.kind == PathKind::Closed) {
        return simulate(grid, path.representative, grid.period());
    }
    PhaseState s = path.representative;
    for (Int k = 0; k < grid.period() && !is_vertex_state(grid, s); ++k) {
        s = step(grid, std::move(s));
    }
    if (!is_vertex_state(grid, s)) {
        throw std::logic_error("open path orbit does not visit a grid vertex");
    }
    return simulate(grid, std::move(s), grid.period() / 2);
}

} // namespace billiards
