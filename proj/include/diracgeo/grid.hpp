#ifndef DIRACGEO_GRID_HPP
#define DIRACGEO_GRID_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "diracgeo/types.hpp"

namespace dgeo {

enum class Boundary { one_sided, periodic };

/// Structured 4d grid in chart coordinates. Axes of extent 1 carry no
/// variation; differentiated axes need at least 5 nodes.
struct Grid {
    std::array<int, 4> n{1, 1, 1, 1};
    std::array<double, 4> h{1.0, 1.0, 1.0, 1.0};
    std::array<Boundary, 4> bc{Boundary::one_sided, Boundary::one_sided,
                               Boundary::one_sided, Boundary::one_sided};
    std::array<std::string, 4> labels{"x0", "x1", "x2", "x3"};
    std::array<double, 4> origin{0.0, 0.0, 0.0, 0.0};

    std::size_t size() const
    {
        return std::size_t(n[0]) * n[1] * n[2] * n[3];
    }
    std::size_t index(int i0, int i1, int i2, int i3) const
    {
        return ((std::size_t(i0) * n[1] + i1) * n[2] + i2) * n[3] + i3;
    }
    std::array<int, 4> unindex(std::size_t flat) const
    {
        std::array<int, 4> i;
        i[3] = int(flat % n[3]); flat /= n[3];
        i[2] = int(flat % n[2]); flat /= n[2];
        i[1] = int(flat % n[1]); flat /= n[1];
        i[0] = int(flat);
        return i;
    }
    double coord(int axis, int i) const { return origin[axis] + h[axis] * i; }
    bool compatible(const Grid& o) const { return n == o.n && h == o.h; }
};

template <class V>
struct Field {
    Grid grid;
    std::vector<V> v;

    Field() = default;
    explicit Field(const Grid& g) : grid(g), v(g.size()) {}
    Field(const Grid& g, const V& fill) : grid(g), v(g.size(), fill) {}

    V& at(int i0, int i1, int i2, int i3) { return v[grid.index(i0, i1, i2, i3)]; }
    const V& at(int i0, int i1, int i2, int i3) const
    {
        return v[grid.index(i0, i1, i2, i3)];
    }
    V& operator[](std::size_t i) { return v[i]; }
    const V& operator[](std::size_t i) const { return v[i]; }
    std::size_t size() const { return v.size(); }
};

template <class V, class F>
auto map_field(const Field<V>& f, F&& fn) -> Field<decltype(fn(f.v[0]))>
{
    Field<decltype(fn(f.v[0]))> out(f.grid);
    for (std::size_t i = 0; i < f.v.size(); ++i) out.v[i] = fn(f.v[i]);
    return out;
}

template <class F>
auto make_field(const Grid& g, F&& fn) -> Field<decltype(fn(std::array<double, 4>{}))>
{
    Field<decltype(fn(std::array<double, 4>{}))> out(g);
    for (std::size_t idx = 0; idx < out.v.size(); ++idx) {
        auto ii = g.unindex(idx);
        std::array<double, 4> x{g.coord(0, ii[0]), g.coord(1, ii[1]),
                                g.coord(2, ii[2]), g.coord(3, ii[3])};
        out.v[idx] = fn(x);
    }
    return out;
}

namespace detail {
template <class V>
V zero_like()
{
    if constexpr (std::is_arithmetic_v<V>)
        return V(0);
    else
        return V::Zero();
}
} // namespace detail

/// Second-order partial derivative along one axis: central stencil in the
/// interior, one-sided second-order at the edges (or periodic wrap).
/// Composed derivatives (curvature from a differentiated connection) drop to
/// first order within two layers of a one-sided edge; convergence statements
/// hold on the fixed interior or on periodic domains.
/// An axis of extent 1 yields a zero derivative; extents 2..4 are rejected.
template <class V>
Field<V> partial(const Field<V>& f, int axis)
{
    const Grid& g = f.grid;
    const int n = g.n[axis];
    Field<V> out(g, detail::zero_like<V>());
    if (n == 1) return out;
    if (n < 5)
        throw GridTooSmall("axis " + std::to_string(axis) + " has extent " +
                           std::to_string(n) + " < 5");
    const double inv2h = 0.5 / g.h[axis];

    std::array<int, 4> idx;
    const std::size_t total = g.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        idx = g.unindex(flat);
        const int i = idx[axis];
        auto shifted = [&](int di) {
            auto jdx = idx;
            int t = i + di;
            if (g.bc[axis] == Boundary::periodic) t = (t % n + n) % n;
            jdx[axis] = t;
            return f.v[g.index(jdx[0], jdx[1], jdx[2], jdx[3])];
        };
        if (g.bc[axis] == Boundary::periodic || (i > 0 && i < n - 1)) {
            out.v[flat] = (shifted(+1) - shifted(-1)) * inv2h;
        } else if (i == 0) {
            out.v[flat] = (shifted(+1) * 4.0 - shifted(0) * 3.0 - shifted(+2)) * inv2h;
        } else {
            out.v[flat] = (shifted(0) * 3.0 - shifted(-1) * 4.0 + shifted(-2)) * inv2h;
        }
    }
    return out;
}

} // namespace dgeo

#endif
