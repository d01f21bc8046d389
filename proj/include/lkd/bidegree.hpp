#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace lkd {

/// (cohomological degree i, internal degree j)
struct BiDegree {
    long i = 0;
    long j = 0;

    BiDegree operator+(BiDegree o) const { return {i + o.i, j + o.j}; }
    BiDegree operator-(BiDegree o) const { return {i - o.i, j - o.j}; }
    BiDegree operator-() const { return {-i, -j}; }
    friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
    std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

inline constexpr BiDegree kDiffDegree{1, 0};

/// Parity sign (-1)^n.
inline long sign_of(long n) { return (n % 2 == 0) ? 1 : -1; }

/// Finite rectangle of bidegrees, bounds inclusive.
struct Window {
    long imin = 0;
    long imax = 0;
    long jmin = 0;
    long jmax = 0;

    bool contains(BiDegree d) const { return d.i >= imin && d.i <= imax && d.j >= jmin && d.j <= jmax; }
    /// Cells ordered by i, then j.
    std::vector<BiDegree> cells() const;
    std::string str() const;

    friend bool operator==(const Window&, const Window&) = default;
};

/// a*i + b*j <= c
struct HalfPlane {
    long a = 0;
    long b = 0;
    long c = 0;
};

/// A convex set of bidegrees cut out by finitely many half-planes. Used as the
/// support bound of a module: components vanish outside it.
class Region {
public:
    static Region everywhere() { return Region(); }
    static Region nothing();
    static Region box(long imin, long imax, long jmin, long jmax);
    static Region point(BiDegree d) { return box(d.i, d.i, d.j, d.j); }
    /// i > n1 and i + j < n2
    static Region searrow(long n1, long n2);
    /// i < n1 and i + j > n2
    static Region nwarrow(long n1, long n2);
    /// i < n1 and i - j > n2
    static Region swarrow(long n1, long n2);
    /// i > n1 and i - j < n2
    static Region nearrow(long n1, long n2);
    static Region from_half_planes(std::vector<HalfPlane> hs);

    bool contains(BiDegree d) const;
    bool is_empty() const;
    const std::vector<HalfPlane>& half_planes() const { return hs_; }

    /// {-x : x in R}
    Region reflect() const;
    /// {x : x - t in R}
    Region translated(BiDegree t) const;
    Region intersect(const Region& o) const;
    /// Superset of {x + y : x in R, y in o} that is exact up to lattice effects.
    Region minkowski(const Region& o) const;
    /// {(I,J) : (p*I + q*J, r*I + s*J) in R}
    Region pullback(long p, long q, long r, long s) const;

    /// max of a*i + b*j over the real region, floored; nullopt when unbounded or empty.
    std::optional<long> support(long a, long b) const;
    /// Integer bounding window; nullopt when unbounded. Empty regions give an inverted window.
    std::optional<Window> bounding_window() const;

    bool searrow_bounded() const { return support(-1, 0).has_value() && support(1, 1).has_value(); }
    bool nwarrow_bounded() const { return support(1, 0).has_value() && support(-1, -1).has_value(); }

    std::string str() const;

private:
    std::vector<HalfPlane> hs_;
    bool empty_ = false;

    void normalize();
};

}  // namespace lkd
