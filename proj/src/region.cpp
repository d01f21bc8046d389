#include "lkd/bidegree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lkd {

namespace {

using i128 = __int128;

struct Vertex {
    i128 xn;
    i128 yn;
    i128 den;  // > 0
};

i128 floor_div(i128 n, i128 d) {
    i128 q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

std::vector<Vertex> vertices(const std::vector<HalfPlane>& hs, long bound) {
    std::vector<HalfPlane> all = hs;
    all.push_back({1, 0, bound});
    all.push_back({-1, 0, bound});
    all.push_back({0, 1, bound});
    all.push_back({0, -1, bound});
    std::vector<Vertex> out;
    for (std::size_t s = 0; s < all.size(); ++s) {
        for (std::size_t t = s + 1; t < all.size(); ++t) {
            const HalfPlane& p = all[s];
            const HalfPlane& q = all[t];
            i128 det = static_cast<i128>(p.a) * q.b - static_cast<i128>(q.a) * p.b;
            if (det == 0) continue;
            Vertex v{static_cast<i128>(p.c) * q.b - static_cast<i128>(q.c) * p.b,
                     static_cast<i128>(p.a) * q.c - static_cast<i128>(q.a) * p.c, det};
            if (v.den < 0) {
                v.xn = -v.xn;
                v.yn = -v.yn;
                v.den = -v.den;
            }
            bool inside = std::all_of(all.begin(), all.end(), [&](const HalfPlane& h) {
                return h.a * v.xn + h.b * v.yn <= static_cast<i128>(h.c) * v.den;
            });
            if (inside) out.push_back(v);
        }
    }
    return out;
}

// Largest a*x + b*y over the vertices as a reduced fraction; false when there are none.
bool max_value(const std::vector<Vertex>& vs, long a, long b, i128& num, i128& den) {
    if (vs.empty()) return false;
    num = a * vs[0].xn + b * vs[0].yn;
    den = vs[0].den;
    for (const Vertex& v : vs) {
        i128 n = a * v.xn + b * v.yn;
        if (n * den > num * v.den) {
            num = n;
            den = v.den;
        }
    }
    return true;
}

constexpr long kSmallBox = 1L << 28;
constexpr long kLargeBox = 1L << 29;

std::string plane_str(const HalfPlane& h) {
    std::ostringstream os;
    auto term = [&](long coef, const char* var, bool first) {
        if (coef == 0) return first;
        if (coef < 0) os << '-';
        else if (!first) os << '+';
        if (coef != 1 && coef != -1) os << (coef < 0 ? -coef : coef);
        os << var;
        return false;
    };
    bool first = term(h.a, "i", true);
    term(h.b, "j", first);
    os << "<=" << h.c;
    return os.str();
}

}  // namespace

std::vector<BiDegree> Window::cells() const {
    std::vector<BiDegree> out;
    for (long i = imin; i <= imax; ++i)
        for (long j = jmin; j <= jmax; ++j) out.push_back({i, j});
    return out;
}

std::string Window::str() const {
    return "i in [" + std::to_string(imin) + "," + std::to_string(imax) + "], j in [" + std::to_string(jmin) + "," +
           std::to_string(jmax) + "]";
}

Region Region::nothing() {
    Region r;
    r.empty_ = true;
    return r;
}

Region Region::box(long imin, long imax, long jmin, long jmax) {
    return from_half_planes({{1, 0, imax}, {-1, 0, -imin}, {0, 1, jmax}, {0, -1, -jmin}});
}

Region Region::searrow(long n1, long n2) { return from_half_planes({{-1, 0, -n1 - 1}, {1, 1, n2 - 1}}); }
Region Region::nwarrow(long n1, long n2) { return from_half_planes({{1, 0, n1 - 1}, {-1, -1, -n2 - 1}}); }
Region Region::swarrow(long n1, long n2) { return from_half_planes({{1, 0, n1 - 1}, {-1, 1, -n2 - 1}}); }
Region Region::nearrow(long n1, long n2) { return from_half_planes({{-1, 0, -n1 - 1}, {1, -1, n2 - 1}}); }

Region Region::from_half_planes(std::vector<HalfPlane> hs) {
    Region r;
    r.hs_ = std::move(hs);
    r.normalize();
    return r;
}

void Region::normalize() {
    if (empty_) {
        hs_.clear();
        return;
    }
    std::vector<HalfPlane> out;
    for (HalfPlane h : hs_) {
        long g = std::gcd(h.a, h.b);
        if (g == 0) {
            if (h.c < 0) {
                empty_ = true;
                hs_.clear();
                return;
            }
            continue;
        }
        h.a /= g;
        h.b /= g;
        h.c = static_cast<long>(floor_div(h.c, g));
        auto same = std::find_if(out.begin(), out.end(), [&](const HalfPlane& o) { return o.a == h.a && o.b == h.b; });
        if (same == out.end()) {
            out.push_back(h);
        } else {
            same->c = std::min(same->c, h.c);
        }
    }
    std::sort(out.begin(), out.end(), [](const HalfPlane& x, const HalfPlane& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    hs_ = std::move(out);
    if (vertices(hs_, kSmallBox).empty()) {
        empty_ = true;
        hs_.clear();
    }
}

bool Region::contains(BiDegree d) const {
    if (empty_) return false;
    return std::all_of(hs_.begin(), hs_.end(), [&](const HalfPlane& h) { return h.a * d.i + h.b * d.j <= h.c; });
}

bool Region::is_empty() const { return empty_; }

Region Region::reflect() const {
    if (empty_) return nothing();
    std::vector<HalfPlane> hs;
    for (const HalfPlane& h : hs_) hs.push_back({-h.a, -h.b, h.c});
    return from_half_planes(std::move(hs));
}

Region Region::translated(BiDegree t) const {
    if (empty_) return nothing();
    std::vector<HalfPlane> hs;
    for (const HalfPlane& h : hs_) hs.push_back({h.a, h.b, h.c + h.a * t.i + h.b * t.j});
    return from_half_planes(std::move(hs));
}

Region Region::intersect(const Region& o) const {
    if (empty_ || o.empty_) return nothing();
    std::vector<HalfPlane> hs = hs_;
    hs.insert(hs.end(), o.hs_.begin(), o.hs_.end());
    return from_half_planes(std::move(hs));
}

Region Region::minkowski(const Region& o) const {
    if (empty_ || o.empty_) return nothing();
    std::vector<HalfPlane> normals = hs_;
    normals.insert(normals.end(), o.hs_.begin(), o.hs_.end());
    std::vector<HalfPlane> hs;
    for (const HalfPlane& n : normals) {
        auto s1 = support(n.a, n.b);
        auto s2 = o.support(n.a, n.b);
        if (s1 && s2) hs.push_back({n.a, n.b, *s1 + *s2});
    }
    return from_half_planes(std::move(hs));
}

Region Region::pullback(long p, long q, long r, long s) const {
    if (empty_) return nothing();
    std::vector<HalfPlane> hs;
    for (const HalfPlane& h : hs_) hs.push_back({h.a * p + h.b * r, h.a * q + h.b * s, h.c});
    return from_half_planes(std::move(hs));
}

std::optional<long> Region::support(long a, long b) const {
    if (empty_) return std::nullopt;
    i128 n1 = 0;
    i128 d1 = 1;
    i128 n2 = 0;
    i128 d2 = 1;
    if (!max_value(vertices(hs_, kSmallBox), a, b, n1, d1)) return std::nullopt;
    if (!max_value(vertices(hs_, kLargeBox), a, b, n2, d2)) return std::nullopt;
    if (n1 * d2 != n2 * d1) return std::nullopt;
    return static_cast<long>(floor_div(n1, d1));
}

std::optional<Window> Region::bounding_window() const {
    if (empty_) return Window{0, -1, 0, -1};
    auto imax = support(1, 0);
    auto imin = support(-1, 0);
    auto jmax = support(0, 1);
    auto jmin = support(0, -1);
    if (!imax || !imin || !jmax || !jmin) return std::nullopt;
    return Window{-*imin, *imax, -*jmin, *jmax};
}

std::string Region::str() const {
    if (empty_) return "empty";
    if (hs_.empty()) return "everywhere";
    std::string out = "{";
    for (std::size_t k = 0; k < hs_.size(); ++k) out += (k ? ", " : "") + plane_str(hs_[k]);
    return out + "}";
}

}  // namespace lkd
