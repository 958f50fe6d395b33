#include "snakechar/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace snakechar {

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }
int mod4(int v) { return ((v % 4) + 4) % 4; }

std::string point_str(int i, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

void check_branch(const std::vector<EpsInt>& br, int n, int start, const char* name) {
    if (br.size() != static_cast<std::size_t>(n + 1)) {
        throw std::invalid_argument(std::string("validate_path: ") + name +
                                    " has wrong length " + std::to_string(br.size()) +
                                    ", expected " + std::to_string(n + 1));
    }
    if (br[0].a != start || br[0].b != 0) {
        throw std::invalid_argument(std::string("validate_path: ") + name +
                                    "[0] = " + std::to_string(br[0].a) +
                                    ", expected " + std::to_string(start));
    }
    for (int j = 0; j < n; ++j) {
        if (j < n - 1) {
            if (br[static_cast<std::size_t>(j + 1)].b != 0 ||
                std::abs(br[static_cast<std::size_t>(j + 1)].a -
                         br[static_cast<std::size_t>(j)].a) != 2) {
                throw std::invalid_argument(std::string("validate_path: ") + name +
                                            " step at index " + std::to_string(j) +
                                            " is not +-2");
            }
        } else {
            const int da = br[static_cast<std::size_t>(n)].a -
                           br[static_cast<std::size_t>(n - 1)].a;
            const int b = br[static_cast<std::size_t>(n)].b;
            if (!((da == 1 && b == 1) || (da == -1 && b == -1))) {
                throw std::invalid_argument(std::string("validate_path: ") + name +
                                            " tip step is not +-(1+eps)");
            }
        }
    }
}

YMonomial monomial_from_corners(const Corners& c) {
    YMonomial m;
    for (const auto& cr : c.plus) m.mul(MonKey{cr.j, +1, cr.level}, +1);
    for (const auto& cr : c.minus) m.mul(MonKey{cr.j, +1, cr.level}, -1);
    return m;
}

Weight weight_from_corners(const Corners& c, Family family, int rank) {
    Weight w(family, rank);
    for (const auto& cr : c.plus) w.coeffs[static_cast<std::size_t>(cr.j - 1)] += 1;
    for (const auto& cr : c.minus) w.coeffs[static_cast<std::size_t>(cr.j - 1)] -= 1;
    return w;
}

}  // namespace

int floor_half(EpsInt v, int c) {
    const int s = v.a + c;
    if (mod2(s) == 0) return v.b >= 0 ? s / 2 : s / 2 - 1;
    return (s - 1) / 2;
}

void validate_path(const PathA& p) {
    if (p.m < 1) {
        throw std::invalid_argument("validate_path: need m >= 1, got m=" + std::to_string(p.m));
    }
    if (p.i < 0 || p.i > p.m) {
        throw std::invalid_argument("validate_path: index out of range: i=" +
                                    std::to_string(p.i) + ", m=" + std::to_string(p.m));
    }
    if (p.ys.size() != static_cast<std::size_t>(p.m + 1)) {
        throw std::invalid_argument("validate_path: ys has length " +
                                    std::to_string(p.ys.size()) + ", expected " +
                                    std::to_string(p.m + 1));
    }
    if (p.ys.front() != p.i + p.k || p.ys.back() != p.m - p.i + p.k) {
        throw std::invalid_argument("validate_path: endpoints do not match (i,k)=" +
                                    point_str(p.i, p.k));
    }
    for (int r = 0; r < p.m; ++r) {
        if (std::abs(p.ys[static_cast<std::size_t>(r + 1)] -
                     p.ys[static_cast<std::size_t>(r)]) != 1) {
            throw std::invalid_argument("validate_path: step at column " +
                                        std::to_string(r) + " is not +-1");
        }
    }
}

void validate_path(const PathB& p) {
    if (p.n < 2) {
        throw std::invalid_argument("validate_path: need n >= 2, got n=" + std::to_string(p.n));
    }
    if (p.i < 1 || p.i > p.n) {
        throw std::invalid_argument("validate_path: index out of range: (i,k)=" +
                                    point_str(p.i, p.k) + ", n=" + std::to_string(p.n));
    }
    if (mod4(p.k - (2 * p.n + 2 * p.i + 2)) != 0) {
        throw std::invalid_argument("validate_path: parity violation: (i,k)=" +
                                    point_str(p.i, p.k) + " needs k = 2n+2i+2 (mod 4)");
    }
    check_branch(p.ys, p.n, 2 * p.i + p.k, "ys");
    check_branch(p.zs, p.n, 4 * p.n - 2 * p.i + p.k - 2, "zs");
    for (int j = 0; j < p.n; ++j) {
        if (mod2(p.ys[static_cast<std::size_t>(j)].a) != 0 ||
            mod2(p.zs[static_cast<std::size_t>(j)].a) != 0) {
            throw std::invalid_argument("validate_path: odd level off the middle column");
        }
    }
    if (!(p.zs[static_cast<std::size_t>(p.n)] < p.ys[static_cast<std::size_t>(p.n)])) {
        throw std::invalid_argument("validate_path: branch tips are not ordered ys[n] > zs[n]");
    }
}

std::vector<PathA> enum_paths_A(int m, int i, int k) {
    if (m < 1) {
        throw std::invalid_argument("enum_paths_A: need m >= 1, got m=" + std::to_string(m));
    }
    if (i < 0 || i > m) {
        throw std::invalid_argument("enum_paths_A: index out of range: i=" +
                                    std::to_string(i) + ", m=" + std::to_string(m));
    }
    std::vector<PathA> out;
    std::vector<int> ys(static_cast<std::size_t>(m + 1));
    ys[0] = i + k;
    const int target = m - i + k;
    auto rec = [&](auto&& self, int r) -> void {
        if (r == m) {
            if (ys[static_cast<std::size_t>(m)] == target) out.push_back(PathA{m, i, k, ys});
            return;
        }
        for (int step : {-1, +1}) {
            const int next = ys[static_cast<std::size_t>(r)] + step;
            if (std::abs(target - next) > m - (r + 1)) continue;
            ys[static_cast<std::size_t>(r + 1)] = next;
            self(self, r + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<PathB> enum_paths_B(int n, int i, int k) {
    if (n < 2) {
        throw std::invalid_argument("enum_paths_B: need n >= 2, got n=" + std::to_string(n));
    }
    if (i < 1 || i > n) {
        throw std::invalid_argument("enum_paths_B: index out of range: (i,k)=" +
                                    point_str(i, k) + ", n=" + std::to_string(n));
    }
    if (mod4(k - (2 * n + 2 * i + 2)) != 0) {
        throw std::invalid_argument("enum_paths_B: parity violation: (i,k)=" +
                                    point_str(i, k) + " needs k = 2n+2i+2 (mod 4)");
    }

    auto branches = [n](int start) {
        std::vector<std::vector<EpsInt>> out;
        std::vector<EpsInt> cur(static_cast<std::size_t>(n + 1));
        cur[0] = EpsInt{start, 0};
        auto rec = [&](auto&& self, int j) -> void {
            if (j == n - 1) {
                for (int s : {-1, +1}) {
                    cur[static_cast<std::size_t>(n)] =
                        EpsInt{cur[static_cast<std::size_t>(n - 1)].a + s, s};
                    out.push_back(cur);
                }
                return;
            }
            for (int s : {-2, +2}) {
                cur[static_cast<std::size_t>(j + 1)] =
                    EpsInt{cur[static_cast<std::size_t>(j)].a + s, 0};
                self(self, j + 1);
            }
        };
        rec(rec, 0);
        return out;
    };

    const auto ybranches = branches(2 * i + k);
    const auto zbranches = branches(4 * n - 2 * i + k - 2);
    std::vector<PathB> out;
    for (const auto& ys : ybranches) {
        for (const auto& zs : zbranches) {
            if (zs[static_cast<std::size_t>(n)] < ys[static_cast<std::size_t>(n)]) {
                out.push_back(PathB{n, i, k, ys, zs});
            }
        }
    }
    return out;
}

std::pair<int, int> tau(int n, int j, int level) {
    if (n < 2 || j < 0 || j > n) {
        throw std::invalid_argument("tau: index out of range: (j,level)=" +
                                    point_str(j, level) + ", n=" + std::to_string(n));
    }
    if (j == n) {
        if (mod2(level) == 0) {
            throw std::invalid_argument("tau: middle-column level must be odd, got " +
                                        point_str(j, level));
        }
        return {2 * n - 1, level};
    }
    if (mod4(level - (2 * n + 2 * j + 2)) == 0) return {2 * j, level};
    if (mod4(level - (2 * n + 2 * j)) == 0) return {4 * n - 2 - 2 * j, level};
    throw std::invalid_argument("tau: parity violation: (j,level)=" + point_str(j, level));
}

std::pair<int, int> tau_inv(int n, int x, int y) {
    if (n < 2) {
        throw std::invalid_argument("tau_inv: need n >= 2, got n=" + std::to_string(n));
    }
    if (x == 2 * n - 1) {
        if (mod2(y) == 0) {
            throw std::invalid_argument("tau_inv: middle-column level must be odd, got (x,y)=" +
                                        point_str(x, y));
        }
        return {n, y};
    }
    if (x < 0 || x > 4 * n - 2 || mod2(x) != 0 || mod2(y) != 0) {
        throw std::invalid_argument("tau_inv: point not in the image: (x,y)=" + point_str(x, y));
    }
    if (x <= 2 * n - 2) {
        const int j = x / 2;
        if (mod4(y - (2 * n + 2 * j + 2)) != 0) {
            throw std::invalid_argument("tau_inv: parity violation on the left side: (x,y)=" +
                                        point_str(x, y));
        }
        return {j, y};
    }
    const int j = (4 * n - 2 - x) / 2;
    if (mod4(y - (2 * n + 2 * j)) != 0) {
        throw std::invalid_argument("tau_inv: parity violation on the right side: (x,y)=" +
                                    point_str(x, y));
    }
    return {j, y};
}

Corners corners_A(const PathA& p) {
    Corners c;
    for (int r = 1; r < p.m; ++r) {
        const int y = p.ys[static_cast<std::size_t>(r)];
        const int prev = p.ys[static_cast<std::size_t>(r - 1)];
        const int next = p.ys[static_cast<std::size_t>(r + 1)];
        if (prev == y + 1 && next == y + 1) {
            c.plus.push_back(Corner{r, y});
        } else if (prev == y - 1 && next == y - 1) {
            c.minus.push_back(Corner{r, y});
        }
    }
    return c;
}

Corners corners_B(const PathB& p) {
    const int n = p.n;
    Corners c;
    for (int j = 1; j <= n - 1; ++j) {
        const EpsInt v = p.ys[static_cast<std::size_t>(j)];
        const EpsInt lo = p.ys[static_cast<std::size_t>(j - 1)];
        const EpsInt hi = p.ys[static_cast<std::size_t>(j + 1)];
        if (lo < v && hi < v) {
            c.minus.push_back(Corner{j, v.a});
        } else if (v < lo && v < hi) {
            c.plus.push_back(Corner{j, v.a});
        }
    }
    for (int j = 1; j <= n - 1; ++j) {
        const EpsInt v = p.zs[static_cast<std::size_t>(j)];
        const EpsInt lo = p.zs[static_cast<std::size_t>(j + 1)];
        const EpsInt hi = p.zs[static_cast<std::size_t>(j - 1)];
        if (lo < v && hi < v) {
            c.minus.push_back(Corner{j, v.a});
        } else if (v < lo && v < hi) {
            c.plus.push_back(Corner{j, v.a});
        }
    }
    // At the middle column (n, l) is a lower corner when l+eps lies on the
    // path but l-eps does not, and an upper corner in the mirrored case.
    const EpsInt ytip = p.ys[static_cast<std::size_t>(n)];
    const EpsInt ztip = p.zs[static_cast<std::size_t>(n)];
    auto on_middle = [&](EpsInt v) { return v == ytip || v == ztip; };
    for (EpsInt tip : {ytip, ztip}) {
        if (tip.b > 0 && !on_middle(EpsInt{tip.a, -1})) c.minus.push_back(Corner{n, tip.a});
        if (tip.b < 0 && !on_middle(EpsInt{tip.a, +1})) c.plus.push_back(Corner{n, tip.a});
    }
    std::sort(c.plus.begin(), c.plus.end());
    std::sort(c.minus.begin(), c.minus.end());
    return c;
}

YMonomial monomial_of_path(const PathA& p) { return monomial_from_corners(corners_A(p)); }

YMonomial monomial_of_path(const PathB& p) { return monomial_from_corners(corners_B(p)); }

Weight weight_of_path(const PathA& p) {
    return weight_from_corners(corners_A(p), Family::A, p.m - 1);
}

Weight weight_of_path(const PathB& p) {
    return weight_from_corners(corners_B(p), Family::B, p.n);
}

int half_char_at_n(const PathA& p) {
    const std::size_t last = p.ys.size() - 1;
    return p.ys[last] == p.ys[last - 1] - 1 ? +1 : -1;
}

bool strictly_above(const PathA& p, const PathA& q) {
    if (p.m != q.m) {
        throw std::invalid_argument("strictly_above: column mismatch: m=" +
                                    std::to_string(p.m) + " vs " + std::to_string(q.m));
    }
    for (std::size_t r = 0; r < p.ys.size(); ++r) {
        if (!(p.ys[r] < q.ys[r])) return false;
    }
    return true;
}

bool strictly_above(const PathB& p, const PathB& q) {
    if (p.n != q.n) {
        throw std::invalid_argument("strictly_above: rank mismatch: n=" +
                                    std::to_string(p.n) + " vs " + std::to_string(q.n));
    }
    for (int j = 0; j < p.n; ++j) {
        if (!(p.ys[static_cast<std::size_t>(j)] < q.ys[static_cast<std::size_t>(j)])) return false;
        if (!(p.zs[static_cast<std::size_t>(j)] < q.zs[static_cast<std::size_t>(j)])) return false;
    }
    // Both tips of p sit above both tips of q once the extreme pair is
    // ordered, since each path already has ys[n] > zs[n].
    return p.ys[static_cast<std::size_t>(p.n)] < q.zs[static_cast<std::size_t>(q.n)];
}

}  // namespace snakechar
