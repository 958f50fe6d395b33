#include "snakechar/duality.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snakechar/parallel.hpp"

namespace snakechar {

namespace {

void require_even_columns(const PathA& p, const char* where) {
    if (p.m % 2 != 0) {
        throw std::invalid_argument(std::string(where) +
                                    ": column count must be even, got m=" +
                                    std::to_string(p.m));
    }
}

void require_left_index(const PathA& p, int n, const char* where) {
    if (p.i > n) {
        throw std::invalid_argument(std::string(where) + ": index i=" +
                                    std::to_string(p.i) +
                                    " exceeds n=" + std::to_string(n));
    }
}

Character twisted_character(const ZQChar& q, int rank) {
    Character out(Family::Twisted, rank);
    for (const auto& [mon, mult] : q) {
        out.add(monomial_weight(mon, Family::Twisted, rank), mult);
    }
    return out;
}

Character trivial_twisted(int rank) {
    Character out(Family::Twisted, rank);
    out.add(Weight(Family::Twisted, rank), 1);
    return out;
}

void accumulate(Character& acc, const Character& part) {
    for (const auto& [coeffs, mult] : part.terms()) {
        acc.add(Weight(part.family(), coeffs), mult);
    }
}

}  // namespace

std::pair<int, int> map_f(int n, int j, int level) {
    if (n < 1 || j < 0 || j > 2 * n) {
        throw std::invalid_argument("map_f: point index out of range: n=" +
                                    std::to_string(n) +
                                    ", j=" + std::to_string(j));
    }
    if (j < n) return {j, 2 * level};
    if (j == n) return {n, 2 * level - 1};
    return {2 * n - j, 2 * level - 2};
}

PathB map_F(const PathA& p) {
    validate_path(p);
    require_even_columns(p, "map_F");
    const int n = p.m / 2;
    require_left_index(p, n, "map_F");

    PathB out;
    out.n = n;
    out.i = p.i;
    out.k = 2 * p.k;
    out.ys.resize(static_cast<std::size_t>(n) + 1);
    out.zs.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) {
        out.ys[static_cast<std::size_t>(j)] = {2 * p.ys[static_cast<std::size_t>(j)], 0};
        out.zs[static_cast<std::size_t>(j)] = {
            2 * p.ys[static_cast<std::size_t>(2 * n - j)] - 2, 0};
    }
    const int xm = p.ys[static_cast<std::size_t>(n)];
    if (xm > p.ys[static_cast<std::size_t>(n - 1)]) {
        out.ys[static_cast<std::size_t>(n)] = {2 * xm - 1, 1};
    } else {
        out.ys[static_cast<std::size_t>(n)] = {2 * xm + 1, -1};
    }
    if (xm > p.ys[static_cast<std::size_t>(n + 1)]) {
        out.zs[static_cast<std::size_t>(n)] = {2 * xm - 3, 1};
    } else {
        out.zs[static_cast<std::size_t>(n)] = {2 * xm - 1, -1};
    }
    validate_path(out);
    return out;
}

Corners transport_corners(const PathA& p) {
    validate_path(p);
    require_even_columns(p, "transport_corners");
    const int n = p.m / 2;
    require_left_index(p, n, "transport_corners");

    const Corners src = corners_A(p);
    Corners out;
    for (const Corner& c : src.plus) {
        if (c.j == n) {
            out.plus.push_back({n, 2 * c.level - 1});
            out.plus.push_back({n, 2 * c.level + 1});
        } else {
            auto [j, level] = map_f(n, c.j, c.level);
            out.plus.push_back({j, level});
        }
    }
    for (const Corner& c : src.minus) {
        if (c.j == n) {
            out.minus.push_back({n, 2 * c.level - 1});
            out.minus.push_back({n, 2 * c.level - 3});
        } else {
            auto [j, level] = map_f(n, c.j, c.level);
            out.minus.push_back({j, level});
        }
    }
    const int mid = p.ys[static_cast<std::size_t>(n)];
    if (p.ys[static_cast<std::size_t>(n - 1)] == mid + 1 &&
        p.ys[static_cast<std::size_t>(n + 1)] == mid - 1) {
        out.plus.push_back({n, 2 * mid + 1});
        out.minus.push_back({n, 2 * mid - 3});
    }
    std::sort(out.plus.begin(), out.plus.end());
    std::sort(out.minus.begin(), out.minus.end());
    return out;
}

int gap(const PathB& p) {
    const std::size_t last = p.ys.size() - 1;
    const int d = floor_half(p.ys[last], 1) - floor_half(p.zs[last], 3);
    if (d < 0 || d % 2 != 0) {
        throw std::invalid_argument(
            "gap: tip levels are not in admissible position: floor pair (" +
            std::to_string(floor_half(p.ys[last], 1)) + ", " +
            std::to_string(floor_half(p.zs[last], 3)) + ")");
    }
    return d / 2;
}

int gap_tuple(const std::vector<PathB>& tuple) {
    int total = 0;
    for (const PathB& p : tuple) total += gap(p);
    return total;
}

PathA map_F_inv(const PathB& p) {
    validate_path(p);
    const int g = gap(p);
    if (g != 0) {
        throw std::invalid_argument("map_F_inv: path has gap " +
                                    std::to_string(g) + ", expected 0");
    }
    const int n = p.n;
    PathA out;
    out.m = 2 * n;
    out.i = p.i;
    out.k = p.k / 2;
    out.ys.resize(static_cast<std::size_t>(2 * n) + 1);
    for (int j = 0; j < n; ++j) {
        out.ys[static_cast<std::size_t>(j)] = p.ys[static_cast<std::size_t>(j)].a / 2;
        out.ys[static_cast<std::size_t>(2 * n - j)] =
            (p.zs[static_cast<std::size_t>(j)].a + 2) / 2;
    }
    out.ys[static_cast<std::size_t>(n)] = floor_half(p.ys[static_cast<std::size_t>(n)], 1);
    validate_path(out);
    return out;
}

PathA map_L(const PathB& p) {
    validate_path(p);
    const int n = p.n;
    PathA out;
    out.m = n;
    out.ys.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) {
        out.ys[static_cast<std::size_t>(j)] = p.ys[static_cast<std::size_t>(j)].a / 2;
    }
    out.ys[static_cast<std::size_t>(n)] = floor_half(p.ys[static_cast<std::size_t>(n)], 1);
    const int y0 = out.ys.front();
    const int yn = out.ys.back();
    out.i = (y0 - yn + n) / 2;
    out.k = (y0 + yn - n) / 2;
    validate_path(out);
    return out;
}

PathA map_R(const PathB& p) {
    validate_path(p);
    const int n = p.n;
    PathA out;
    out.m = n;
    out.ys.resize(static_cast<std::size_t>(n) + 1);
    out.ys[0] = floor_half(p.zs[static_cast<std::size_t>(n)], 3);
    for (int j = 1; j <= n; ++j) {
        out.ys[static_cast<std::size_t>(j)] =
            (p.zs[static_cast<std::size_t>(n - j)].a + 2) / 2;
    }
    const int y0 = out.ys.front();
    const int yn = out.ys.back();
    out.i = (y0 - yn + n) / 2;
    out.k = (y0 + yn - n) / 2;
    validate_path(out);
    return out;
}

SnakeA halved_snake(const SnakeB& s) {
    validate_snake(s);
    SnakeA out;
    out.m = 2 * s.n;
    out.points.reserve(s.points.size());
    for (const auto& [i, k] : s.points) out.points.push_back({i, k / 2});
    validate_snake(out);
    return out;
}

ZMonomial dual_monomial(const SnakeB& s) {
    validate_snake(s);
    ZMonomial out;
    for (const auto& [i, k] : s.points) out.mul({i, 1, k / 2}, 1);
    return out;
}

DominanceReport verify_dominance(const SnakeB& s, const Limits& limits) {
    DominanceReport report;
    report.folded = pi_char(char_snake(s, limits));
    report.twisted = fold_char(char_snake(halved_snake(s), limits));
    report.slack = char_sub(report.folded, report.twisted);
    report.dominates = char_dominates(report.folded, report.twisted);
    return report;
}

std::vector<std::vector<int>> branch_tuples(const SnakeB& s) {
    validate_snake(s);
    const std::size_t T = s.points.size();
    std::vector<int> bound(T);
    for (std::size_t t = 0; t < T; ++t) {
        const auto [it, kt] = s.points[t];
        bound[t] = it + 1;
        if (t > 0) {
            const auto [ip, kp] = s.points[t - 1];
            const int advance = (2 * it + kt - 2 * ip - kp) / 4;
            if (advance < bound[t]) bound[t] = advance;
        }
    }

    std::vector<std::vector<int>> out;
    std::vector<int> cur(T, 0);
    while (true) {
        out.push_back(cur);
        std::size_t t = T;
        while (t > 0) {
            --t;
            if (cur[t] + 1 < bound[t]) {
                ++cur[t];
                for (std::size_t u = t + 1; u < T; ++u) cur[u] = 0;
                break;
            }
            if (t == 0) return out;
        }
    }
}

std::vector<ZMonomial> branch_monomials(const SnakeB& s) {
    const auto tuples = branch_tuples(s);
    std::vector<ZMonomial> out;
    out.reserve(tuples.size());
    for (const auto& shifts : tuples) {
        ZMonomial m;
        for (std::size_t t = 0; t < shifts.size(); ++t) {
            const auto [it, kt] = s.points[t];
            const int index = it - shifts[t];
            if (index == 0) continue;
            m.mul({index, 1, kt / 2 - shifts[t]}, 1);
        }
        out.push_back(std::move(m));
    }
    return out;
}

BranchReport verify_branching(const SnakeB& s, const Limits& limits) {
    BranchReport report;
    report.lhs = pi_char(char_snake(s, limits));

    const auto tuples = branch_tuples(s);
    const int n = s.n;
    auto summand = [&](std::size_t idx) {
        const auto& shifts = tuples[idx];
        SnakeA reduced;
        reduced.m = 2 * n;
        for (std::size_t t = 0; t < shifts.size(); ++t) {
            const auto [it, kt] = s.points[t];
            const int index = it - shifts[t];
            if (index == 0) continue;
            reduced.points.push_back({index, kt / 2 - shifts[t]});
        }
        if (reduced.points.empty()) return trivial_twisted(n);
        return fold_char(char_snake(reduced, limits));
    };

    report.rhs = parallel_map_reduce(
        tuples.size(), limits.threads, Character(Family::Twisted, n), summand,
        [](Character& acc, Character&& part) { accumulate(acc, part); });
    report.equal = report.lhs == report.rhs;
    return report;
}

ZQChar gap0_twisted_qchar(const SnakeB& s, const Limits& limits) {
    validate_snake(s);
    const int n = s.n;
    std::vector<std::vector<PathB>> sets;
    sets.reserve(s.points.size());
    for (const auto& [i, k] : s.points) sets.push_back(enum_paths_B(n, i, k));

    std::vector<std::vector<int>> gaps(sets.size());
    std::vector<std::vector<YMonomial>> mons(sets.size());
    for (std::size_t t = 0; t < sets.size(); ++t) {
        gaps[t].reserve(sets[t].size());
        mons[t].resize(sets[t].size());
        for (std::size_t c = 0; c < sets[t].size(); ++c) {
            const int g = gap(sets[t][c]);
            gaps[t].push_back(g);
            if (g == 0) mons[t][c] = monomial_of_path(map_F_inv(sets[t][c]));
        }
    }

    ZQChar out;
    for (const auto& tuple : enum_nop_tuples(sets, limits)) {
        int total = 0;
        for (std::size_t t = 0; t < tuple.size(); ++t) total += gaps[t][tuple[t]];
        if (total != 0) continue;
        YMonomial prod;
        for (std::size_t t = 0; t < tuple.size(); ++t) prod *= mons[t][tuple[t]];
        out[fold_monomial(n, prod)] += 1;
    }
    return out;
}

std::pair<PathA, PathA> map_G(const PathB& p) {
    validate_path(p);
    const int n = p.n;

    int j0 = 1;
    for (int j = 1; j <= n; ++j) {
        const EpsInt y = p.ys[static_cast<std::size_t>(j - 1)];
        const EpsInt z = p.zs[static_cast<std::size_t>(j - 1)];
        if (y <= EpsInt{z.a + 2, z.b}) j0 = j;
    }

    const auto yhalf = [&](int j) { return p.ys[static_cast<std::size_t>(j)].a / 2; };
    const auto zhalf = [&](int j) {
        return (p.zs[static_cast<std::size_t>(j)].a + 2) / 2;
    };

    PathA left;
    left.m = 2 * n;
    left.i = p.i;
    left.k = p.k / 2;
    left.ys.resize(static_cast<std::size_t>(2 * n) + 1);
    for (int j = 0; j < n; ++j) left.ys[static_cast<std::size_t>(j)] = yhalf(j);
    left.ys[static_cast<std::size_t>(n)] =
        floor_half(p.ys[static_cast<std::size_t>(n)], 1);
    for (int j = n + 1; j <= 2 * n - j0; ++j) {
        left.ys[static_cast<std::size_t>(j)] = yhalf(2 * n - j);
    }
    for (int j = 2 * n - j0 + 1; j <= 2 * n; ++j) {
        left.ys[static_cast<std::size_t>(j)] = zhalf(2 * n - j);
    }
    validate_path(left);

    PathA right;
    right.m = 2 * n;
    right.i = 2 * n - p.i;
    right.k = p.k / 2;
    right.ys.resize(static_cast<std::size_t>(2 * n) + 1);
    for (int j = 0; j < n; ++j) right.ys[static_cast<std::size_t>(j)] = zhalf(j);
    right.ys[static_cast<std::size_t>(n)] =
        floor_half(p.zs[static_cast<std::size_t>(n)], 3);
    for (int j = n + 1; j <= 2 * n - j0; ++j) {
        right.ys[static_cast<std::size_t>(j)] = zhalf(2 * n - j);
    }
    for (int j = 2 * n - j0 + 1; j <= 2 * n; ++j) {
        right.ys[static_cast<std::size_t>(j)] = yhalf(2 * n - j);
    }
    validate_path(right);

    return {std::move(left), std::move(right)};
}

bool verify_G_weight(const PathB& p) {
    const auto [left, right] = map_G(p);
    const Weight folded = fold_weight(weight_of_path(left) + weight_of_path(right));
    return weight_of_path(p) == lpi_weight(folded);
}

ZQChar gkr_qchar(int n, int i, int T, int k, const Limits& limits) {
    if (n < 1 || i < 1 || i > 2 * n - 1) {
        throw std::invalid_argument("gkr_qchar: index out of range: n=" +
                                    std::to_string(n) +
                                    ", i=" + std::to_string(i));
    }
    if (T < 1) {
        throw std::invalid_argument("gkr_qchar: length must be positive, got T=" +
                                    std::to_string(T));
    }
    SnakeA first{2 * n, {}};
    SnakeA second{2 * n, {}};
    for (int t = 0; t < T; ++t) {
        first.points.push_back({i, k + 2 * t});
        second.points.push_back({2 * n - i, k + 2 * t});
    }
    const YQChar q1 = qchar_snake(first, limits);
    const YQChar q2 = qchar_snake(second, limits);
    if (!q2.empty() &&
        static_cast<std::uint64_t>(q1.size()) >
            limits.max_tuples / static_cast<std::uint64_t>(q2.size())) {
        throw ResourceLimitError(
            "gkr_qchar: monomial product count exceeds limit: " +
            std::to_string(q1.size()) + " * " + std::to_string(q2.size()));
    }

    ZQChar out;
    for (const auto& [m1, c1] : q1) {
        for (const auto& [m2, c2] : q2) {
            out[fold_monomial(n, m1 * m2)] += c1 * c2;
        }
    }
    return out;
}

DominanceReport verify_gkr_dominance(int n, int i, int T, int k,
                                     const Limits& limits) {
    if (i < 1 || i > n) {
        throw std::invalid_argument(
            "verify_gkr_dominance: index out of range: n=" + std::to_string(n) +
            ", i=" + std::to_string(i));
    }
    if (((k - (n + i + 1)) % 2 + 2) % 2 != 0) {
        throw std::invalid_argument(
            "verify_gkr_dominance: anchor parity violated: need k = n+i+1 "
            "(mod 2), got k=" +
            std::to_string(k));
    }
    SnakeB snake{n, {}};
    for (int t = 0; t < T; ++t) snake.points.push_back({i, 2 * k + 4 * t});

    DominanceReport report;
    report.folded = char_snake(snake, limits);
    report.twisted = lpi_char(twisted_character(gkr_qchar(n, i, T, k, limits), n));
    report.slack = char_sub(report.twisted, report.folded);
    report.dominates = char_dominates(report.twisted, report.folded);
    return report;
}

}  // namespace snakechar
