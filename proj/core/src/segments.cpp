#include "snakechar/segments.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace snakechar {

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }

std::string seg_str(const Segment& s) {
    return "[" + std::to_string(s.l) + "," + std::to_string(s.r) + "]";
}

/// Paths from (0, y0) to (n, yn); empty when no column index fits.
const std::vector<PathA>& paths_with_endpoints(
    int n, int y0, int yn, std::map<std::pair<int, int>, std::vector<PathA>>& cache) {
    static const std::vector<PathA> none;
    if (mod2(y0 - yn - n) != 0) return none;
    const int i = (n + y0 - yn) / 2;
    if (i < 0 || i > n) return none;
    const int k = y0 - i;
    auto [it, inserted] = cache.try_emplace({i, k});
    if (inserted) it->second = enum_paths_A(n, i, k);
    return it->second;
}

}  // namespace

bool is_snake_multisegment(const MultiSegment& ms) {
    if (ms.n < 1 || ms.segs.empty()) return false;
    for (std::size_t t = 0; t < ms.segs.size(); ++t) {
        const auto& s = ms.segs[t];
        if (s.r - s.l < 0 || s.r - s.l > ms.n) return false;
        if (t > 0 && (s.l <= ms.segs[t - 1].l || s.r <= ms.segs[t - 1].r)) return false;
    }
    return true;
}

void validate_multisegment(const MultiSegment& ms) {
    if (ms.n < 1) {
        throw std::invalid_argument("validate_multisegment: need n >= 1, got n=" +
                                    std::to_string(ms.n));
    }
    if (ms.segs.empty()) throw std::invalid_argument("validate_multisegment: empty multisegment");
    for (std::size_t t = 0; t < ms.segs.size(); ++t) {
        const auto& s = ms.segs[t];
        if (s.r - s.l < 0 || s.r - s.l > ms.n) {
            throw std::invalid_argument("validate_multisegment: segment width out of range: " +
                                        seg_str(s) + ", n=" + std::to_string(ms.n));
        }
        if (t > 0 && (s.l <= ms.segs[t - 1].l || s.r <= ms.segs[t - 1].r)) {
            throw std::invalid_argument("validate_multisegment: endpoints not strictly "
                                        "increasing at " + seg_str(s));
        }
    }
}

SnakeA multisegment_snake(const MultiSegment& ms) {
    validate_multisegment(ms);
    SnakeA s{ms.n, {}};
    s.points.reserve(ms.segs.size());
    for (const auto& seg : ms.segs) s.points.emplace_back(seg.r - seg.l, seg.r + seg.l);
    return s;
}

Character seg_char(int n, int l, int r, const Limits& limits) {
    if (n < 1) {
        throw std::invalid_argument("seg_char: need n >= 1, got n=" + std::to_string(n));
    }
    const int width = r - l;
    if (width < 0 || width > n) return Character(Family::A, n - 1);
    return char_snake(SnakeA{n, {{width, r + l}}}, limits);
}

bool seg_char_shift_check(int n, int l, int r, int m, const Limits& limits) {
    const int width = r - l;
    if (width < 0 || width > n) {
        return seg_char(n, l, r, limits) == seg_char(n, l + m, r + m, limits);
    }
    const Character base = char_snake_fresh(SnakeA{n, {{width, r + l}}}, limits);
    const Character shifted = char_snake_fresh(SnakeA{n, {{width, r + l + 2 * m}}}, limits);
    return base == shifted;
}

Character det_char(const MultiSegment& ms, const Limits& limits) {
    if (ms.n < 1) {
        throw std::invalid_argument("det_char: need n >= 1, got n=" + std::to_string(ms.n));
    }
    const std::size_t T = ms.segs.size();
    if (T == 0) throw std::invalid_argument("det_char: empty multisegment");

    std::vector<std::size_t> perm(T);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Character acc(Family::A, ms.n - 1);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < T; ++a) {
            for (std::size_t b = a + 1; b < T; ++b) {
                if (perm[a] > perm[b]) ++inversions;
            }
        }
        Character term(Family::A, ms.n - 1);
        term.add(Weight(Family::A, ms.n - 1), 1);
        bool zero = false;
        for (std::size_t t = 0; t < T && !zero; ++t) {
            const Character w = seg_char(ms.n, ms.segs[t].l, ms.segs[perm[t]].r, limits);
            if (w.empty()) {
                zero = true;
            } else {
                term = char_mul(term, w);
            }
        }
        if (!zero) acc = (inversions % 2 == 0) ? char_add(acc, term) : char_sub(acc, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

std::pair<Character, Character> identity_sides(const MultiSegment& ms, int M,
                                               const Limits& limits) {
    validate_multisegment(ms);
    if (M < 0) {
        throw std::invalid_argument("identity_sides: need M >= 0, got M=" + std::to_string(M));
    }
    const std::size_t T = ms.segs.size();

    auto summand = [&](const std::vector<int>& ls, const std::vector<int>& rs) -> Character {
        MultiSegment cur{ms.n, {}};
        for (std::size_t t = 0; t < T; ++t) {
            if (rs[t] - ls[t] < 0 || rs[t] - ls[t] > ms.n) return Character(Family::A, ms.n - 1);
            cur.segs.push_back(Segment{ls[t], rs[t]});
        }
        return char_snake(multisegment_snake(cur), limits);
    };

    std::vector<int> ls(T), rs(T);
    for (std::size_t t = 0; t < T; ++t) {
        ls[t] = ms.segs[t].l;
        rs[t] = ms.segs[t].r;
    }

    // Left side: raise the left endpoints by a total of M, each staying
    // below the next original left endpoint.
    Character lhs(Family::A, ms.n - 1);
    std::vector<int> cur(T);
    auto rec_l = [&](auto&& self, std::size_t t, int budget) -> void {
        if (t == T) {
            if (budget == 0) lhs = char_add(lhs, summand(cur, rs));
            return;
        }
        const int cap = (t + 1 < T) ? ms.segs[t + 1].l - 1 - ls[t] : budget;
        for (int d = 0; d <= std::min(budget, cap); ++d) {
            cur[t] = ls[t] + d;
            self(self, t + 1, budget - d);
        }
    };
    rec_l(rec_l, 0, M);

    // Right side: lower the right endpoints by a total of M, each staying
    // above the previous original right endpoint.
    Character rhs(Family::A, ms.n - 1);
    auto rec_r = [&](auto&& self, std::size_t t, int budget) -> void {
        if (t == T) {
            if (budget == 0) rhs = char_add(rhs, summand(ls, cur));
            return;
        }
        const int cap = (t > 0) ? rs[t] - 1 - ms.segs[t - 1].r : budget;
        for (int d = 0; d <= std::min(budget, cap); ++d) {
            cur[t] = rs[t] - d;
            self(self, t + 1, budget - d);
        }
    };
    rec_r(rec_r, 0, M);

    return {lhs, rhs};
}

void validate_spec(const NopSetSpec& spec) {
    if (spec.n < 2) {
        throw std::invalid_argument("validate_spec: need n >= 2, got n=" +
                                    std::to_string(spec.n));
    }
    if (spec.M < 0) {
        throw std::invalid_argument("validate_spec: need M >= 0, got M=" +
                                    std::to_string(spec.M));
    }
    if (spec.x0.empty() || spec.x0.size() != spec.xn.size()) {
        throw std::invalid_argument("validate_spec: anchor lists must be nonempty and of "
                                    "equal length");
    }
    for (std::size_t t = 0; t < spec.x0.size(); ++t) {
        const int span = spec.xn[t] - spec.x0[t];
        if (span < -spec.n || span > spec.n) {
            throw std::invalid_argument("validate_spec: anchor span out of range at t=" +
                                        std::to_string(t));
        }
        if (mod2(spec.x0[t] - spec.xn[t] - spec.n) != 0) {
            throw std::invalid_argument("validate_spec: anchor parity mismatch at t=" +
                                        std::to_string(t));
        }
        if (t > 0 && (spec.x0[t] <= spec.x0[t - 1] || spec.xn[t] <= spec.xn[t - 1])) {
            throw std::invalid_argument("validate_spec: anchors not strictly increasing at t=" +
                                        std::to_string(t));
        }
    }
}

std::vector<std::vector<PathA>> build_nop_set(const NopSetSpec& spec, NopSide side,
                                              const Limits& limits) {
    validate_spec(spec);
    const std::size_t T = spec.x0.size();
    const int n = spec.n;
    std::map<std::pair<int, int>, std::vector<PathA>> cache;

    std::vector<std::vector<PathA>> out;
    std::vector<PathA> cur(T);
    auto emit = [&]() {
        if (out.size() >= limits.max_tuples) {
            throw ResourceLimitError("build_nop_set: tuple cap exceeded: max_tuples=" +
                                     std::to_string(limits.max_tuples));
        }
        out.push_back(cur);
    };

    auto rec = [&](auto&& self, std::size_t t, int budget) -> void {
        if (t == T) {
            if (budget == 0) emit();
            return;
        }
        for (int d = 0; d <= budget; d += 2) {
            int y0 = spec.x0[t];
            int yn = spec.xn[t];
            if (side == NopSide::SetA) {
                y0 -= d;
                if (t > 0 && y0 <= spec.x0[t - 1]) break;
            } else {
                yn += d;
                if (t + 1 < T && yn >= spec.xn[t + 1]) break;
            }
            for (const PathA& p : paths_with_endpoints(n, y0, yn, cache)) {
                if (t > 0 && !strictly_above(cur[t - 1], p)) continue;
                cur[t] = p;
                self(self, t + 1, budget - d);
            }
        }
    };
    rec(rec, 0, 2 * spec.M);
    return out;
}

std::pair<Weight, int> tuple_statistics(const std::vector<PathA>& tuple) {
    if (tuple.empty()) {
        throw std::invalid_argument("tuple_statistics: empty tuple");
    }
    Weight w(Family::A, tuple.front().m - 1);
    int half = 0;
    for (const auto& p : tuple) {
        w = w + weight_of_path(p);
        half += half_char_at_n(p);
    }
    return {w, half};
}

bool ab_statistics_equal(const NopSetSpec& spec, const Limits& limits) {
    using Stats = std::map<std::pair<std::vector<std::int64_t>, int>, Int>;
    auto collect = [&](NopSide side) {
        Stats stats;
        for (const auto& tuple : build_nop_set(spec, side, limits)) {
            const auto [w, half] = tuple_statistics(tuple);
            stats[{w.coeffs, half}] += 1;
        }
        return stats;
    };
    return collect(NopSide::SetA) == collect(NopSide::SetB);
}

NopSetSpec random_nop_spec(std::mt19937_64& rng, int max_T, int max_n, int max_M) {
    if (max_T < 1 || max_n < 2 || max_M < 0) {
        throw std::invalid_argument("random_nop_spec: invalid bounds");
    }
    auto draw = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int T = draw(1, max_T);
    const int n = draw(2, max_n);
    NopSetSpec spec{n, {}, {}, draw(0, max_M)};
    int k = draw(-3, 3);
    int prev_i = 0;
    for (int t = 0; t < T; ++t) {
        const int i = draw(0, n);
        if (t > 0) k += std::abs(i - prev_i) + 2 + 2 * draw(0, 1);
        spec.x0.push_back(i + k);
        spec.xn.push_back(n - i + k);
        prev_i = i;
    }
    return spec;
}

}  // namespace snakechar
