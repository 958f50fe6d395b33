#include "snakechar/snakes.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "snakechar/parallel.hpp"

namespace snakechar {

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }
int mod4(int v) { return ((v % 4) + 4) % 4; }

std::string point_str(int i, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}

template <class Path>
std::vector<std::vector<std::size_t>> nop_tuples_impl(
    const std::vector<std::vector<Path>>& sets, const Limits& limits) {
    for (const auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("enum_nop_tuples: empty path list");
    }
    std::vector<std::vector<std::size_t>> out;
    if (sets.empty()) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> cur(sets.size(), 0);
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == sets.size()) {
            if (out.size() >= limits.max_tuples) {
                throw ResourceLimitError("enum_nop_tuples: tuple cap exceeded: max_tuples=" +
                                         std::to_string(limits.max_tuples));
            }
            out.push_back(cur);
            return;
        }
        for (std::size_t c = 0; c < sets[t].size(); ++c) {
            // The strictly-above relation is transitive, so checking the
            // previous element of the tuple suffices.
            if (t > 0 && !strictly_above(sets[t - 1][cur[t - 1]], sets[t][c])) continue;
            cur[t] = c;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<PathA>> path_sets(const SnakeA& s) {
    std::vector<std::vector<PathA>> sets;
    sets.reserve(s.points.size());
    for (const auto& [i, k] : s.points) sets.push_back(enum_paths_A(s.m, i, k));
    return sets;
}

std::vector<std::vector<PathB>> path_sets(const SnakeB& s) {
    std::vector<std::vector<PathB>> sets;
    sets.reserve(s.points.size());
    for (const auto& [i, k] : s.points) sets.push_back(enum_paths_B(s.n, i, k));
    return sets;
}

template <class Path>
YQChar qchar_from_sets(const std::vector<std::vector<Path>>& sets, const Limits& limits) {
    std::vector<std::vector<YMonomial>> monos(sets.size());
    for (std::size_t t = 0; t < sets.size(); ++t) {
        monos[t].reserve(sets[t].size());
        for (const auto& p : sets[t]) monos[t].push_back(monomial_of_path(p));
    }
    const auto tuples = nop_tuples_impl(sets, limits);
    return parallel_map_reduce(
        tuples.size(), limits.threads, YQChar{},
        [&](std::size_t idx) {
            YMonomial prod;
            for (std::size_t t = 0; t < sets.size(); ++t) prod *= monos[t][tuples[idx][t]];
            return prod;
        },
        [](YQChar& acc, YMonomial m) { acc[std::move(m)] += 1; });
}

template <class Path>
Character char_from_sets(Family family, int rank,
                         const std::vector<std::vector<Path>>& sets, const Limits& limits) {
    std::vector<std::vector<Weight>> weights(sets.size());
    for (std::size_t t = 0; t < sets.size(); ++t) {
        weights[t].reserve(sets[t].size());
        for (const auto& p : sets[t]) weights[t].push_back(weight_of_path(p));
    }
    const auto tuples = nop_tuples_impl(sets, limits);
    return parallel_map_reduce(
        tuples.size(), limits.threads, Character(family, rank),
        [&](std::size_t idx) {
            Weight w(family, rank);
            for (std::size_t t = 0; t < sets.size(); ++t) w = w + weights[t][tuples[idx][t]];
            return w;
        },
        [](Character& acc, Weight w) { acc.add(w, 1); });
}

// Memo keys are translation-normalized: shifting every k_t by a constant
// shifts all paths rigidly and leaves the character unchanged. Type B
// anchors live in a fixed class mod 4, so the shift must be a multiple
// of 4 there.
SnakeA translated_to_zero(const SnakeA& s) {
    SnakeA r = s;
    const int k0 = r.points.front().second;
    for (auto& pt : r.points) pt.second -= k0;
    return r;
}

SnakeB translated_to_zero(const SnakeB& s) {
    SnakeB r = s;
    const int k0 = r.points.front().second;
    const int shift = k0 - mod4(k0);
    for (auto& pt : r.points) pt.second -= shift;
    return r;
}

template <class Snake>
struct CharCache {
    std::shared_mutex mutex;
    std::map<Snake, Character> memo;

    Character get_or_compute(const Snake& normalized, const Limits& limits) {
        {
            std::shared_lock lock(mutex);
            auto it = memo.find(normalized);
            if (it != memo.end()) return it->second;
        }
        Character value = char_snake_fresh(normalized, limits);
        std::unique_lock lock(mutex);
        return memo.emplace(normalized, std::move(value)).first->second;
    }
};

CharCache<SnakeA>& cache_a() {
    static CharCache<SnakeA> cache;
    return cache;
}

CharCache<SnakeB>& cache_b() {
    static CharCache<SnakeB> cache;
    return cache;
}

}  // namespace

void validate_snake(const SnakeA& s) {
    if (s.m < 1) {
        throw std::invalid_argument("validate_snake: need m >= 1, got m=" + std::to_string(s.m));
    }
    if (s.points.empty()) throw std::invalid_argument("validate_snake: empty snake");
    const auto [i1, k1] = s.points.front();
    for (std::size_t t = 0; t < s.points.size(); ++t) {
        const auto [i, k] = s.points[t];
        if (i < 0 || i > s.m) {
            throw std::invalid_argument("validate_snake: point out of range: (i,k)=" +
                                        point_str(i, k) + ", m=" + std::to_string(s.m));
        }
        if (mod2((k - i) - (k1 - i1)) != 0) {
            throw std::invalid_argument("validate_snake: parity class mismatch at (i,k)=" +
                                        point_str(i, k));
        }
        if (t > 0) {
            const auto [ip, kp] = s.points[t - 1];
            if (k - kp < std::abs(i - ip) + 2) {
                throw std::invalid_argument("validate_snake: snake condition fails at (i,k)=" +
                                            point_str(i, k) + " after " + point_str(ip, kp));
            }
        }
    }
}

void validate_snake(const SnakeB& s) {
    if (s.n < 2) {
        throw std::invalid_argument("validate_snake: need n >= 2, got n=" + std::to_string(s.n));
    }
    if (s.points.empty()) throw std::invalid_argument("validate_snake: empty snake");
    for (std::size_t t = 0; t < s.points.size(); ++t) {
        const auto [i, k] = s.points[t];
        if (i < 1 || i > s.n) {
            throw std::invalid_argument("validate_snake: point out of range: (i,k)=" +
                                        point_str(i, k) + ", n=" + std::to_string(s.n));
        }
        if (mod4(k - (2 * s.n + 2 * i + 2)) != 0) {
            throw std::invalid_argument("validate_snake: parity violation at (i,k)=" +
                                        point_str(i, k) + ", needs k = 2n+2i+2 (mod 4)");
        }
        if (t > 0) {
            const auto [ip, kp] = s.points[t - 1];
            if (k - kp < 2 * std::abs(i - ip) + 4) {
                throw std::invalid_argument("validate_snake: snake condition fails at (i,k)=" +
                                            point_str(i, k) + " after " + point_str(ip, kp));
            }
        }
    }
}

YMonomial snake_to_monomial(const SnakeA& s) {
    validate_snake(s);
    YMonomial m;
    for (const auto& [i, k] : s.points) {
        if (i == 0 || i == s.m) continue;
        m.mul(MonKey{i, +1, k}, 1);
    }
    return m;
}

YMonomial snake_to_monomial(const SnakeB& s) {
    validate_snake(s);
    YMonomial m;
    for (const auto& [i, k] : s.points) {
        if (i < s.n) {
            m.mul(MonKey{i, +1, k}, 1);
        } else {
            m.mul(MonKey{s.n, +1, k - 1}, 1);
            m.mul(MonKey{s.n, +1, k + 1}, 1);
        }
    }
    return m;
}

std::vector<std::vector<std::size_t>> enum_nop_tuples(
    const std::vector<std::vector<PathA>>& sets, const Limits& limits) {
    return nop_tuples_impl(sets, limits);
}

std::vector<std::vector<std::size_t>> enum_nop_tuples(
    const std::vector<std::vector<PathB>>& sets, const Limits& limits) {
    return nop_tuples_impl(sets, limits);
}

YQChar qchar_snake(const SnakeA& s, const Limits& limits) {
    validate_snake(s);
    return qchar_from_sets(path_sets(s), limits);
}

YQChar qchar_snake(const SnakeB& s, const Limits& limits) {
    validate_snake(s);
    return qchar_from_sets(path_sets(s), limits);
}

Character char_snake_fresh(const SnakeA& s, const Limits& limits) {
    validate_snake(s);
    return char_from_sets(Family::A, s.m - 1, path_sets(s), limits);
}

Character char_snake_fresh(const SnakeB& s, const Limits& limits) {
    validate_snake(s);
    return char_from_sets(Family::B, s.n, path_sets(s), limits);
}

Character char_snake(const SnakeA& s, const Limits& limits) {
    validate_snake(s);
    return cache_a().get_or_compute(translated_to_zero(s), limits);
}

Character char_snake(const SnakeB& s, const Limits& limits) {
    validate_snake(s);
    return cache_b().get_or_compute(translated_to_zero(s), limits);
}

ZMonomial fold_monomial(int n, const YMonomial& m) {
    if (n < 1) {
        throw std::invalid_argument("fold_monomial: need n >= 1, got n=" + std::to_string(n));
    }
    ZMonomial z;
    for (const auto& [key, e] : m.exponents()) {
        if (key.index < 1 || key.index > 2 * n - 1) {
            throw std::invalid_argument("fold_monomial: index out of range: i=" +
                                        std::to_string(key.index) +
                                        ", n=" + std::to_string(n));
        }
        MonKey out = key;
        if (key.index > n) {
            out.index = 2 * n - key.index;
            out.sign = -key.sign;
        }
        // The short-node variables satisfy Z_{n,a} = Z_{n,-a}.
        if (out.index == n) out.sign = +1;
        z.mul(out, e);
    }
    return z;
}

ZQChar twisted_qchar_snake(const SnakeA& s, const Limits& limits) {
    validate_snake(s);
    if (s.m % 2 != 0) {
        throw std::invalid_argument("twisted_qchar_snake: need an even column count, got m=" +
                                    std::to_string(s.m));
    }
    const int n = s.m / 2;
    for (const auto& [i, k] : s.points) {
        if (i > n) {
            throw std::invalid_argument("twisted_qchar_snake: index exceeds the fold rank: "
                                        "(i,k)=" + point_str(i, k) +
                                        ", n=" + std::to_string(n));
        }
    }
    ZQChar out;
    for (const auto& [mono, mult] : qchar_snake(s, limits)) {
        out[fold_monomial(n, mono)] += mult;
    }
    return out;
}

}  // namespace snakechar
