#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "snakechar/duality.hpp"
#include "snakechar/json_io.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/limits.hpp"
#include "snakechar/monomial.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/segments.hpp"
#include "snakechar/snakes.hpp"

namespace snakechar::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

long parse_long(const char*& cursor, const std::string& whole, const char* what) {
    char* end = nullptr;
    const long value = std::strtol(cursor, &end, 10);
    if (end == cursor) {
        throw std::invalid_argument("malformed " + std::string(what) + " in '" +
                                    whole + "'");
    }
    cursor = end;
    return value;
}

std::vector<std::pair<int, int>> parse_snake_text(const std::string& text) {
    std::vector<std::pair<int, int>> points;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const char* cursor = token.c_str();
        const long i = parse_long(cursor, token, "snake index");
        if (*cursor != ':') {
            throw std::invalid_argument("malformed snake entry '" + token +
                                        "': expected i:k");
        }
        ++cursor;
        const long k = parse_long(cursor, token, "snake coordinate");
        if (*cursor != '\0') {
            throw std::invalid_argument("malformed snake entry '" + token +
                                        "': trailing characters");
        }
        points.push_back({static_cast<int>(i), static_cast<int>(k)});
    }
    if (points.empty()) {
        throw std::invalid_argument("snake text '" + text + "' contains no points");
    }
    return points;
}

MultiSegment parse_segments_text(int n, const std::string& text) {
    MultiSegment ms;
    ms.n = n;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const char* cursor = token.c_str();
        const long l = parse_long(cursor, token, "segment left endpoint");
        if (*cursor != '-') {
            throw std::invalid_argument("malformed segment '" + token +
                                        "': expected l-r");
        }
        ++cursor;
        const long r = parse_long(cursor, token, "segment right endpoint");
        if (*cursor != '\0') {
            throw std::invalid_argument("malformed segment '" + token +
                                        "': trailing characters");
        }
        ms.segs.push_back({static_cast<int>(l), static_cast<int>(r)});
    }
    if (ms.segs.empty()) {
        throw std::invalid_argument("segment text '" + text +
                                    "' contains no segments");
    }
    return ms;
}

template <class Tag>
ordered_json monomial_node(const BasicMonomial<Tag>& m) {
    ordered_json node = ordered_json::array();
    for (const auto& [key, e] : m.exponents()) {
        node.push_back({key.index, key.sign, key.power, e});
    }
    return node;
}

Character twisted_character(const ZQChar& q, int rank) {
    Character out(Family::Twisted, rank);
    for (const auto& [mon, mult] : q) {
        out.add(monomial_weight(mon, Family::Twisted, rank), mult);
    }
    return out;
}

struct Output {
    std::string mode = "json";
    std::ostream* out = nullptr;

    void character(const Character& c) const {
        if (mode == "json") {
            *out << character_to_json(c) << '\n';
        } else if (mode == "csv") {
            *out << character_to_csv(c);
        } else {
            *out << character_pretty(c);
        }
    }

    template <class QChar>
    void qchar(const QChar& q, char letter) const {
        if (mode == "csv") {
            throw std::invalid_argument(
                "csv output is defined for weight characters only");
        }
        if (mode == "json") {
            *out << qchar_to_json(q) << '\n';
            return;
        }
        for (const auto& [m, mult] : q) {
            *out << monomial_pretty(m, letter) << ": " << mult.str() << '\n';
        }
    }

    void report(const std::string& theorem,
                const std::vector<std::pair<std::string, std::string>>& params,
                bool equal, const Character& lhs, const Character& rhs) const {
        if (mode == "json") {
            *out << report_to_json(theorem, params, equal, lhs, rhs) << '\n';
            return;
        }
        if (mode == "csv") {
            throw std::invalid_argument(
                "csv output is defined for weight characters only");
        }
        *out << "theorem " << theorem << '\n';
        for (const auto& [key, value] : params) {
            *out << "  " << key << " = " << value << '\n';
        }
        *out << "  equal = " << (equal ? "true" : "false") << '\n';
        *out << "  lhs mass = " << lhs.mass().str() << '\n';
        *out << "  rhs mass = " << rhs.mass().str() << '\n';
        const auto diff = char_diff(lhs, rhs);
        *out << "  difference terms = " << diff.size() << '\n';
        for (const auto& [w, d] : diff) {
            *out << "    " << weight_pretty(w) << ": " << d.str() << '\n';
        }
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string join_counts_csv(const std::map<int, std::uint64_t>& counts) {
    std::string out;
    for (const auto& [g, c] : counts) {
        out += std::to_string(g) + ',' + std::to_string(c) + '\n';
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact characters, paths and duality maps for snake modules"};
    app.require_subcommand(1);

    Limits limits = limits_from_env();
    Output output;
    output.out = &out;
    std::uint64_t seed = 0;

    app.add_option("--max-tuples", limits.max_tuples,
                   "Abort enumerations beyond this many tuples");
    app.add_option("--threads", limits.threads,
                   "Worker threads, 0 selects hardware concurrency");
    app.add_option("--output", output.mode, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--seed", seed, "Seed for randomized suites");

    int rc = 0;

    // paths
    auto* paths_cmd =
        app.add_subcommand("paths", "Enumerate one set of lattice paths");
    paths_cmd->fallthrough();
    std::string paths_type;
    int paths_m = 0, paths_n = 0, paths_i = 0, paths_k = 0;
    paths_cmd->add_option("--type", paths_type, "Path family")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    paths_cmd->add_option("--m", paths_m, "Column count for type A");
    paths_cmd->add_option("--n", paths_n, "Rank for type B");
    paths_cmd->add_option("--i", paths_i, "Anchor index")->required();
    paths_cmd->add_option("--k", paths_k, "Anchor coordinate")->required();
    paths_cmd->callback([&] {
        if (paths_type == "A") {
            if (paths_cmd->count("--m") == 0) {
                throw std::invalid_argument("paths --type A requires --m");
            }
            for (const PathA& p : enum_paths_A(paths_m, paths_i, paths_k)) {
                if (output.mode == "json") {
                    out << path_to_json(p) << '\n';
                } else if (output.mode == "pretty") {
                    out << path_pretty(p) << '\n';
                } else {
                    for (std::size_t j = 0; j < p.ys.size(); ++j) {
                        if (j) out << ',';
                        out << p.ys[j];
                    }
                    out << '\n';
                }
            }
            return;
        }
        if (paths_cmd->count("--n") == 0) {
            throw std::invalid_argument("paths --type B requires --n");
        }
        for (const PathB& p : enum_paths_B(paths_n, paths_i, paths_k)) {
            if (output.mode == "json") {
                out << path_to_json(p) << '\n';
            } else if (output.mode == "pretty") {
                out << path_pretty(p) << '\n';
            } else {
                bool first = true;
                for (const EpsInt& v : p.ys) {
                    if (!first) out << ',';
                    first = false;
                    out << v.a << ',' << v.b;
                }
                for (const EpsInt& v : p.zs) {
                    out << ',' << v.a << ',' << v.b;
                }
                out << '\n';
            }
        }
    });

    // qchar / char
    for (const bool weights_only : {false, true}) {
        auto* cmd = app.add_subcommand(
            weights_only ? "char" : "qchar",
            weights_only ? "Weight character of a snake module"
                         : "q-character of a snake module");
        cmd->fallthrough();
        auto type = std::make_shared<std::string>();
        auto rank = std::make_shared<int>(0);
        auto snake = std::make_shared<std::string>();
        cmd->add_option("--type", *type, "Snake family")
            ->required()
            ->check(CLI::IsMember({"A", "B"}));
        cmd->add_option("--rank", *rank,
                        "Column count for type A, rank n for type B")
            ->required();
        cmd->add_option("--snake", *snake, "Snake points i:k,i:k,...")
            ->required();
        cmd->callback([&, type, rank, snake, weights_only] {
            const auto points = parse_snake_text(*snake);
            if (*type == "A") {
                const SnakeA s{*rank, points};
                if (weights_only) {
                    output.character(char_snake(s, limits));
                } else {
                    output.qchar(qchar_snake(s, limits), 'Y');
                }
            } else {
                const SnakeB s{*rank, points};
                if (weights_only) {
                    output.character(char_snake(s, limits));
                } else {
                    output.qchar(qchar_snake(s, limits), 'Y');
                }
            }
        });
    }

    // fold
    auto* fold_cmd = app.add_subcommand(
        "fold", "Twisted q-character of a type A snake on columns 0..2n");
    fold_cmd->fallthrough();
    int fold_n = 0;
    std::string fold_snake;
    fold_cmd->add_option("--n", fold_n, "Half rank n")->required();
    fold_cmd->add_option("--snake", fold_snake, "Snake points i:k,i:k,...")
        ->required();
    fold_cmd->callback([&] {
        const SnakeA s{2 * fold_n, parse_snake_text(fold_snake)};
        output.qchar(twisted_qchar_snake(s, limits), 'Z');
    });

    // dual
    auto* dual_cmd = app.add_subcommand(
        "dual", "Halved snake and highest monomial of the dual module");
    dual_cmd->fallthrough();
    int dual_n = 0;
    std::string dual_snake;
    dual_cmd->add_option("--n", dual_n, "Type B rank")->required();
    dual_cmd->add_option("--snake", dual_snake, "Snake points i:k,i:k,...")
        ->required();
    dual_cmd->callback([&] {
        const SnakeB s{dual_n, parse_snake_text(dual_snake)};
        const SnakeA halved = halved_snake(s);
        const ZMonomial mon = dual_monomial(s);
        if (output.mode == "json") {
            ordered_json node;
            node["m"] = halved.m;
            node["points"] = halved.points;
            node["monomial"] = monomial_node(mon);
            out << node.dump() << '\n';
        } else if (output.mode == "pretty") {
            out << "halved snake on columns 0.." << halved.m << ':';
            for (const auto& [i, k] : halved.points) {
                out << " (" << i << ',' << k << ')';
            }
            out << '\n' << "monomial: " << monomial_pretty(mon) << '\n';
        } else {
            throw std::invalid_argument(
                "csv output is defined for weight characters only");
        }
    });

    // gap
    auto* gap_cmd = app.add_subcommand(
        "gap", "Gap histogram of a type B path set or tuple set");
    gap_cmd->fallthrough();
    int gap_n = 0, gap_i = 0, gap_k = 0;
    std::string gap_snake;
    gap_cmd->add_option("--n", gap_n, "Type B rank")->required();
    gap_cmd->add_option("--i", gap_i, "Anchor index");
    gap_cmd->add_option("--k", gap_k, "Anchor coordinate");
    gap_cmd->add_option("--snake", gap_snake, "Snake points i:k,i:k,...");
    gap_cmd->callback([&] {
        std::map<int, std::uint64_t> counts;
        ordered_json key;
        if (gap_cmd->count("--snake") != 0) {
            const SnakeB s{gap_n, parse_snake_text(gap_snake)};
            validate_snake(s);
            std::vector<std::vector<PathB>> sets;
            for (const auto& [i, k] : s.points) {
                sets.push_back(enum_paths_B(gap_n, i, k));
            }
            for (const auto& tuple : enum_nop_tuples(sets, limits)) {
                int total = 0;
                for (std::size_t t = 0; t < tuple.size(); ++t) {
                    total += gap(sets[t][tuple[t]]);
                }
                ++counts[total];
            }
            key["snake"] = s.points;
        } else {
            if (gap_cmd->count("--i") == 0 || gap_cmd->count("--k") == 0) {
                throw std::invalid_argument("gap requires --snake or both --i and --k");
            }
            for (const PathB& p : enum_paths_B(gap_n, gap_i, gap_k)) {
                ++counts[gap(p)];
            }
            key["anchor"] = {gap_i, gap_k};
        }
        if (output.mode == "json") {
            ordered_json node;
            node["n"] = gap_n;
            for (const auto& [name, value] : key.items()) node[name] = value;
            ordered_json table = ordered_json::array();
            for (const auto& [g, c] : counts) table.push_back({g, c});
            node["counts"] = std::move(table);
            out << node.dump() << '\n';
        } else if (output.mode == "csv") {
            out << join_counts_csv(counts);
        } else {
            for (const auto& [g, c] : counts) {
                out << "gap " << g << ": " << c << '\n';
            }
        }
    });

    // branch
    auto* branch_cmd = app.add_subcommand(
        "branch", "Shift tuples and summand monomials of the branching rule");
    branch_cmd->fallthrough();
    int branch_n = 0;
    std::string branch_snake;
    branch_cmd->add_option("--n", branch_n, "Type B rank")->required();
    branch_cmd->add_option("--snake", branch_snake, "Snake points i:k,i:k,...")
        ->required();
    branch_cmd->callback([&] {
        const SnakeB s{branch_n, parse_snake_text(branch_snake)};
        const auto tuples = branch_tuples(s);
        const auto monomials = branch_monomials(s);
        for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
            if (output.mode == "json") {
                ordered_json node;
                node["shifts"] = tuples[idx];
                node["monomial"] = monomial_node(monomials[idx]);
                out << node.dump() << '\n';
            } else if (output.mode == "pretty") {
                out << '(';
                for (std::size_t t = 0; t < tuples[idx].size(); ++t) {
                    if (t) out << ',';
                    out << tuples[idx][t];
                }
                out << ") -> " << monomial_pretty(monomials[idx]) << '\n';
            } else {
                throw std::invalid_argument(
                    "csv output is defined for weight characters only");
            }
        }
    });

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Machine checks of the character identities");
    verify_cmd->require_subcommand(1);
    verify_cmd->fallthrough();

    auto* vb = verify_cmd->add_subcommand("branching", "Branching rule equality");
    vb->fallthrough();
    int vb_n = 0;
    std::string vb_snake;
    vb->add_option("--n", vb_n, "Type B rank")->required();
    vb->add_option("--snake", vb_snake, "Snake points i:k,i:k,...")->required();
    vb->callback([&] {
        const SnakeB s{vb_n, parse_snake_text(vb_snake)};
        const BranchReport r = verify_branching(s, limits);
        output.report("branching",
                      {{"n", std::to_string(vb_n)}, {"snake", vb_snake}}, r.equal,
                      r.lhs, r.rhs);
        rc = r.equal ? 0 : 2;
    });

    auto* vd = verify_cmd->add_subcommand("dominance",
                                          "Snake character dominance under duality");
    vd->fallthrough();
    int vd_n = 0;
    std::string vd_snake;
    vd->add_option("--n", vd_n, "Type B rank")->required();
    vd->add_option("--snake", vd_snake, "Snake points i:k,i:k,...")->required();
    vd->callback([&] {
        const SnakeB s{vd_n, parse_snake_text(vd_snake)};
        const DominanceReport r = verify_dominance(s, limits);
        output.report("dominance",
                      {{"n", std::to_string(vd_n)}, {"snake", vd_snake}},
                      r.dominates, r.folded, r.twisted);
        rc = r.dominates ? 0 : 2;
    });

    auto* vdet = verify_cmd->add_subcommand(
        "det", "Determinant expansion against the path character");
    vdet->fallthrough();
    int vdet_n = 0;
    std::string vdet_segments;
    vdet->add_option("--n", vdet_n, "Column count")->required();
    vdet->add_option("--segments", vdet_segments, "Segments l-r,l-r,...")
        ->required();
    vdet->callback([&] {
        const MultiSegment ms = parse_segments_text(vdet_n, vdet_segments);
        validate_multisegment(ms);
        const Character lhs = det_char(ms, limits);
        const Character rhs = char_snake(multisegment_snake(ms), limits);
        const bool equal = lhs == rhs;
        output.report("determinant",
                      {{"n", std::to_string(vdet_n)}, {"segments", vdet_segments}},
                      equal, lhs, rhs);
        rc = equal ? 0 : 2;
    });

    auto* vid = verify_cmd->add_subcommand("identity",
                                           "Two-sided segment summation identity");
    vid->fallthrough();
    int vid_n = 0, vid_M = 0;
    std::string vid_segments;
    vid->add_option("--n", vid_n, "Column count")->required();
    vid->add_option("--segments", vid_segments, "Segments l-r,l-r,...")
        ->required();
    vid->add_option("--M", vid_M, "Total endpoint shift")->required();
    vid->callback([&] {
        const MultiSegment ms = parse_segments_text(vid_n, vid_segments);
        const auto [lhs, rhs] = identity_sides(ms, vid_M, limits);
        const bool equal = lhs == rhs;
        output.report("segment-identity",
                      {{"n", std::to_string(vid_n)},
                       {"segments", vid_segments},
                       {"M", std::to_string(vid_M)}},
                      equal, lhs, rhs);
        rc = equal ? 0 : 2;
    });

    auto* vg0 = verify_cmd->add_subcommand(
        "gap0", "Gap-0 tuples against the twisted q-character");
    vg0->fallthrough();
    int vg0_n = 0;
    std::string vg0_snake;
    vg0->add_option("--n", vg0_n, "Type B rank")->required();
    vg0->add_option("--snake", vg0_snake, "Snake points i:k,i:k,...")->required();
    vg0->callback([&] {
        const SnakeB s{vg0_n, parse_snake_text(vg0_snake)};
        const ZQChar lhs = gap0_twisted_qchar(s, limits);
        const ZQChar rhs = twisted_qchar_snake(halved_snake(s), limits);
        const bool equal = lhs == rhs;
        output.report("gap0-bijection",
                      {{"n", std::to_string(vg0_n)}, {"snake", vg0_snake}}, equal,
                      twisted_character(lhs, vg0_n), twisted_character(rhs, vg0_n));
        rc = equal ? 0 : 2;
    });

    auto* vgw = verify_cmd->add_subcommand(
        "gweight", "Splitting map weight identity and injectivity");
    vgw->fallthrough();
    int vgw_n = 0, vgw_i = 0, vgw_k = 0;
    vgw->add_option("--n", vgw_n, "Type B rank")->required();
    vgw->add_option("--i", vgw_i, "Anchor index")->required();
    vgw->add_option("--k", vgw_k, "Anchor coordinate")->required();
    vgw->callback([&] {
        Character lhs(Family::B, vgw_n);
        Character rhs(Family::B, vgw_n);
        std::set<std::pair<PathA, PathA>> images;
        bool pointwise = true;
        std::size_t count = 0;
        for (const PathB& p : enum_paths_B(vgw_n, vgw_i, vgw_k)) {
            ++count;
            const auto pair = map_G(p);
            images.insert(pair);
            lhs.add(weight_of_path(p));
            rhs.add(lpi_weight(fold_weight(weight_of_path(pair.first) +
                                           weight_of_path(pair.second))));
            pointwise = pointwise && verify_G_weight(p);
        }
        const bool equal = pointwise && images.size() == count;
        output.report("g-weight",
                      {{"n", std::to_string(vgw_n)},
                       {"i", std::to_string(vgw_i)},
                       {"k", std::to_string(vgw_k)}},
                      equal, lhs, rhs);
        rc = equal ? 0 : 2;
    });

    auto* vgkr = verify_cmd->add_subcommand(
        "gkr", "Generalized KR character dominance");
    vgkr->fallthrough();
    int vgkr_n = 0, vgkr_i = 0, vgkr_T = 0, vgkr_k = 0;
    vgkr->add_option("--n", vgkr_n, "Type B rank")->required();
    vgkr->add_option("--i", vgkr_i, "Index")->required();
    vgkr->add_option("--T", vgkr_T, "Snake length")->required();
    vgkr->add_option("--k", vgkr_k, "Twisted anchor coordinate")->required();
    vgkr->callback([&] {
        const DominanceReport r =
            verify_gkr_dominance(vgkr_n, vgkr_i, vgkr_T, vgkr_k, limits);
        output.report("gkr-dominance",
                      {{"n", std::to_string(vgkr_n)},
                       {"i", std::to_string(vgkr_i)},
                       {"T", std::to_string(vgkr_T)},
                       {"k", std::to_string(vgkr_k)}},
                      r.dominates, r.twisted, r.folded);
        rc = r.dominates ? 0 : 2;
    });

    auto* vab = verify_cmd->add_subcommand(
        "ab", "Endpoint-window statistics equality on random specs");
    vab->fallthrough();
    int vab_count = 1, vab_maxT = 3, vab_maxn = 4, vab_maxM = 2;
    vab->add_option("--count", vab_count, "Number of random specs");
    vab->add_option("--max-T", vab_maxT, "Largest tuple length");
    vab->add_option("--max-n", vab_maxn, "Largest column count");
    vab->add_option("--max-M", vab_maxM, "Largest total shift");
    vab->callback([&] {
        std::mt19937_64 rng(seed);
        Character lhs(Family::A, 1);
        Character rhs(Family::A, 1);
        for (int c = 0; c < vab_count; ++c) {
            const NopSetSpec spec = random_nop_spec(rng, vab_maxT, vab_maxn, vab_maxM);
            const Weight tag(Family::A, std::vector<std::int64_t>{c});
            lhs.add(tag);
            if (ab_statistics_equal(spec, limits)) {
                rhs.add(tag);
            }
        }
        const bool equal = lhs == rhs;
        output.report("ab-statistics",
                      {{"count", std::to_string(vab_count)},
                       {"seed", std::to_string(seed)},
                       {"max_T", std::to_string(vab_maxT)},
                       {"max_n", std::to_string(vab_maxn)},
                       {"max_M", std::to_string(vab_maxM)}},
                      equal, lhs, rhs);
        rc = equal ? 0 : 2;
    });

    auto* veq = verify_cmd->add_subcommand(
        "equal", "Compare two character JSON files");
    veq->fallthrough();
    std::string veq_lhs, veq_rhs;
    veq->add_option("--lhs", veq_lhs, "Left character file")->required();
    veq->add_option("--rhs", veq_rhs, "Right character file")->required();
    veq->callback([&] {
        const Character lhs = character_from_json(read_file(veq_lhs));
        const Character rhs = character_from_json(read_file(veq_rhs));
        const bool equal = lhs == rhs;
        output.report("equal", {{"lhs", veq_lhs}, {"rhs", veq_rhs}}, equal, lhs,
                      rhs);
        rc = equal ? 0 : 2;
    });

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "Timed sweep of representative workloads");
    bench_cmd->fallthrough();
    bench_cmd->callback([&] {
        const auto timed = [&](const char* name, auto&& work) {
            const auto start = std::chrono::steady_clock::now();
            const std::size_t terms = work();
            const auto stop = std::chrono::steady_clock::now();
            const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                                stop - start)
                                .count();
            if (output.mode == "pretty") {
                out << name << ": " << terms << " terms\n";
            } else {
                ordered_json node;
                node["bench"] = name;
                node["terms"] = terms;
                out << node.dump() << '\n';
            }
            err << name << ": " << us << " us\n";
        };
        timed("char-b2", [&] {
            return char_snake_fresh(SnakeB{2, {{1, 4}, {1, 8}}}, limits).size();
        });
        timed("identity-a3", [&] {
            const MultiSegment ms{3, {{0, 1}, {2, 3}}};
            const auto [lhs, rhs] = identity_sides(ms, 1, limits);
            return lhs.size() + rhs.size();
        });
        timed("branching-b2", [&] {
            return verify_branching(SnakeB{2, {{1, 4}, {1, 8}}}, limits)
                .rhs.size();
        });
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("snakechar");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

}  // namespace snakechar::cli
