#include "snakechar/json_io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace snakechar {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json encode_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Int decode_int(const ordered_json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument(
        "decode_int: expected integer or decimal string, got " +
        std::string(j.type_name()));
}

ordered_json parse(const std::string& text, const char* where) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string(where) +
                                    ": malformed JSON: " + e.what());
    }
}

ordered_json weight_node(const Weight& w) {
    ordered_json node;
    node["family"] = family_name(w.family);
    node["coeffs"] = w.coeffs;
    return node;
}

template <class Tag>
ordered_json monomial_node(const BasicMonomial<Tag>& m) {
    ordered_json node = ordered_json::array();
    for (const auto& [key, e] : m.exponents()) {
        node.push_back({key.index, key.sign, key.power, e});
    }
    return node;
}

template <class Tag>
BasicMonomial<Tag> monomial_from_node(const ordered_json& node, const char* where) {
    if (!node.is_array()) {
        throw std::invalid_argument(std::string(where) +
                                    ": expected an array of variable entries");
    }
    BasicMonomial<Tag> m;
    for (const auto& entry : node) {
        if (!entry.is_array() || entry.size() != 4) {
            throw std::invalid_argument(
                std::string(where) +
                ": each variable entry must be [index, sign, power, exponent]");
        }
        const int sign = entry[1].get<int>();
        if (sign != 1 && sign != -1) {
            throw std::invalid_argument(std::string(where) +
                                        ": sign must be +1 or -1, got " +
                                        std::to_string(sign));
        }
        m.mul({entry[0].get<int>(), sign, entry[2].get<int>()},
              entry[3].get<int>());
    }
    return m;
}

template <class QChar>
std::string qchar_json(const QChar& q) {
    ordered_json node = ordered_json::array();
    for (const auto& [m, mult] : q) {
        node.push_back({monomial_node(m), encode_int(mult)});
    }
    return node.dump();
}

std::string format_eps(const EpsInt& v) {
    std::string s = std::to_string(v.a);
    if (v.b > 0) s += "+e";
    if (v.b < 0) s += "-e";
    return s;
}

ordered_json branch_node(const std::vector<EpsInt>& branch) {
    ordered_json node = ordered_json::array();
    for (std::size_t j = 0; j + 1 < branch.size(); ++j) node.push_back(branch[j].a);
    node.push_back({branch.back().a, branch.back().b});
    return node;
}

std::vector<EpsInt> branch_from_node(const ordered_json& node, const char* where) {
    if (!node.is_array() || node.empty()) {
        throw std::invalid_argument(std::string(where) +
                                    ": branch must be a nonempty array");
    }
    std::vector<EpsInt> out;
    out.reserve(node.size());
    for (std::size_t j = 0; j < node.size(); ++j) {
        const auto& entry = node[j];
        if (j + 1 == node.size()) {
            if (!entry.is_array() || entry.size() != 2) {
                throw std::invalid_argument(
                    std::string(where) + ": branch tip must be the pair [a, b]");
            }
            out.push_back({entry[0].get<int>(), entry[1].get<int>()});
        } else {
            if (!entry.is_number_integer()) {
                throw std::invalid_argument(
                    std::string(where) + ": interior branch levels must be integers");
            }
            out.push_back({entry.get<int>(), 0});
        }
    }
    return out;
}

}  // namespace

std::string weight_to_json(const Weight& w) { return weight_node(w).dump(); }

Weight weight_from_json(const std::string& text) {
    const ordered_json node = parse(text, "weight_from_json");
    Weight w;
    w.family = family_from_name(node.at("family").get<std::string>());
    w.coeffs = node.at("coeffs").get<std::vector<std::int64_t>>();
    return w;
}

std::string character_to_json(const Character& c) {
    ordered_json node;
    node["family"] = family_name(c.family());
    node["rank"] = c.rank();
    ordered_json terms = ordered_json::array();
    for (const auto& [coeffs, mult] : c.terms()) {
        terms.push_back({coeffs, encode_int(mult)});
    }
    node["terms"] = std::move(terms);
    return node.dump();
}

Character character_from_json(const std::string& text) {
    const ordered_json node = parse(text, "character_from_json");
    const Family family = family_from_name(node.at("family").get<std::string>());
    const int rank = node.at("rank").get<int>();
    Character c(family, rank);
    for (const auto& entry : node.at("terms")) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument(
                "character_from_json: each term must be [[coeffs], multiplicity]");
        }
        auto coeffs = entry[0].get<std::vector<std::int64_t>>();
        if (static_cast<int>(coeffs.size()) != rank) {
            throw std::invalid_argument(
                "character_from_json: term length " +
                std::to_string(coeffs.size()) + " does not match rank " +
                std::to_string(rank));
        }
        c.add(Weight(family, std::move(coeffs)), decode_int(entry[1]));
    }
    return c;
}

std::string character_to_csv(const Character& c) {
    std::ostringstream out;
    for (const auto& [coeffs, mult] : c.terms()) {
        for (const auto& v : coeffs) out << v << ',';
        out << mult.str() << '\n';
    }
    return out.str();
}

std::string path_to_json(const PathA& p) {
    ordered_json node;
    node["m"] = p.m;
    node["i"] = p.i;
    node["k"] = p.k;
    node["ys"] = p.ys;
    return node.dump();
}

PathA patha_from_json(const std::string& text) {
    const ordered_json node = parse(text, "patha_from_json");
    PathA p;
    p.m = node.at("m").get<int>();
    p.i = node.at("i").get<int>();
    p.k = node.at("k").get<int>();
    p.ys = node.at("ys").get<std::vector<int>>();
    validate_path(p);
    return p;
}

std::string path_to_json(const PathB& p) {
    ordered_json node;
    node["n"] = p.n;
    node["i"] = p.i;
    node["k"] = p.k;
    node["ys"] = branch_node(p.ys);
    node["zs"] = branch_node(p.zs);
    return node.dump();
}

PathB pathb_from_json(const std::string& text) {
    const ordered_json node = parse(text, "pathb_from_json");
    PathB p;
    p.n = node.at("n").get<int>();
    p.i = node.at("i").get<int>();
    p.k = node.at("k").get<int>();
    p.ys = branch_from_node(node.at("ys"), "pathb_from_json");
    p.zs = branch_from_node(node.at("zs"), "pathb_from_json");
    validate_path(p);
    return p;
}

std::string monomial_to_json(const YMonomial& m) { return monomial_node(m).dump(); }

std::string monomial_to_json(const ZMonomial& m) { return monomial_node(m).dump(); }

YMonomial ymonomial_from_json(const std::string& text) {
    return monomial_from_node<YTag>(parse(text, "ymonomial_from_json"),
                                    "ymonomial_from_json");
}

ZMonomial zmonomial_from_json(const std::string& text) {
    return monomial_from_node<ZTag>(parse(text, "zmonomial_from_json"),
                                    "zmonomial_from_json");
}

std::string qchar_to_json(const YQChar& q) { return qchar_json(q); }

std::string qchar_to_json(const ZQChar& q) { return qchar_json(q); }

std::string report_to_json(
    const std::string& theorem,
    const std::vector<std::pair<std::string, std::string>>& params, bool equal,
    const Character& lhs, const Character& rhs) {
    ordered_json node;
    node["theorem"] = theorem;
    ordered_json pnode = ordered_json::object();
    for (const auto& [key, value] : params) pnode[key] = value;
    node["params"] = std::move(pnode);
    node["equal"] = equal;
    node["lhs_mass"] = encode_int(lhs.mass());
    node["rhs_mass"] = encode_int(rhs.mass());
    ordered_json diff = ordered_json::array();
    for (const auto& [w, d] : char_diff(lhs, rhs)) {
        diff.push_back({w.coeffs, encode_int(d)});
    }
    node["difference"] = std::move(diff);
    return node.dump();
}

std::string weight_pretty(const Weight& w) {
    const char* letter = w.family == Family::Twisted ? "wv" : "w";
    std::string out;
    for (std::size_t j = 0; j < w.coeffs.size(); ++j) {
        const std::int64_t c = w.coeffs[j];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const std::int64_t abs = c < 0 ? -c : c;
        if (abs != 1) out += std::to_string(abs);
        out += letter;
        out += std::to_string(j + 1);
    }
    return out.empty() ? "0" : out;
}

std::string character_pretty(const Character& c) {
    std::ostringstream out;
    out << "character family=" << family_name(c.family()) << " rank=" << c.rank()
        << " terms=" << c.size() << " mass=" << c.mass().str() << '\n';
    for (const auto& [coeffs, mult] : c.terms()) {
        out << "  " << weight_pretty(Weight(c.family(), coeffs)) << ": "
            << mult.str() << '\n';
    }
    return out.str();
}

namespace {

template <class Tag>
std::string monomial_text(const BasicMonomial<Tag>& m, char letter) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [key, e] : m.exponents()) {
        if (!out.empty()) out += ' ';
        out += letter;
        out += '[';
        out += std::to_string(key.index);
        out += ',';
        if (key.sign < 0) out += '-';
        out += "q^";
        out += std::to_string(key.power);
        out += ']';
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

}  // namespace

std::string monomial_pretty(const YMonomial& m, char letter) {
    return monomial_text(m, letter);
}

std::string monomial_pretty(const ZMonomial& m, char letter) {
    return monomial_text(m, letter);
}

std::string path_pretty(const PathA& p) {
    std::string out;
    for (std::size_t j = 0; j < p.ys.size(); ++j) {
        if (!out.empty()) out += ' ';
        out += '(' + std::to_string(j) + ',' + std::to_string(p.ys[j]) + ')';
    }
    return out;
}

std::string path_pretty(const PathB& p) {
    const int n = p.n;
    std::string out;
    for (int j = 0; j < n; ++j) {
        out += '(' + std::to_string(2 * j) + ',' +
               format_eps(p.ys[static_cast<std::size_t>(j)]) + ") ";
    }
    out += '(' + std::to_string(2 * n - 1) + ',' +
           format_eps(p.ys[static_cast<std::size_t>(n)]) + ") ";
    out += '(' + std::to_string(2 * n - 1) + ',' +
           format_eps(p.zs[static_cast<std::size_t>(n)]) + ')';
    for (int j = n - 1; j >= 0; --j) {
        out += " (" + std::to_string(4 * n - 2 - 2 * j) + ',' +
               format_eps(p.zs[static_cast<std::size_t>(j)]) + ')';
    }
    return out;
}

}  // namespace snakechar
