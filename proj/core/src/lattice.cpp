#include "snakechar/lattice.hpp"

#include <stdexcept>
#include <string>

namespace snakechar {

namespace {

void require_same_lattice(const Weight& a, const Weight& b, const char* where) {
    if (a.family != b.family || a.rank() != b.rank()) {
        throw std::invalid_argument(std::string(where) + ": lattice mismatch: " +
                                    family_name(a.family) + " rank " +
                                    std::to_string(a.rank()) + " vs " +
                                    family_name(b.family) + " rank " +
                                    std::to_string(b.rank()));
    }
}

void require_same_lattice(const Character& a, const Character& b, const char* where) {
    if (a.family() != b.family() || a.rank() != b.rank()) {
        throw std::invalid_argument(std::string(where) + ": lattice mismatch: " +
                                    family_name(a.family()) + " rank " +
                                    std::to_string(a.rank()) + " vs " +
                                    family_name(b.family()) + " rank " +
                                    std::to_string(b.rank()));
    }
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::Twisted: return "TW";
    }
    throw std::invalid_argument("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "TW") return Family::Twisted;
    throw std::invalid_argument("family_from_name: unknown family tag: " + name);
}

bool Weight::is_zero() const {
    for (auto c : coeffs) {
        if (c != 0) return false;
    }
    return true;
}

Weight operator+(const Weight& a, const Weight& b) {
    require_same_lattice(a, b, "Weight::operator+");
    Weight r = a;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] += b.coeffs[j];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    require_same_lattice(a, b, "Weight::operator-");
    Weight r = a;
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] -= b.coeffs[j];
    return r;
}

Weight operator-(const Weight& a) {
    Weight r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

Int Character::mass() const {
    Int total = 0;
    for (const auto& [key, mult] : terms_) total += mult;
    return total;
}

Int Character::multiplicity(const Weight& w) const {
    auto it = terms_.find(w.coeffs);
    return it == terms_.end() ? Int(0) : it->second;
}

void Character::add(const Weight& w, const Int& mult) {
    if (w.family != family_ || w.rank() != rank_) {
        throw std::invalid_argument(std::string("Character::add: lattice mismatch: ") +
                                    family_name(w.family) + " rank " +
                                    std::to_string(w.rank()) + " into " +
                                    family_name(family_) + " rank " +
                                    std::to_string(rank_));
    }
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(w.coeffs, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

Character char_add(const Character& a, const Character& b) {
    require_same_lattice(a, b, "char_add");
    Character r = a;
    for (const auto& [key, mult] : b.terms()) r.add(Weight(b.family(), key), mult);
    return r;
}

Character char_sub(const Character& a, const Character& b) {
    require_same_lattice(a, b, "char_sub");
    Character r = a;
    for (const auto& [key, mult] : b.terms()) r.add(Weight(b.family(), key), -mult);
    return r;
}

Character char_mul(const Character& a, const Character& b) {
    require_same_lattice(a, b, "char_mul");
    Character r(a.family(), a.rank());
    for (const auto& [ka, ma] : a.terms()) {
        const Weight wa(a.family(), ka);
        for (const auto& [kb, mb] : b.terms()) {
            r.add(wa + Weight(b.family(), kb), ma * mb);
        }
    }
    return r;
}

Character map_char(const Character& c, Family out_family, int out_rank,
                   const std::function<Weight(const Weight&)>& f) {
    Character r(out_family, out_rank);
    for (const auto& [key, mult] : c.terms()) {
        r.add(f(Weight(c.family(), key)), mult);
    }
    return r;
}

Weight fold_weight(const Weight& w) {
    if (w.family != Family::A || w.rank() % 2 == 0 || w.rank() < 1) {
        throw std::invalid_argument("fold_weight: needs a type A weight of odd rank, got " +
                                    std::string(family_name(w.family)) + " rank " +
                                    std::to_string(w.rank()));
    }
    const int n = (w.rank() + 1) / 2;
    Weight r(Family::Twisted, n);
    for (int i = 1; i < n; ++i) {
        r.coeffs[static_cast<std::size_t>(i - 1)] =
            w.coeffs[static_cast<std::size_t>(i - 1)] +
            w.coeffs[static_cast<std::size_t>(2 * n - i - 1)];
    }
    r.coeffs[static_cast<std::size_t>(n - 1)] = w.coeffs[static_cast<std::size_t>(n - 1)];
    return r;
}

Character fold_char(const Character& c) {
    if (c.family() != Family::A || c.rank() % 2 == 0) {
        throw std::invalid_argument("fold_char: needs a type A character of odd rank");
    }
    const int n = (c.rank() + 1) / 2;
    return map_char(c, Family::Twisted, n, fold_weight);
}

Weight pi_weight(const Weight& w) {
    if (w.family != Family::B || w.rank() < 1) {
        throw std::invalid_argument("pi_weight: needs a type B weight, got " +
                                    std::string(family_name(w.family)));
    }
    const std::size_t last = w.coeffs.size() - 1;
    if (w.coeffs[last] % 2 != 0) {
        throw std::invalid_argument("pi_weight: odd short-node coefficient " +
                                    std::to_string(w.coeffs[last]));
    }
    Weight r(Family::Twisted, w.rank());
    r.coeffs = w.coeffs;
    r.coeffs[last] /= 2;
    return r;
}

Character pi_char(const Character& c) {
    if (c.family() != Family::B) {
        throw std::invalid_argument("pi_char: needs a type B character");
    }
    return map_char(c, Family::Twisted, c.rank(), pi_weight);
}

Weight lpi_weight(const Weight& w) {
    if (w.family != Family::Twisted || w.rank() < 1) {
        throw std::invalid_argument("lpi_weight: needs a twisted weight, got " +
                                    std::string(family_name(w.family)));
    }
    Weight r(Family::B, w.rank());
    const std::size_t last = w.coeffs.size() - 1;
    for (std::size_t j = 0; j < last; ++j) {
        if (w.coeffs[j] % 2 != 0) return r;
    }
    for (std::size_t j = 0; j < last; ++j) r.coeffs[j] = w.coeffs[j] / 2;
    r.coeffs[last] = w.coeffs[last];
    return r;
}

Character lpi_char(const Character& c) {
    if (c.family() != Family::Twisted) {
        throw std::invalid_argument("lpi_char: needs a twisted character");
    }
    return map_char(c, Family::B, c.rank(), lpi_weight);
}

bool char_dominates(const Character& big, const Character& small) {
    require_same_lattice(big, small, "char_dominates");
    auto ib = big.terms().begin();
    auto is = small.terms().begin();
    while (ib != big.terms().end() || is != small.terms().end()) {
        if (is == small.terms().end() || (ib != big.terms().end() && ib->first < is->first)) {
            if (ib->second < 0) return false;
            ++ib;
        } else if (ib == big.terms().end() || is->first < ib->first) {
            if (is->second > 0) return false;
            ++is;
        } else {
            if (ib->second < is->second) return false;
            ++ib;
            ++is;
        }
    }
    return true;
}

std::vector<std::pair<Weight, Int>> char_diff(const Character& a, const Character& b) {
    require_same_lattice(a, b, "char_diff");
    std::vector<std::pair<Weight, Int>> out;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            out.emplace_back(Weight(a.family(), ia->first), ia->second);
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            out.emplace_back(Weight(a.family(), ib->first), -ib->second);
            ++ib;
        } else {
            if (ia->second != ib->second) {
                out.emplace_back(Weight(a.family(), ia->first), ia->second - ib->second);
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace snakechar
