#pragma once

/// @file monomial.hpp
/// @brief Laurent monomials in the variables Y_{i,+-q^k} (untwisted) and
///        Z_{i,+-q^k} (twisted), and multisets of them.
///
/// Spectral parameters are confined to +-q^k with integer k; the sign and
/// the exponent of q are stored separately in the key. YMonomial and
/// ZMonomial share the representation but are distinct types, so the two
/// variable alphabets cannot be mixed by accident.

#include <map>
#include <stdexcept>
#include <string>

#include "snakechar/bigint.hpp"
#include "snakechar/lattice.hpp"

namespace snakechar {

/// Key of one variable: index i, sign of the spectral parameter and the
/// power of q, i.e. Y_{index, sign * q^power}.
struct MonKey {
    int index = 0;
    int sign = 1;
    int power = 0;

    friend auto operator<=>(const MonKey&, const MonKey&) = default;
};

template <class Tag>
class BasicMonomial {
  public:
    using Exponents = std::map<MonKey, int>;

    BasicMonomial() = default;

    const Exponents& exponents() const { return exps_; }
    bool empty() const { return exps_.empty(); }

    int exponent(const MonKey& key) const {
        auto it = exps_.find(key);
        return it == exps_.end() ? 0 : it->second;
    }

    /// Multiplies by the variable key raised to e; zero exponents are
    /// erased so the map stays canonical.
    void mul(const MonKey& key, int e) {
        if (e == 0) return;
        auto [it, inserted] = exps_.emplace(key, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) exps_.erase(it);
        }
    }

    BasicMonomial& operator*=(const BasicMonomial& other) {
        for (const auto& [key, e] : other.exps_) mul(key, e);
        return *this;
    }

    friend BasicMonomial operator*(BasicMonomial a, const BasicMonomial& b) {
        a *= b;
        return a;
    }

    BasicMonomial inverse() const {
        BasicMonomial r;
        for (const auto& [key, e] : exps_) r.exps_.emplace(key, -e);
        return r;
    }

    /// True iff all exponents are nonnegative.
    bool dominant() const {
        for (const auto& [key, e] : exps_) {
            if (e < 0) return false;
        }
        return true;
    }

    friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;

  private:
    Exponents exps_;
};

struct YTag {};
struct ZTag {};

using YMonomial = BasicMonomial<YTag>;
using ZMonomial = BasicMonomial<ZTag>;

/// Multisets of monomials with exact multiplicities.
using YQChar = std::map<YMonomial, Int>;
using ZQChar = std::map<ZMonomial, Int>;

/// Weight of a monomial: each variable with index i contributes its
/// exponent to the coefficient of the i-th fundamental weight.
template <class Tag>
Weight monomial_weight(const BasicMonomial<Tag>& m, Family family, int rank) {
    Weight w(family, rank);
    for (const auto& [key, e] : m.exponents()) {
        if (key.index < 1 || key.index > rank) {
            throw std::invalid_argument(
                "monomial_weight: variable index out of range: index=" +
                std::to_string(key.index) + ", rank=" + std::to_string(rank));
        }
        w.coeffs[static_cast<std::size_t>(key.index - 1)] += e;
    }
    return w;
}

}  // namespace snakechar
