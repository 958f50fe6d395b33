#pragma once

/// @file lattice.hpp
/// @brief Weight lattices, formal characters, and the folding and duality
///        maps between them.
///
/// Three lattices appear:
///   - Family::A        type A of some rank r, basis w_1..w_r;
///   - Family::B        type B_n, basis w_1..w_n;
///   - Family::Twisted  the dual lattice with basis wv_1..wv_n.
/// A Weight stores the coefficient vector over the fundamental weights of
/// its lattice. A Character is a finite multiset of weights with exact
/// integer multiplicities (possibly negative, for signed intermediate
/// sums).

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "snakechar/bigint.hpp"

namespace snakechar {

enum class Family { A, B, Twisted };

/// Serialized tag: "A", "B" or "TW".
const char* family_name(Family f);

/// Parses the tag produced by family_name; throws on anything else.
Family family_from_name(const std::string& name);

/// Weight in the fundamental-weight basis; the coefficient of w_i is
/// stored at coeffs[i-1].
struct Weight {
    Family family = Family::A;
    std::vector<std::int64_t> coeffs;

    Weight() = default;
    Weight(Family f, int rank) : family(f), coeffs(static_cast<std::size_t>(rank), 0) {}
    Weight(Family f, std::vector<std::int64_t> c) : family(f), coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;

    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Componentwise sum; both operands must live in the same lattice.
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);

/// Sparse character: map from coefficient vectors to multiplicities.
/// Zero multiplicities are never stored, so equality of characters is
/// equality of the underlying maps.
class Character {
  public:
    using Terms = std::map<std::vector<std::int64_t>, Int>;

    Character() = default;
    Character(Family f, int rank) : family_(f), rank_(rank) {}

    Family family() const { return family_; }
    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Sum of all multiplicities.
    Int mass() const;

    /// Multiplicity of w, zero when absent.
    Int multiplicity(const Weight& w) const;

    /// Adds mult copies of w; erases the key when the total reaches zero.
    void add(const Weight& w, const Int& mult = 1);

    friend bool operator==(const Character&, const Character&) = default;

  private:
    Family family_ = Family::A;
    int rank_ = 0;
    Terms terms_;
};

Character char_add(const Character& a, const Character& b);
Character char_sub(const Character& a, const Character& b);

/// Product in the group ring: convolution of the two weight multisets.
Character char_mul(const Character& a, const Character& b);

/// Applies f to every weight of c and accumulates multiplicities of
/// coinciding images in a character over the target lattice.
Character map_char(const Character& c, Family out_family, int out_rank,
                   const std::function<Weight(const Weight&)>& f);

/// Folding map on type A weights of odd rank 2n-1: the image coefficient
/// of wv_i is k_i + k_{2n-i} for i < n and k_n for i = n.
Weight fold_weight(const Weight& w);
Character fold_char(const Character& c);

/// Duality map on B_n weights whose w_n coefficient is even: halves that
/// coefficient and keeps the others. Throws on an odd w_n coefficient.
Weight pi_weight(const Weight& w);
Character pi_char(const Character& c);

/// Total map from the dual lattice back to B_n: when every wv_i
/// coefficient with i < n is even the image is sum (k_i/2) w_i + k_n w_n,
/// otherwise the zero weight. On characters the zero-weight bucket
/// therefore collects every term outside the sublattice.
Weight lpi_weight(const Weight& w);
Character lpi_char(const Character& c);

/// True iff every multiplicity of small is at most the matching
/// multiplicity of big (absent keys count as zero on both sides).
bool char_dominates(const Character& big, const Character& small);

/// Weights on which the two characters disagree, with multiplicity
/// difference a minus b, in key order.
std::vector<std::pair<Weight, Int>> char_diff(const Character& a, const Character& b);

}  // namespace snakechar
