#pragma once

// Quotient tower of the word monoid:
//   words -> signed multisets (commutative stage)
//         -> Z^N (abelianization, n_i = #c_i^+ - #c_i^-)
//         -> Z^N / rowspan(L) (model of the homology target)
// All integer arithmetic is overflow-checked and throws OverflowError.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagcycles/word.hpp"

namespace flagcycles {

/// Occurrence counts of c_i^+ and c_i^- for every generator.
class SignedMultiset {
 public:
  explicit SignedMultiset(std::size_t generators);
  SignedMultiset(std::vector<std::int64_t> plus, std::vector<std::int64_t> minus);

  std::size_t generators() const noexcept { return plus_.size(); }
  std::int64_t plus(std::size_t gen) const { return plus_.at(gen); }
  std::int64_t minus(std::size_t gen) const { return minus_.at(gen); }
  std::int64_t total() const;

  void add(Letter l);

  friend SignedMultiset operator+(const SignedMultiset& a, const SignedMultiset& b);
  friend bool operator==(const SignedMultiset&, const SignedMultiset&) = default;

 private:
  std::vector<std::int64_t> plus_;
  std::vector<std::int64_t> minus_;
};

class AbelianVector {
 public:
  AbelianVector() = default;
  explicit AbelianVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  static AbelianVector zero(std::size_t dimension);

  std::size_t dimension() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  friend AbelianVector operator+(const AbelianVector& a, const AbelianVector& b);
  friend AbelianVector operator-(const AbelianVector& a, const AbelianVector& b);
  friend AbelianVector operator-(const AbelianVector& a);
  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Integer row lattice in Z^N. The Hermite normal form of the row span is
/// computed once at construction.
class RelationLattice {
 public:
  /// Empty lattice: the quotient is Z^N itself.
  explicit RelationLattice(std::size_t dimension);
  RelationLattice(std::size_t dimension, std::vector<std::vector<std::int64_t>> rows);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  /// Row-style Hermite normal form: nonzero rows only, strictly increasing
  /// pivot columns, positive pivots, entries above each pivot in [0, pivot).
  const std::vector<std::vector<std::int64_t>>& hermite_basis() const noexcept { return hnf_; }
  const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }

  friend bool operator==(const RelationLattice& a, const RelationLattice& b) {
    return a.dimension_ == b.dimension_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t dimension_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::vector<std::int64_t>> hnf_;
  std::vector<std::size_t> pivots_;
};

/// Canonical representative of a coset v + rowspan(L).
class HomologyClass {
 public:
  const AbelianVector& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  friend HomologyClass reduce_coset(const AbelianVector& v, const RelationLattice& lattice);
  explicit HomologyClass(AbelianVector rep) : rep_(std::move(rep)) {}

  AbelianVector rep_;
};

struct TowerImage {
  SignedMultiset multiset;
  AbelianVector abelian;
  HomologyClass homology;
};

SignedMultiset multiset_quotient(const Word& w);

/// (p_i, m_i) -> p_i - m_i
AbelianVector difference(const SignedMultiset& m);

AbelianVector abelianize(const Word& w);

/// Throws DomainError when dimensions differ.
HomologyClass reduce_coset(const AbelianVector& v, const RelationLattice& lattice);

/// The square words -> Z^N -> Z^N/L commutes over the product of u and v.
bool diagram_check(const Word& u, const Word& v, const RelationLattice& lattice);

TowerImage tower_image(const Word& w, const RelationLattice& lattice);

/// `(n_1, ..., n_N)`
std::string to_string(const AbelianVector& v);
/// `{a+:2, a-:0, b+:0, b-:1}`
std::string to_string(const SignedMultiset& m, const GeneratorSet& gens);

AbelianVector parse_vector(std::string_view text);

/// One row per line, whitespace-separated integers; blank lines and `#`
/// comments ignored. Every row must have `dimension` entries.
RelationLattice parse_lattice(std::string_view text, std::size_t dimension);

}  // namespace flagcycles
