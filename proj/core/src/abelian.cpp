#include "flagcycles/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "checked.hpp"
#include "flagcycles/errors.hpp"
#include "scanner.hpp"

namespace flagcycles {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_neg;
using detail::checked_sub;
using detail::floor_div;

SignedMultiset::SignedMultiset(std::size_t generators) : plus_(generators, 0), minus_(generators, 0) {}

SignedMultiset::SignedMultiset(std::vector<std::int64_t> plus, std::vector<std::int64_t> minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.size() != minus_.size()) throw DomainError("multiset: count vectors differ in length");
  auto negative = [](std::int64_t c) { return c < 0; };
  if (std::any_of(plus_.begin(), plus_.end(), negative) ||
      std::any_of(minus_.begin(), minus_.end(), negative)) {
    throw DomainError("multiset: negative count");
  }
}

std::int64_t SignedMultiset::total() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < plus_.size(); ++i) {
    sum = checked_add(sum, checked_add(plus_[i], minus_[i]));
  }
  return sum;
}

void SignedMultiset::add(Letter l) {
  auto& slot = (l.sign == Sign::kPlus ? plus_ : minus_).at(l.gen);
  slot = checked_add(slot, 1);
}

SignedMultiset operator+(const SignedMultiset& a, const SignedMultiset& b) {
  if (a.generators() != b.generators()) throw DomainError("multiset: dimension mismatch");
  SignedMultiset out = a;
  for (std::size_t i = 0; i < a.generators(); ++i) {
    out.plus_[i] = checked_add(out.plus_[i], b.plus_[i]);
    out.minus_[i] = checked_add(out.minus_[i], b.minus_[i]);
  }
  return out;
}

AbelianVector AbelianVector::zero(std::size_t dimension) {
  return AbelianVector(std::vector<std::int64_t>(dimension, 0));
}

bool AbelianVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t x) { return x == 0; });
}

AbelianVector operator+(const AbelianVector& a, const AbelianVector& b) {
  if (a.dimension() != b.dimension()) throw DomainError("vector: dimension mismatch");
  AbelianVector out = a;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out.entries_[i] = checked_add(a.entries_[i], b.entries_[i]);
  }
  return out;
}

AbelianVector operator-(const AbelianVector& a, const AbelianVector& b) {
  if (a.dimension() != b.dimension()) throw DomainError("vector: dimension mismatch");
  AbelianVector out = a;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out.entries_[i] = checked_sub(a.entries_[i], b.entries_[i]);
  }
  return out;
}

AbelianVector operator-(const AbelianVector& a) {
  AbelianVector out = a;
  for (auto& x : out.entries_) x = checked_neg(x);
  return out;
}

namespace {

using Row = std::vector<std::int64_t>;

// row -= q * pivot_row
void subtract_multiple(Row& row, std::int64_t q, const Row& pivot_row) {
  if (q == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j) {
    row[j] = checked_sub(row[j], checked_mul(q, pivot_row[j]));
  }
}

std::int64_t magnitude(std::int64_t x) { return x < 0 ? checked_neg(x) : x; }

void hermite_normal_form(std::vector<Row> rows, std::size_t dimension, std::vector<Row>& basis,
                         std::vector<std::size_t>& pivots) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < dimension && top < rows.size(); ++col) {
    // Euclid on column `col` over rows[top..]: keep the smallest nonzero
    // entry at `top` and reduce everything below it.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || magnitude(rows[r][col]) < magnitude(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        subtract_multiple(rows[r], floor_div(rows[r][col], rows[top][col]), rows[top]);
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) {
      for (auto& x : rows[top]) x = checked_neg(x);
    }
    for (std::size_t r = 0; r < top; ++r) {
      subtract_multiple(rows[r], floor_div(rows[r][col], rows[top][col]), rows[top]);
    }
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  basis = std::move(rows);
}

}  // namespace

RelationLattice::RelationLattice(std::size_t dimension) : dimension_(dimension) {}

RelationLattice::RelationLattice(std::size_t dimension, std::vector<std::vector<std::int64_t>> rows)
    : dimension_(dimension), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != dimension_) {
      throw DomainError("lattice row has " + std::to_string(r.size()) + " entries, expected " +
                        std::to_string(dimension_));
    }
  }
  hermite_normal_form(rows_, dimension_, hnf_, pivots_);
}

SignedMultiset multiset_quotient(const Word& w) {
  SignedMultiset out(w.generators()->size());
  for (const auto& l : w.letters()) out.add(l);
  return out;
}

AbelianVector difference(const SignedMultiset& m) {
  std::vector<std::int64_t> out(m.generators());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(m.plus(i), m.minus(i));
  return AbelianVector(std::move(out));
}

AbelianVector abelianize(const Word& w) { return difference(multiset_quotient(w)); }

HomologyClass reduce_coset(const AbelianVector& v, const RelationLattice& lattice) {
  if (v.dimension() != lattice.dimension()) {
    throw DomainError("reduce_coset: vector of dimension " + std::to_string(v.dimension()) +
                      " against lattice of dimension " + std::to_string(lattice.dimension()));
  }
  Row rep(v.entries().begin(), v.entries().end());
  const auto& basis = lattice.hermite_basis();
  const auto& pivots = lattice.pivot_columns();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    subtract_multiple(rep, floor_div(rep[pivots[i]], basis[i][pivots[i]]), basis[i]);
  }
  return HomologyClass(AbelianVector(std::move(rep)));
}

bool diagram_check(const Word& u, const Word& v, const RelationLattice& lattice) {
  return reduce_coset(abelianize(concat(u, v)), lattice) ==
         reduce_coset(abelianize(u) + abelianize(v), lattice);
}

TowerImage tower_image(const Word& w, const RelationLattice& lattice) {
  auto multiset = multiset_quotient(w);
  auto abelian = difference(multiset);
  auto homology = reduce_coset(abelian, lattice);
  return {std::move(multiset), std::move(abelian), std::move(homology)};
}

std::string to_string(const AbelianVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const SignedMultiset& m, const GeneratorSet& gens) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < m.generators(); ++i) {
    if (i) os << ", ";
    os << gens.name(i) << "+:" << m.plus(i) << ", " << gens.name(i) << "-:" << m.minus(i);
  }
  os << '}';
  return os.str();
}

namespace {

std::int64_t to_int64(detail::Scanner& in, const std::string& digits) {
  std::int64_t out = 0;
  bool negative = false;
  std::size_t i = 0;
  if (digits[0] == '-' || digits[0] == '+') {
    negative = digits[0] == '-';
    i = 1;
  }
  try {
    for (; i < digits.size(); ++i) {
      out = checked_add(checked_mul(out, 10), negative ? -(digits[i] - '0') : digits[i] - '0');
    }
  } catch (const OverflowError&) {
    in.fail("integer literal out of range");
  }
  return out;
}

}  // namespace

AbelianVector parse_vector(std::string_view text) {
  detail::Scanner in(text);
  in.skip_space();
  in.expect('(');
  std::vector<std::int64_t> entries;
  in.skip_space();
  if (!in.consume(')')) {
    while (true) {
      in.skip_space();
      entries.push_back(to_int64(in, in.integer_text()));
      in.skip_space();
      if (in.consume(')')) break;
      if (!in.consume(',')) {
        in.fail(in.at_end() ? "unexpected end of input"
                            : std::string("unexpected '") + in.peek() + "'",
                {"','", "')'"});
      }
    }
  }
  in.expect_end();
  return AbelianVector(std::move(entries));
}

RelationLattice parse_lattice(std::string_view text, std::size_t dimension) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    auto line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    detail::Scanner in(line);
    in.skip_space();
    if (in.at_end()) continue;
    std::vector<std::int64_t> row;
    try {
      while (!in.at_end()) {
        row.push_back(to_int64(in, in.integer_text()));
        if (!in.skip_space() && !in.at_end()) {
          in.fail(std::string("unexpected '") + in.peek() + "'", {"whitespace", "end of line"});
        }
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.message(), line_no, e.column(), e.expected());
    }
    if (row.size() != dimension) {
      throw DomainError("lattice line " + std::to_string(line_no) + ": expected " +
                        std::to_string(dimension) + " entries, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return RelationLattice(dimension, std::move(rows));
}

}  // namespace flagcycles
