#pragma once

// Flagged polygonal loops in the plane minus finitely many punctures.
// Everything is exact: coordinates are rationals and every invariant is an
// integer obtained by counting signed crossings of the vertical ray pointing
// down from each puncture.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagcycles/word.hpp"

namespace flagcycles {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// `p` or `p/q`
std::string to_string(const Rational& r);
/// `(x,y)`
std::string to_string(const Point& p);

/// Accepts integers, `p/q` fractions and finite decimals such as `-1.25`.
Rational parse_rational(std::string_view text);
Point parse_point(std::string_view text);

class PuncturedPlane {
 public:
  /// Throws DomainError unless the puncture x-coordinates are pairwise distinct.
  explicit PuncturedPlane(std::vector<Point> punctures);

  const std::vector<Point>& punctures() const noexcept { return punctures_; }
  std::size_t size() const noexcept { return punctures_.size(); }
  const Point& operator[](std::size_t i) const { return punctures_.at(i); }

  /// A base point to the right of every puncture, off every crossing ray.
  Point default_base() const;

  friend bool operator==(const PuncturedPlane&, const PuncturedPlane&) = default;

 private:
  std::vector<Point> punctures_;
};

enum class Traversal : std::uint8_t { kForward, kBackward };

/// Closed polygon with a marked vertex and a direction of travel at it.
class FlaggedLoop {
 public:
  /// Throws DomainError for fewer than 3 vertices, a flag out of range or
  /// two cyclically consecutive vertices that coincide.
  FlaggedLoop(std::vector<Point> vertices, std::size_t flag,
              Traversal traversal = Traversal::kForward);

  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  std::size_t flag() const noexcept { return flag_; }
  Traversal traversal() const noexcept { return traversal_; }
  const Point& flag_point() const { return vertices_[flag_]; }

  /// Vertices in the order they are visited, starting at the flag.
  std::vector<Point> walk() const;

  /// Same polygon travelled the other way.
  FlaggedLoop reversed() const;

  friend bool operator==(const FlaggedLoop&, const FlaggedLoop&) = default;

 private:
  std::vector<Point> vertices_;
  std::size_t flag_;
  Traversal traversal_;
};

/// Throws DomainError if a vertex or edge of `loop` touches a puncture.
void check_avoids(const FlaggedLoop& loop, const PuncturedPlane& plane);

/// Signed number of turns of `loop` around `p`, in the loop's traversal
/// direction. Throws DomainError if the loop touches `p`.
std::int64_t winding_number(const FlaggedLoop& loop, const Point& p);

/// Winding number around every puncture, in puncture order.
std::vector<std::int64_t> winding_profile(const FlaggedLoop& loop, const PuncturedPlane& plane);

/// Loop flagged at `base`: a straight corridor base -> flag, the original
/// loop, and the same corridor back. Throws RerouteError when the corridor
/// meets a puncture.
FlaggedLoop normalize_flag(const FlaggedLoop& loop, const Point& base, const PuncturedPlane& plane);

/// Both loops rerouted to `base`, then l1 travelled with orientation s
/// followed by l2 with orientation -t.
FlaggedLoop connected_sum(const FlaggedLoop& l1, Sign s, Sign t, const FlaggedLoop& l2,
                          const Point& base, const PuncturedPlane& plane);

struct FreeLetter {
  std::uint32_t puncture = 0;
  std::int8_t exponent = 1;  // +1 or -1

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Freely reduced word in x_1^(+-1), ..., x_k^(+-1).
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces `letters` freely.
  explicit FreeWord(const std::vector<FreeLetter>& letters);

  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Exponent sum of x_puncture.
  std::int64_t exponent_sum(std::uint32_t puncture) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

/// `x1 x2^-1`, ε when empty; punctures are numbered from 1.
std::string to_string(const FreeWord& w);

/// Signed crossings of the downward puncture rays, read from the flag in
/// traversal order: crossing left-to-right below puncture j records x_j.
/// Throws PerturbationRequired if a vertex lies on a ray.
FreeWord crossing_word(const FlaggedLoop& loop, const PuncturedPlane& plane);

/// One loop per line: `loop <flag> <F|B> (x1,y1) (x2,y2) ...`, flag 0-based.
std::string to_string(const FlaggedLoop& loop);
FlaggedLoop parse_loop(std::string_view text);

struct LoopFile {
  PuncturedPlane plane;
  std::vector<FlaggedLoop> loops;
};

/// Line 1 `punctures: (x,y) ...`, then one `loop` line per loop; blank lines
/// and `#` comments ignored. Every loop is checked against the punctures.
LoopFile parse_loop_file(std::string_view text);

/// Seeded generator of loops flagged at a common base point.
class LoopSampler {
 public:
  LoopSampler(PuncturedPlane plane, Point base, std::uint64_t seed);

  const Point& base() const noexcept { return base_; }

  /// Loop through the base winding `turns` times around puncture `center`.
  FlaggedLoop around(std::size_t center, int turns);
  /// Small loop near the base enclosing no puncture.
  FlaggedLoop contractible();
  /// Random puncture and a random number of turns in [-max_turns, max_turns].
  FlaggedLoop any(int max_turns);

 private:
  double uniform(double lo, double hi);
  Point jitter_point(double x, double y) const;
  bool usable(const FlaggedLoop& loop) const;

  PuncturedPlane plane_;
  Point base_;
  std::mt19937_64 rng_;
};

struct CheckTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct GroupLawReport {
  std::size_t samples = 0;
  CheckTally composition;
  CheckTally identity;
  CheckTally inverse;
  CheckTally associativity;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Samples loops with at most three turns around the single puncture of
/// `plane` and checks that composition c1^+ # c2^- adds winding numbers, that
/// a contractible loop is a two-sided identity, that c # c^- has winding 0
/// and that iterated sums associate. Throws DomainError unless `plane` has
/// exactly one puncture.
GroupLawReport verify_group_law(const PuncturedPlane& plane, std::size_t samples,
                                std::uint64_t seed);

std::string to_string(const GroupLawReport& report);

}  // namespace flagcycles
