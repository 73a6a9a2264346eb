#include "flagcycles/plane.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "flagcycles/errors.hpp"
#include "scanner.hpp"

namespace flagcycles {

using boost::multiprecision::cpp_int;

namespace {

// > 0 when p lies to the left of the directed line a -> b.
int orientation(const Point& a, const Point& b, const Point& p) {
  const Rational det = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  return det.sign();
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_downward_ray(const Point& v, const Point& puncture) {
  return v.x == puncture.x && v.y < puncture.y;
}

}  // namespace

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

namespace {

Rational read_rational(detail::Scanner& in) {
  const auto line = in.line();
  const auto column = in.column();
  std::string numerator = in.integer_text();
  if (in.consume('/')) {
    std::string denominator = in.integer_text();
    if (denominator.front() == '-' || denominator.front() == '+') {
      throw SyntaxError("signed denominator", line, column, {"digits"});
    }
    cpp_int den(denominator);
    if (den == 0) throw SyntaxError("zero denominator", line, column);
    return Rational(cpp_int(numerator), den);
  }
  if (in.consume('.')) {
    std::string fraction;
    while (!in.at_end() && std::isdigit(static_cast<unsigned char>(in.peek()))) {
      fraction.push_back(in.advance());
    }
    if (fraction.empty()) in.fail("malformed decimal", {"digits"});
    const bool negative = numerator.front() == '-';
    cpp_int whole(numerator);
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(fraction.size()));
    cpp_int frac(fraction);
    return Rational(whole * scale + (negative ? -frac : frac), scale);
  }
  return Rational(cpp_int(numerator));
}

Point read_point(detail::Scanner& in) {
  in.expect('(');
  in.skip_space();
  Rational x = read_rational(in);
  in.skip_space();
  in.expect(',');
  in.skip_space();
  Rational y = read_rational(in);
  in.skip_space();
  in.expect(')');
  return {std::move(x), std::move(y)};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  detail::Scanner in(text);
  in.skip_space();
  auto r = read_rational(in);
  in.expect_end();
  return r;
}

Point parse_point(std::string_view text) {
  detail::Scanner in(text);
  in.skip_space();
  auto p = read_point(in);
  in.expect_end();
  return p;
}

PuncturedPlane::PuncturedPlane(std::vector<Point> punctures) : punctures_(std::move(punctures)) {
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    for (std::size_t j = i + 1; j < punctures_.size(); ++j) {
      if (punctures_[i].x == punctures_[j].x) {
        throw DomainError("punctures " + to_string(punctures_[i]) + " and " +
                          to_string(punctures_[j]) + " share an x-coordinate");
      }
    }
  }
}

Point PuncturedPlane::default_base() const {
  if (punctures_.empty()) return {Rational(1, 7), Rational(1, 3)};
  const auto rightmost = std::max_element(punctures_.begin(), punctures_.end(),
                                          [](const Point& a, const Point& b) { return a.x < b.x; });
  return {rightmost->x + Rational(22, 7), rightmost->y + Rational(1, 3)};
}

FlaggedLoop::FlaggedLoop(std::vector<Point> vertices, std::size_t flag, Traversal traversal)
    : vertices_(std::move(vertices)), flag_(flag), traversal_(traversal) {
  if (vertices_.size() < 3) throw DomainError("loop needs at least 3 vertices");
  if (flag_ >= vertices_.size()) throw DomainError("flag index out of range");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[(i + 1) % vertices_.size()]) {
      throw DomainError("consecutive loop vertices coincide at " + to_string(vertices_[i]));
    }
  }
}

std::vector<Point> FlaggedLoop::walk() const {
  const std::size_t n = vertices_.size();
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = traversal_ == Traversal::kForward ? (flag_ + k) % n : (flag_ + n - k) % n;
    out.push_back(vertices_[i]);
  }
  return out;
}

FlaggedLoop FlaggedLoop::reversed() const {
  return FlaggedLoop(vertices_, flag_,
                     traversal_ == Traversal::kForward ? Traversal::kBackward : Traversal::kForward);
}

void check_avoids(const FlaggedLoop& loop, const PuncturedPlane& plane) {
  const auto& v = loop.vertices();
  for (const auto& p : plane.punctures()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (on_segment(v[i], v[(i + 1) % v.size()], p)) {
        throw DomainError("loop passes through puncture " + to_string(p));
      }
    }
  }
}

std::int64_t winding_number(const FlaggedLoop& loop, const Point& p) {
  const auto& v = loop.vertices();
  std::int64_t winding = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (on_segment(a, b, p)) throw DomainError("loop passes through puncture " + to_string(p));
    // Half-open in x so an edge ending on the ray is counted exactly once.
    if (a.x < p.x && p.x <= b.x && orientation(a, b, p) > 0) ++winding;
    if (b.x < p.x && p.x <= a.x && orientation(a, b, p) < 0) --winding;
  }
  return loop.traversal() == Traversal::kForward ? winding : -winding;
}

std::vector<std::int64_t> winding_profile(const FlaggedLoop& loop, const PuncturedPlane& plane) {
  std::vector<std::int64_t> out;
  out.reserve(plane.size());
  for (const auto& p : plane.punctures()) out.push_back(winding_number(loop, p));
  return out;
}

FlaggedLoop normalize_flag(const FlaggedLoop& loop, const Point& base, const PuncturedPlane& plane) {
  for (const auto& p : plane.punctures()) {
    if (p == base) throw DomainError("base " + to_string(base) + " is a puncture");
  }
  const auto& v = loop.vertices();
  const std::size_t n = v.size();
  const std::size_t k = loop.flag();
  std::vector<Point> out;
  if (base == v[k]) {
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(v[(k + i) % n]);
    return FlaggedLoop(std::move(out), 0, loop.traversal());
  }
  for (const auto& p : plane.punctures()) {
    if (on_segment(v[k], base, p)) {
      throw RerouteError("corridor from " + to_string(v[k]) + " to " + to_string(base) +
                         " meets puncture " + to_string(p));
    }
  }
  out.reserve(n + 2);
  out.push_back(base);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(v[(k + i) % n]);
  return FlaggedLoop(std::move(out), 0, loop.traversal());
}

FlaggedLoop connected_sum(const FlaggedLoop& l1, Sign s, Sign t, const FlaggedLoop& l2,
                          const Point& base, const PuncturedPlane& plane) {
  const auto first = normalize_flag(l1, base, plane);
  const auto second = normalize_flag(l2, base, plane);
  auto out = (s == Sign::kPlus ? first : first.reversed()).walk();
  const auto tail = (-t == Sign::kPlus ? second : second.reversed()).walk();
  out.insert(out.end(), tail.begin(), tail.end());
  return FlaggedLoop(std::move(out), 0, Traversal::kForward);
}

FreeWord::FreeWord(const std::vector<FreeLetter>& letters) {
  for (const auto& l : letters) {
    if (!letters_.empty() && letters_.back().puncture == l.puncture &&
        letters_.back().exponent == -l.exponent) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

std::int64_t FreeWord::exponent_sum(std::uint32_t puncture) const {
  std::int64_t sum = 0;
  for (const auto& l : letters_) {
    if (l.puncture == puncture) sum += l.exponent;
  }
  return sum;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<FreeLetter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(joined);
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "\xCE\xB5";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out.push_back(' ');
    out += "x" + std::to_string(l.puncture + 1);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

FreeWord crossing_word(const FlaggedLoop& loop, const PuncturedPlane& plane) {
  check_avoids(loop, plane);
  const auto walk = loop.walk();
  for (const auto& v : walk) {
    for (const auto& p : plane.punctures()) {
      if (on_downward_ray(v, p)) {
        throw PerturbationRequired("vertex " + to_string(v) + " lies on the ray below puncture " +
                                   to_string(p));
      }
    }
  }
  std::vector<FreeLetter> letters;
  struct Hit {
    Rational t;
    FreeLetter letter;
  };
  std::vector<Hit> hits;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Point& a = walk[i];
    const Point& b = walk[(i + 1) % walk.size()];
    if (a.x == b.x) continue;
    hits.clear();
    const bool eastward = a.x < b.x;
    for (std::size_t j = 0; j < plane.size(); ++j) {
      const Point& p = plane[j];
      if (!(std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x))) continue;
      const int side = orientation(a, b, p);
      // The edge passes below p iff p is on its left when heading east.
      if (eastward ? side > 0 : side < 0) {
        hits.push_back({(p.x - a.x) / (b.x - a.x),
                        {static_cast<std::uint32_t>(j), static_cast<std::int8_t>(eastward ? 1 : -1)}});
      }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.t < r.t; });
    for (const auto& h : hits) letters.push_back(h.letter);
  }
  return FreeWord(letters);
}

std::string to_string(const FlaggedLoop& loop) {
  std::string out = "loop " + std::to_string(loop.flag()) + ' ' +
                    (loop.traversal() == Traversal::kForward ? 'F' : 'B');
  for (const auto& v : loop.vertices()) out += ' ' + to_string(v);
  return out;
}

namespace {

FlaggedLoop read_loop(detail::Scanner& in) {
  in.skip_space();
  if (!in.consume("loop")) in.fail("expected a loop declaration", {"'loop'"});
  if (!in.skip_space()) in.fail("malformed loop", {"whitespace"});
  const auto flag_text = in.integer_text();
  if (flag_text.front() == '-' || flag_text.front() == '+') in.fail("flag index must be unsigned");
  const std::size_t flag = std::stoull(flag_text);
  in.skip_space();
  Traversal traversal;
  if (in.consume('F')) {
    traversal = Traversal::kForward;
  } else if (in.consume('B')) {
    traversal = Traversal::kBackward;
  } else {
    in.fail("malformed loop", {"'F'", "'B'"});
  }
  std::vector<Point> vertices;
  in.skip_space();
  while (!in.at_end()) {
    vertices.push_back(read_point(in));
    in.skip_space();
  }
  return FlaggedLoop(std::move(vertices), flag, traversal);
}

}  // namespace

FlaggedLoop parse_loop(std::string_view text) {
  detail::Scanner in(text);
  return read_loop(in);
}

LoopFile parse_loop_file(std::string_view text) {
  std::optional<PuncturedPlane> plane;
  std::vector<FlaggedLoop> loops;
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
    try {
      if (!plane) {
        if (!in.consume("punctures:")) in.fail("file must start with the puncture list", {"'punctures:'"});
        std::vector<Point> punctures;
        in.skip_space();
        while (!in.at_end()) {
          punctures.push_back(read_point(in));
          in.skip_space();
        }
        plane.emplace(std::move(punctures));
      } else {
        auto loop = read_loop(in);
        check_avoids(loop, *plane);
        loops.push_back(std::move(loop));
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.message(), line_no, e.column(), e.expected());
    } catch (const DomainError& e) {
      throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!plane) throw SyntaxError("missing puncture list", line_no, 1, {"'punctures:'"});
  return {std::move(*plane), std::move(loops)};
}

LoopSampler::LoopSampler(PuncturedPlane plane, Point base, std::uint64_t seed)
    : plane_(std::move(plane)), base_(std::move(base)), rng_(seed) {
  for (const auto& p : plane_.punctures()) {
    if (p == base_ || on_downward_ray(base_, p)) {
      throw DomainError("sampler base " + to_string(base_) + " touches puncture " + to_string(p));
    }
  }
}

double LoopSampler::uniform(double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

Point LoopSampler::jitter_point(double x, double y) const {
  constexpr std::int64_t kDenominator = 1000;
  return {Rational(std::llround(x * kDenominator), kDenominator),
          Rational(std::llround(y * kDenominator), kDenominator)};
}

bool LoopSampler::usable(const FlaggedLoop& loop) const {
  for (const auto& v : loop.vertices()) {
    for (const auto& p : plane_.punctures()) {
      if (v == p || on_downward_ray(v, p)) return false;
    }
  }
  try {
    check_avoids(loop, plane_);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

FlaggedLoop LoopSampler::around(std::size_t center, int turns) {
  if (turns == 0) return contractible();
  const Point& c = plane_[center];
  const double cx = c.x.convert_to<double>();
  const double cy = c.y.convert_to<double>();
  const double start =
      std::atan2(base_.y.convert_to<double>() - cy, base_.x.convert_to<double>() - cx);
  const int steps_per_turn = 6;
  const int steps = steps_per_turn * std::abs(turns);
  const double direction = turns > 0 ? 1.0 : -1.0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Every edge sweeps less than half a turn around c, so the winding number
    // around c is exactly `turns`.
    std::vector<Point> vertices{base_};
    for (int j = 1; j < steps; ++j) {
      const double angle =
          start + direction * 2.0 * std::numbers::pi * (j + uniform(-0.4, 0.4)) / steps_per_turn;
      const double radius = uniform(0.5, 2.5);
      vertices.push_back(jitter_point(cx + radius * std::cos(angle), cy + radius * std::sin(angle)));
    }
    Traversal traversal = Traversal::kForward;
    if (rng_() & 1) {
      std::reverse(vertices.begin() + 1, vertices.end());
      traversal = Traversal::kBackward;
    }
    FlaggedLoop loop(std::move(vertices), 0, traversal);
    if (usable(loop) && winding_number(loop, c) == turns) return loop;
  }
  throw DomainError("could not sample a loop around puncture " + to_string(c));
}

FlaggedLoop LoopSampler::contractible() {
  const double bx = base_.x.convert_to<double>();
  const double by = base_.y.convert_to<double>();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> vertices{base_};
    for (int j = 0; j < 2; ++j) {
      vertices.push_back(jitter_point(bx + uniform(-0.5, 0.5), by + uniform(-0.5, 0.5)));
    }
    if (vertices[1] == vertices[2] || vertices[1] == base_ || vertices[2] == base_) continue;
    FlaggedLoop loop(std::move(vertices), 0, rng_() & 1 ? Traversal::kBackward : Traversal::kForward);
    if (!usable(loop)) continue;
    const auto profile = winding_profile(loop, plane_);
    // A triangle with winding 0 around a point does not enclose it.
    if (std::all_of(profile.begin(), profile.end(), [](std::int64_t w) { return w == 0; })) {
      return loop;
    }
  }
  throw DomainError("could not sample a contractible loop near " + to_string(base_));
}

FlaggedLoop LoopSampler::any(int max_turns) {
  const auto center = static_cast<std::size_t>(rng_() % plane_.size());
  const auto span = static_cast<std::uint64_t>(2 * max_turns + 1);
  const int turns = static_cast<int>(rng_() % span) - max_turns;
  return around(center, turns);
}

GroupLawReport verify_group_law(const PuncturedPlane& plane, std::size_t samples,
                                std::uint64_t seed) {
  if (plane.size() != 1) throw DomainError("group law check needs exactly one puncture");
  const Point& p = plane[0];
  const Point base = plane.default_base();
  LoopSampler sampler(plane, base, seed);

  GroupLawReport report;
  report.samples = samples;
  if (samples == 0) return report;

  std::vector<FlaggedLoop> loops;
  loops.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) loops.push_back(sampler.any(3));
  const auto unit = sampler.contractible();

  auto wind = [&](const FlaggedLoop& l) { return winding_number(l, p); };
  auto compose = [&](const FlaggedLoop& a, const FlaggedLoop& b) {
    return connected_sum(a, Sign::kPlus, Sign::kMinus, b, base, plane);
  };
  auto fail = [&](CheckTally& tally, std::string what) {
    ++tally.failures;
    report.counterexamples.push_back(std::move(what));
  };

  for (std::size_t i = 0; i < samples; ++i) {
    const auto& a = loops[i];
    const auto& b = loops[(i + 1) % samples];
    const auto& c = loops[(i + 2) % samples];
    const auto wa = wind(a);
    const auto wb = wind(b);

    ++report.composition.checks;
    if (const auto w = wind(compose(a, b)); w != wa + wb) {
      fail(report.composition, "composition: sample " + std::to_string(i) + ": " +
                                   std::to_string(wa) + " + " + std::to_string(wb) + " gave " +
                                   std::to_string(w));
    }

    report.identity.checks += 2;
    if (const auto w = wind(compose(unit, a)); w != wa) {
      fail(report.identity, "left identity: sample " + std::to_string(i) + ": expected " +
                                std::to_string(wa) + ", got " + std::to_string(w));
    }
    if (const auto w = wind(compose(a, unit)); w != wa) {
      fail(report.identity, "right identity: sample " + std::to_string(i) + ": expected " +
                                std::to_string(wa) + ", got " + std::to_string(w));
    }

    ++report.inverse.checks;
    if (const auto w = wind(connected_sum(a, Sign::kPlus, Sign::kPlus, a, base, plane)); w != 0) {
      fail(report.inverse,
           "inverse: sample " + std::to_string(i) + ": c c^- has winding " + std::to_string(w));
    }

    ++report.associativity.checks;
    const auto left = wind(compose(compose(a, b), c));
    const auto right = wind(compose(a, compose(b, c)));
    if (left != right) {
      fail(report.associativity, "associativity: sample " + std::to_string(i) + ": " +
                                     std::to_string(left) + " vs " + std::to_string(right));
    }
  }
  return report;
}

std::string to_string(const GroupLawReport& report) {
  std::ostringstream os;
  auto line = [&](const char* name, const CheckTally& t) {
    os << "  " << name << ": " << t.checks << " checks, " << t.failures << " failures\n";
  };
  os << "group law over " << report.samples << " sampled loops\n";
  line("composition", report.composition);
  line("identity", report.identity);
  line("inverse", report.inverse);
  line("associativity", report.associativity);
  for (const auto& c : report.counterexamples) os << "  counterexample: " << c << '\n';
  os << (report.passed() ? "PASS" : "FAIL");
  return os.str();
}

}  // namespace flagcycles
