#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace outerdom {

enum class Errc {
  Ok = 0,
  BadIndex,
  CountMismatch,
  DuplicateChord,
  ChordIsBoundary,
  CrossingChords,
  NotAChord,
  NotSimple,
  TooLarge,
  ParseError,
  UnknownName,
  PreconditionViolated,
  ResultNotMaximalOuterplane,
  NotDominating,
  CertificateViolated,
  BoundViolated,
  SolverTooLarge,
  NotTriangulation,
  NotHamiltonCycle,
  ConflictGraphNotBipartite,
  SharedChord,
  NoHamiltonCycle,
  NotFound,
  Internal,
};

const char* errc_name(Errc c);

// All recoverable failures are thrown as Error; the code qualifies the
// contract that was broken and detail may carry a JSON dump (bound failures).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::string detail = {})
      : std::runtime_error(what), code_(code), detail_(std::move(detail)) {}
  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what,
                              std::string detail = {}) {
  throw Error(code, what, std::move(detail));
}

// Boundary positions are 1-indexed and clockwise; arithmetic wraps mod n.
inline int next_pos(int n, int v) { return v == n ? 1 : v + 1; }
inline int prev_pos(int n, int v) { return v == 1 ? n : v - 1; }
inline int pos_add(int n, int v, int d) { return (v - 1 + d) % n + 1; }

// Number of boundary edges on the clockwise walk r -> s; 0 iff r == s.
inline int seg_len(int n, int r, int s) {
  int d = (s - r) % n;
  return d < 0 ? d + n : d;
}

// True iff x lies strictly inside the clockwise walk r -> s.
inline bool in_open_segment(int n, int r, int s, int x) {
  int d = seg_len(n, r, s);
  int dx = seg_len(n, r, x);
  return dx > 0 && dx < d;
}

// Chords {a,b}, {c,d} cross iff exactly one of c, d lies strictly inside
// the clockwise walk a -> b. Shared endpoints never cross.
inline bool chords_cross(int n, int a, int b, int c, int d) {
  if (a == c || a == d || b == c || b == d) return false;
  return in_open_segment(n, a, b, c) != in_open_segment(n, a, b, d);
}

// Exact rational, canonical: den > 0, lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(Errc::Internal, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
};

// ceil(a / b) for b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a / b + (a % b > 0 ? 1 : 0);
}

}  // namespace outerdom
