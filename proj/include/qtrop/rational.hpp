#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qtrop/error.hpp"

namespace qtrop {

/** Exact rational scalar (GMP-backed). All geometry and linear algebra over
 *  the rationals uses this type; no floating point anywhere. */
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/** Machine integers for dimension vectors, weights and lattice points.
 *  Desk-scale inputs keep every intermediate far below 2^63. */
using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

/** [x]_+ = max(x, 0). */
inline Int pos_part(Int x) { return x > 0 ? x : 0; }

/** Sign of x as -1/0/+1. */
inline int sign_of(Int x) { return (x > 0) - (x < 0); }

/** Euclidean inner product; throws DimensionMismatch on length mismatch. */
inline Int dot(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch,
          "dot: vector lengths differ");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch,
          "add: vector lengths differ");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch,
          "sub: vector lengths differ");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec neg(const IVec& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IVec scale(Int c, const IVec& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/** Componentwise [x]_+ . */
inline IVec pos_part(const IVec& a) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = pos_part(a[i]);
  return r;
}

inline bool is_zero(const IVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

/** Componentwise a <= b. */
inline bool leq(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), ErrorCode::DimensionMismatch,
          "leq: vector lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/** gcd of all entries (nonnegative; 0 for the zero vector). */
inline Int content(const IVec& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline IVec unit_vector(std::size_t n, std::size_t i, Int value = 1) {
  IVec r(n, 0);
  r[i] = value;
  return r;
}

inline std::string to_string(const IVec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

/**
 * Deterministic pseudo-random stream (splitmix64 step function).
 *
 * The standard library's engines are portable but its distributions are
 * implementation-defined; reproducibility across toolchains requires a fixed
 * draw procedure, so the bounded draw below is pinned here.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /** Uniform integer in [lo, hi], inclusive; rejection sampling, unbiased. */
  Int uniform(Int lo, Int hi) {
    require(lo <= hi, ErrorCode::IndexOutOfRange, "Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<Int>(next_u64());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<Int>(v % span);
  }

  /** Derive an independent child stream (for per-sample determinism). */
  Rng fork() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

 private:
  std::uint64_t state_;
};

/** Sampling provenance attached to every sampled quantity in reports. */
struct SampleInfo {
  int samples = 5;
  Int coeffBound = 100;
  std::uint64_t rngSeed = 0;
};

}  // namespace qtrop
