#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dkm {

using cx = std::complex<double>;

constexpr double kTol = 1e-9;      // residual / trimming tolerance
constexpr double kNodeSep = 1e-6;  // minimal admissible node separation

inline bool is_finite(cx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// ---------------------------------------------------------------------------
// Error taxonomy. Every throwing operation documents which of these it uses.

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidModulus : Error { using Error::Error; };
struct NodesTooClose : Error { using Error::Error; };
struct RootFindingFailed : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct NormTooLarge : Error { using Error::Error; };
struct NotOnSlice : Error { using Error::Error; };
struct NotOnSurface : Error { using Error::Error; };
struct NotCanonical : Error { using Error::Error; };
struct ShapeViolation : Error { using Error::Error; };
struct DegenerateParameter : Error { using Error::Error; };
struct ConfluentRoots : Error { using Error::Error; };
struct PointOffVariety : Error { using Error::Error; };
struct ChartBoundary : Error { using Error::Error; };
struct StiffnessFailure : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Deterministic random source. All distributions are implemented on top of
// splitmix64 so that a (seed, stream) pair yields the same values on every
// platform and regardless of which thread consumes the stream.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for trial `index` of a seeded campaign.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    mix.next();
    return mix;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1).
  double uniform() { return std::ldexp(static_cast<double>(next() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Standard complex Gaussian (independent N(0,1/2) parts is not needed here;
  // unit-variance parts keep the conditioning checks simple).
  cx gaussian() { return cx(normal(), normal()); }

  // Uniform on the disk of radius r.
  cx disk(double r) {
    const double rho = r * std::sqrt(uniform());
    const double th = 6.283185307179586476925286766559 * uniform();
    return cx(rho * std::cos(th), rho * std::sin(th));
  }

 private:
  std::uint64_t state_;
};

}  // namespace dkm
