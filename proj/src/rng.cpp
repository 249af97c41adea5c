#include "semcond/rng.hpp"

#include <cmath>
#include <numbers>

#include "semcond/errors.hpp"

namespace semcond {

uint64_t Rng::mix(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int64_t Rng::uniform_int(int64_t n) {
  if (n < 1) throw DataError("uniform_int requires n >= 1");
  // Lemire multiply-shift; bias below 2^-64 * n is negligible at our scales.
  return static_cast<int64_t>(
      (static_cast<unsigned __int128>(next_u64()) * static_cast<uint64_t>(n)) >> 64);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite.
  double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

Rng Rng::fork(uint64_t stream) const {
  Rng child(0);
  child.state_ = mix(state_ ^ mix(stream ^ 0xd6e8feb86659fd93ull));
  return child;
}

Tensor sample_gaussian(Rng& rng, int64_t n, int64_t dim) {
  if (n < 1 || dim < 1) throw DataError("sample_gaussian requires n, dim >= 1");
  Tensor t = Tensor::zeros({n, dim});
  for (double& x : t.v) x = rng.gaussian();
  return t;
}

}  // namespace semcond
