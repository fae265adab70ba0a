#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace qrmt {

/// Independent random stream identified by (master_seed, stream_id).
///
/// The engine is std::mt19937_64 seeded through std::seed_seq from the four
/// 32-bit halves of the two identifiers.  Both are fully specified by the
/// standard, so a given pair reproduces the same sequence on every
/// conforming implementation, independent of how streams are scheduled.
/// Variate transforms are implemented here rather than taken from
/// <random>, whose distribution algorithms are implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  [[nodiscard]] std::uint64_t master_seed() const noexcept { return master_seed_; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on the open interval (0, 1).
  double uniform_open();
  /// Standard normal, Marsaglia polar method (pairs cached).
  double normal();
  /// Exponential(1) by inversion.
  double exponential();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

}  // namespace qrmt
