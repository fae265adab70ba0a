#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "qrmt/matrix.hpp"
#include "qrmt/spectral.hpp"

namespace qrmt::cli {

/// --threads value if positive, else QRMT_THREADS, else the hardware count.
unsigned resolve_threads(int flag);

/// Calls job(i) for i in [0, count) on `threads` workers, each taking a
/// contiguous index range.  Jobs must write only to their own slot.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job);

/// Spectra of draws 0 .. count-1; identical for every thread count.
SpectrumBatch sample_batch(const EnsembleParams& p, std::uint64_t seed, std::size_t count, unsigned threads);

std::vector<SymmetricMatrix> sample_matrices(const EnsembleParams& p, std::uint64_t seed, std::size_t count,
                                             unsigned threads);

}  // namespace qrmt::cli
