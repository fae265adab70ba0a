#include "batch.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "qrmt/sampler.hpp"

namespace qrmt::cli {

unsigned resolve_threads(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("QRMT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) job(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

SpectrumBatch sample_batch(const EnsembleParams& p, std::uint64_t seed, std::size_t count, unsigned threads) {
  std::vector<std::vector<double>> spectra(count);
  parallel_for(count, threads, [&](std::size_t i) { spectra[i] = sample_spectrum(p, seed, i); });
  return make_batch(p, std::move(spectra));
}

std::vector<SymmetricMatrix> sample_matrices(const EnsembleParams& p, std::uint64_t seed, std::size_t count,
                                             unsigned threads) {
  std::vector<SymmetricMatrix> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = sample_ensemble(p, seed, i).h; });
  return out;
}

}  // namespace qrmt::cli
