#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace logpot {

std::size_t next_pow2(std::size_t n);

// In-place iterative radix-2 transform; a.size() must be a power of two.
// The inverse includes the 1/N factor.
void fft(std::vector<std::complex<double>>& a, bool inverse);

// y = T x for the symmetric Toeplitz matrix T_ij = symbol[|i-j|], applied
// through a circulant embedding of size next_pow2(2n). O(n log n) per apply
// and safe to call concurrently.
class ToeplitzMatvec {
 public:
  ToeplitzMatvec() = default;
  explicit ToeplitzMatvec(std::span<const double> symbol);

  std::size_t size() const { return n_; }
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator()(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::complex<double>> symbol_fft_;
};

}  // namespace logpot
