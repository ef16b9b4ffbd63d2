// Copyright 2026 The gtf0 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GTF0_FFT_H_
#define GTF0_FFT_H_

#include <complex>
#include <vector>

namespace gtf0 {

// In-place complex DFT of arbitrary length (FFTW backed, thread-safe).
// The inverse transform includes the 1/N scaling.
void Fft(std::vector<std::complex<double>>* buf, bool inverse);

std::vector<std::complex<double>> FftReal(const std::vector<double>& x);

}  // namespace gtf0

#endif  // GTF0_FFT_H_
