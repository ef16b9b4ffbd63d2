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

#include "gtf0/fft.h"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace gtf0 {
namespace {

// FFTW planner calls are not thread-safe; execution on distinct plans is.
std::mutex& PlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

void Fft(std::vector<std::complex<double>>* buf, bool inverse) {
  if (buf == nullptr || buf->empty()) {
    throw std::invalid_argument("Fft: empty buffer");
  }
  const int n = static_cast<int>(buf->size());
  if (n == 1) return;
  fftw_complex* data = reinterpret_cast<fftw_complex*>(buf->data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan = fftw_plan_dft_1d(n, data, data,
                            inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan);
  }
  if (inverse) {
    const double scale = 1.0 / n;
    for (auto& v : *buf) v *= scale;
  }
}

std::vector<std::complex<double>> FftReal(const std::vector<double>& x) {
  std::vector<std::complex<double>> buf(x.begin(), x.end());
  Fft(&buf, /*inverse=*/false);
  return buf;
}

}  // namespace gtf0
