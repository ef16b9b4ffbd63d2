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

#ifndef GTF0_WAVEFORM_H_
#define GTF0_WAVEFORM_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace gtf0 {

// File and format errors; mapped to a dedicated exit code by the CLI.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Mono sample sequence with its sampling rate. Samples are linear
// amplitudes, nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  int NumSamples() const { return static_cast<int>(samples.size()); }
  double DurationSeconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

double SignalPower(const std::vector<double>& x);
double SignalRms(const std::vector<double>& x);

// PCM 16-bit mono little-endian RIFF only. Read normalizes by 1/32768;
// write clips to [-1, 1] and rounds to nearest.
Waveform ReadWav(const std::string& path);
void WriteWav(const std::string& path, const Waveform& w);

}  // namespace gtf0

#endif  // GTF0_WAVEFORM_H_
