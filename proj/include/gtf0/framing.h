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

#ifndef GTF0_FRAMING_H_
#define GTF0_FRAMING_H_

#include <cstdint>
#include <vector>

#include "gtf0/waveform.h"

namespace gtf0 {

enum class WindowKind { kHann, kRect };

// Periodic Hann for kHann (exact constant overlap-add at 50% hop).
std::vector<double> MakeWindow(WindowKind kind, int len);

// Windowed overlapping frames. The analysis window is applied exactly once,
// here; synthesis is a plain overlap-add of the (already windowed) frames.
struct FrameSet {
  std::vector<std::vector<double>> frames;
  int frame_len = 0;
  int hop = 0;
  int sample_rate = 0;
  WindowKind window = WindowKind::kHann;
  // Per-frame 0/1 voicing decision; empty until classified.
  std::vector<uint8_t> voicing;

  int NumFrames() const { return static_cast<int>(frames.size()); }
};

// Splits x into ceil((len - frame_len) / hop) + 1 frames; the last frame is
// zero-padded so every input sample is covered. Throws if the signal is
// shorter than one frame.
FrameSet FrameSignal(const Waveform& x, double frame_ms, double overlap,
                     WindowKind window);

// Sums frames at hop offsets into a waveform of out_len samples. No edge
// compensation: interior samples satisfy COLA for Hann at 50% overlap,
// the first and last half frame keep their raw tapered values.
Waveform OverlapAdd(const FrameSet& frames, int out_len);

}  // namespace gtf0

#endif  // GTF0_FRAMING_H_
