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

#include "gtf0/framing.h"

#include <cmath>
#include <stdexcept>

namespace gtf0 {

std::vector<double> MakeWindow(WindowKind kind, int len) {
  std::vector<double> w(len, 1.0);
  if (kind == WindowKind::kHann) {
    for (int n = 0; n < len; ++n) {
      w[n] = 0.5 * (1.0 - std::cos(2.0 * M_PI * n / len));
    }
  }
  return w;
}

FrameSet FrameSignal(const Waveform& x, double frame_ms, double overlap,
                     WindowKind window) {
  if (frame_ms <= 0.0) throw std::invalid_argument("frame_ms must be > 0");
  if (overlap < 0.0 || overlap >= 1.0) {
    throw std::invalid_argument("overlap must be in [0, 1)");
  }
  if (x.sample_rate <= 0) throw std::invalid_argument("invalid sample rate");
  const int len = x.NumSamples();
  const int frame_len =
      static_cast<int>(std::lround(frame_ms * x.sample_rate / 1000.0));
  if (frame_len < 1) throw std::invalid_argument("frame too short");
  if (len < frame_len) throw std::invalid_argument("signal too short");
  int hop = static_cast<int>(std::lround(frame_len * (1.0 - overlap)));
  if (hop < 1) hop = 1;

  const int tail = len - frame_len;
  const int num_frames = tail == 0 ? 1 : (tail + hop - 1) / hop + 1;

  FrameSet set;
  set.frame_len = frame_len;
  set.hop = hop;
  set.sample_rate = x.sample_rate;
  set.window = window;
  set.frames.resize(num_frames);
  const std::vector<double> win = MakeWindow(window, frame_len);
  for (int q = 0; q < num_frames; ++q) {
    const int start = q * hop;
    std::vector<double>& frame = set.frames[q];
    frame.assign(frame_len, 0.0);
    const int avail = std::min(frame_len, len - start);
    for (int n = 0; n < avail; ++n) {
      frame[n] = x.samples[start + n] * win[n];
    }
  }
  return set;
}

Waveform OverlapAdd(const FrameSet& frames, int out_len) {
  if (frames.frames.empty() || frames.hop < 1) {
    throw std::invalid_argument("OverlapAdd: inconsistent FrameSet");
  }
  for (const auto& f : frames.frames) {
    if (static_cast<int>(f.size()) != frames.frame_len) {
      throw std::invalid_argument("OverlapAdd: ragged frames");
    }
  }
  Waveform out;
  out.sample_rate = frames.sample_rate;
  out.samples.assign(out_len, 0.0);
  for (int q = 0; q < frames.NumFrames(); ++q) {
    const int start = q * frames.hop;
    const std::vector<double>& frame = frames.frames[q];
    const int count =
        std::min(frames.frame_len, out_len - start);
    for (int n = 0; n < count; ++n) {
      out.samples[start + n] += frame[n];
    }
  }
  return out;
}

}  // namespace gtf0
