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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "gtf0/waveform.h"

namespace gtf0 {
namespace {

constexpr double kPcmScale = 32768.0;

uint32_t ReadU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t ReadU16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

void PutU32(std::string* out, uint32_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
  out->push_back(static_cast<char>((v >> 16) & 0xff));
  out->push_back(static_cast<char>((v >> 24) & 0xff));
}

void PutU16(std::string* out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

double SignalPower(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc / static_cast<double>(x.size());
}

double SignalRms(const std::vector<double>& x) {
  return std::sqrt(SignalPower(x));
}

Waveform ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const size_t size = bytes.size();
  if (size < 12 || std::memcmp(p, "RIFF", 4) != 0 ||
      std::memcmp(p + 8, "WAVE", 4) != 0) {
    throw IoError(path + ": not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t pos = 12;
  Waveform w;
  bool have_data = false;
  while (pos + 8 <= size) {
    const char* id = bytes.data() + pos;
    const uint32_t chunk_size = ReadU32(p + pos + 4);
    pos += 8;
    if (pos + chunk_size > size) {
      throw IoError(path + ": truncated chunk");
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw IoError(path + ": malformed fmt chunk");
      format = ReadU16(p + pos);
      channels = ReadU16(p + pos + 2);
      rate = ReadU32(p + pos + 4);
      bits = ReadU16(p + pos + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt) throw IoError(path + ": data chunk before fmt chunk");
      if (channels != 1) throw IoError(path + ": mono required");
      if (format != 1 || bits != 16) {
        throw IoError(path + ": PCM 16-bit required");
      }
      const size_t num_samples = chunk_size / 2;
      w.samples.resize(num_samples);
      for (size_t i = 0; i < num_samples; ++i) {
        const int16_t s =
            static_cast<int16_t>(ReadU16(p + pos + 2 * i));
        w.samples[i] = static_cast<double>(s) / kPcmScale;
      }
      have_data = true;
    }
    pos += chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }
  if (!have_fmt) throw IoError(path + ": missing fmt chunk");
  if (!have_data) throw IoError(path + ": missing data chunk");
  if (rate == 0) throw IoError(path + ": zero sample rate");
  w.sample_rate = static_cast<int>(rate);
  return w;
}

void WriteWav(const std::string& path, const Waveform& w) {
  if (w.sample_rate <= 0) throw IoError("WriteWav: invalid sample rate");
  const uint32_t num_samples = static_cast<uint32_t>(w.samples.size());
  const uint32_t data_bytes = num_samples * 2;
  std::string out;
  out.reserve(44 + data_bytes);
  out.append("RIFF");
  PutU32(&out, 36 + data_bytes);
  out.append("WAVE");
  out.append("fmt ");
  PutU32(&out, 16);
  PutU16(&out, 1);  // PCM
  PutU16(&out, 1);  // mono
  PutU32(&out, static_cast<uint32_t>(w.sample_rate));
  PutU32(&out, static_cast<uint32_t>(w.sample_rate) * 2);
  PutU16(&out, 2);
  PutU16(&out, 16);
  out.append("data");
  PutU32(&out, data_bytes);
  for (double v : w.samples) {
    const double clipped = std::clamp(v, -1.0, 1.0);
    const long q = std::lround(clipped * kPcmScale);
    const int16_t s = static_cast<int16_t>(std::clamp(q, -32768L, 32767L));
    PutU16(&out, static_cast<uint16_t>(s));
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw IoError("short write to " + path);
}

}  // namespace gtf0
