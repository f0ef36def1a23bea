// Copyright 2026 The voxaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// RIFF/WAVE PCM reader and writer. Integer PCM only (8/16-bit); multichannel
// input is downmixed to mono by channel averaging. Compressed formats belong
// behind a custom AudioDecoder, not here.

#ifndef VOXAUDIT_WAV_HPP_
#define VOXAUDIT_WAV_HPP_

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "voxaudit/error.hpp"

namespace voxaudit {

// Mono samples in [-1, 1].
struct WavData {
  int sample_rate = 0;
  std::vector<double> samples;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// Pluggable decoder hook: path -> WavData. The default handles WAV PCM;
// callers may wrap or replace it to add codec support.
using AudioDecoder = std::function<WavData(const std::filesystem::path&)>;

namespace detail {

inline uint32_t read_u32le(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

inline uint16_t read_u16le(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

struct WavLayout {
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
  uint16_t block_align = 0;
  std::streamoff data_offset = 0;
  uint32_t data_size = 0;
};

inline WavLayout parse_wav_layout(std::ifstream& in,
                                  const std::string& name) {
  unsigned char hdr[12];
  if (!in.read(reinterpret_cast<char*>(hdr), 12)) {
    throw AudioError(name + ": truncated RIFF header");
  }
  if (std::memcmp(hdr, "RIFF", 4) != 0 || std::memcmp(hdr + 8, "WAVE", 4) != 0) {
    throw AudioError(name + ": not a RIFF/WAVE file");
  }
  WavLayout layout;
  bool have_fmt = false;
  while (true) {
    unsigned char chunk[8];
    if (!in.read(reinterpret_cast<char*>(chunk), 8)) break;
    uint32_t size = read_u32le(chunk + 4);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) throw AudioError(name + ": fmt chunk too small");
      unsigned char fmt[16];
      if (!in.read(reinterpret_cast<char*>(fmt), 16)) {
        throw AudioError(name + ": truncated fmt chunk");
      }
      uint16_t audio_format = read_u16le(fmt);
      if (audio_format != 1) {
        throw AudioError(name + ": unsupported WAV format tag " +
                         std::to_string(audio_format) + " (PCM only)");
      }
      layout.channels = read_u16le(fmt + 2);
      layout.sample_rate = read_u32le(fmt + 4);
      layout.block_align = read_u16le(fmt + 12);
      layout.bits_per_sample = read_u16le(fmt + 14);
      in.seekg(size - 16 + (size % 2), std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      layout.data_offset = in.tellg();
      layout.data_size = size;
      in.seekg(size + (size % 2), std::ios::cur);
    } else {
      in.seekg(size + (size % 2), std::ios::cur);
    }
    if (!in) break;
  }
  in.clear();
  if (!have_fmt) throw AudioError(name + ": missing fmt chunk");
  if (layout.data_offset == 0) throw AudioError(name + ": missing data chunk");
  if (layout.channels == 0 || layout.sample_rate == 0) {
    throw AudioError(name + ": invalid fmt fields");
  }
  if (layout.bits_per_sample != 8 && layout.bits_per_sample != 16) {
    throw AudioError(name + ": unsupported bit depth " +
                     std::to_string(layout.bits_per_sample));
  }
  uint16_t expected_align = layout.channels * (layout.bits_per_sample / 8);
  if (layout.block_align == 0) layout.block_align = expected_align;
  if (layout.block_align != expected_align) {
    throw AudioError(name + ": inconsistent block alignment");
  }
  return layout;
}

}  // namespace detail

// Duration from header fields alone; does not decode samples.
inline double wav_duration_s(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open audio file: " + path.string());
  detail::WavLayout layout = detail::parse_wav_layout(in, path.string());
  uint64_t frames = layout.data_size / layout.block_align;
  return static_cast<double>(frames) / layout.sample_rate;
}

inline WavData read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open audio file: " + path.string());
  detail::WavLayout layout = detail::parse_wav_layout(in, path.string());
  in.seekg(layout.data_offset);
  std::vector<unsigned char> raw(layout.data_size);
  if (!in.read(reinterpret_cast<char*>(raw.data()), layout.data_size)) {
    throw AudioError(path.string() + ": truncated data chunk");
  }
  const uint64_t frames = layout.data_size / layout.block_align;
  WavData out;
  out.sample_rate = static_cast<int>(layout.sample_rate);
  out.samples.resize(frames);
  const int ch = layout.channels;
  if (layout.bits_per_sample == 16) {
    for (uint64_t f = 0; f < frames; ++f) {
      double acc = 0.0;
      const unsigned char* p = raw.data() + f * layout.block_align;
      for (int c = 0; c < ch; ++c) {
        int16_t v = static_cast<int16_t>(detail::read_u16le(p + 2 * c));
        acc += static_cast<double>(v) / 32768.0;
      }
      out.samples[f] = acc / ch;
    }
  } else {  // 8-bit unsigned
    for (uint64_t f = 0; f < frames; ++f) {
      double acc = 0.0;
      const unsigned char* p = raw.data() + f * layout.block_align;
      for (int c = 0; c < ch; ++c) {
        acc += (static_cast<double>(p[c]) - 128.0) / 128.0;
      }
      out.samples[f] = acc / ch;
    }
  }
  return out;
}

// 16-bit mono PCM writer, used for fixtures and round-trip tests.
inline void write_wav_pcm16(const std::filesystem::path& path, int sample_rate,
                            std::span<const double> samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write audio file: " + path.string());
  const uint32_t data_size = static_cast<uint32_t>(samples.size() * 2);
  auto put_u32 = [&](uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                 static_cast<char>((v >> 16) & 0xFF),
                 static_cast<char>((v >> 24) & 0xFF)};
    out.write(b, 4);
  };
  auto put_u16 = [&](uint16_t v) {
    char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF)};
    out.write(b, 2);
  };
  out.write("RIFF", 4);
  put_u32(36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(16);
  put_u16(1);  // PCM
  put_u16(1);  // mono
  put_u32(static_cast<uint32_t>(sample_rate));
  put_u32(static_cast<uint32_t>(sample_rate) * 2);  // byte rate
  put_u16(2);                                       // block align
  put_u16(16);
  out.write("data", 4);
  put_u32(data_size);
  for (double s : samples) {
    double clamped = s < -1.0 ? -1.0 : (s > 1.0 ? 1.0 : s);
    int v = static_cast<int>(clamped * 32767.0);
    put_u16(static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  if (!out) throw IoError("short write: " + path.string());
}

}  // namespace voxaudit

#endif  // VOXAUDIT_WAV_HPP_
