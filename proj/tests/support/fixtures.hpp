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
// Shared test fixtures: scratch directories, deterministic signal synthesis
// and manifest builders.

#ifndef VOXAUDIT_TESTS_SUPPORT_FIXTURES_HPP_
#define VOXAUDIT_TESTS_SUPPORT_FIXTURES_HPP_

#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace voxtest {

namespace fs = std::filesystem;

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<uint64_t> counter{0};
    path_ = fs::temp_directory_path() /
            ("voxaudit_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Uniform double in [0,1) from raw engine output; avoids distribution
// implementation differences.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform noise in [-amplitude, amplitude].
inline std::vector<double> noise(size_t n, double amplitude,
                                 std::mt19937_64& rng) {
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = amplitude * (2.0 * uniform01(rng) - 1.0);
  return out;
}

inline std::vector<double> zeros(size_t n) { return std::vector<double>(n, 0.0); }

inline void append(std::vector<double>& dst, const std::vector<double>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// quiet_s of low-amplitude noise followed by loud_s of near-full-scale
// noise, the canonical half-silence/half-speech shape.
inline std::vector<double> silence_then_noise(double quiet_s, double loud_s,
                                              int rate, uint64_t seed = 1,
                                              double quiet_amp = 1e-4,
                                              double loud_amp = 0.9) {
  std::mt19937_64 rng(seed);
  std::vector<double> samples =
      noise(static_cast<size_t>(quiet_s * rate), quiet_amp, rng);
  append(samples, noise(static_cast<size_t>(loud_s * rate), loud_amp, rng));
  return samples;
}

}  // namespace voxtest

#endif  // VOXAUDIT_TESTS_SUPPORT_FIXTURES_HPP_
