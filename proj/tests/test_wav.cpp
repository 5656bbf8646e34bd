#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "stoikit/rng.hpp"
#include "stoikit/wav.hpp"

using namespace stoikit;
namespace fs = std::filesystem;

namespace {
fs::path tmp_path(const char* name) {
  return fs::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("wav roundtrip is identity up to one quantization step") {
  Waveform w;
  w.sample_rate = 16000;
  Rng rng(7);
  for (int i = 0; i < 5000; ++i) w.samples.push_back(rng.uniform(-1.0, 1.0));
  auto p = tmp_path("rt.wav");
  write_wav(p.string(), w);
  Waveform r = read_wav(p.string());
  REQUIRE(r.sample_rate == 16000);
  REQUIRE(r.size() == w.size());
  for (size_t i = 0; i < w.size(); ++i)
    REQUIRE(std::abs(r.samples[i] - w.samples[i]) <= 1.0 / 32768.0);
  fs::remove(p);
}

TEST_CASE("wav header sample rate passes through") {
  Waveform w;
  w.sample_rate = 8000;
  w.samples.assign(100, 0.25);
  auto p = tmp_path("sr.wav");
  write_wav(p.string(), w);
  REQUIRE(read_wav(p.string()).sample_rate == 8000);
  fs::remove(p);
}

TEST_CASE("wav clamping at full scale") {
  Waveform w;
  w.sample_rate = 16000;
  w.samples = {1.5, -1.0, 1.0};
  auto p = tmp_path("clamp.wav");
  write_wav(p.string(), w);
  std::ifstream in(p.string(), std::ios::binary);
  in.seekg(44);
  auto next_i16 = [&in]() {
    unsigned char b[2];
    in.read(reinterpret_cast<char*>(b), 2);
    return static_cast<int16_t>(b[0] | (b[1] << 8));
  };
  REQUIRE(next_i16() == 32767);
  REQUIRE(next_i16() == -32768);
  REQUIRE(next_i16() == 32767);
  fs::remove(p);
}

TEST_CASE("zero-length waveform writes a valid empty file") {
  Waveform w;
  w.sample_rate = 16000;
  auto p = tmp_path("empty.wav");
  write_wav(p.string(), w);
  Waveform r = read_wav(p.string());
  REQUIRE(r.size() == 0);
  REQUIRE(fs::file_size(p) == 44);
  fs::remove(p);
}

TEST_CASE("stereo file is rejected") {
  // hand-build a 2-channel header
  std::string out;
  auto u32 = [&out](uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  auto u16 = [&out](uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
  };
  out += "RIFF";
  u32(36 + 4);
  out += "WAVEfmt ";
  u32(16);
  u16(1);
  u16(2);  // stereo
  u32(16000);
  u32(16000 * 4);
  u16(4);
  u16(16);
  out += "data";
  u32(4);
  out += std::string(4, '\0');
  auto p = tmp_path("stereo.wav");
  std::ofstream(p.string(), std::ios::binary) << out;
  REQUIRE_THROWS_AS(read_wav(p.string()), UnsupportedFormat);
  fs::remove(p);
}

TEST_CASE("bad magic and truncated files are rejected") {
  auto p = tmp_path("bad.wav");
  std::ofstream(p.string(), std::ios::binary) << "OGGSxxxxxxxxxxxx";
  REQUIRE_THROWS_AS(read_wav(p.string()), NotWav);

  Waveform w;
  w.sample_rate = 16000;
  w.samples.assign(64, 0.5);
  write_wav(p.string(), w);
  auto full = fs::file_size(p);
  fs::resize_file(p, full - 32);
  REQUIRE_THROWS_AS(read_wav(p.string()), TruncatedFile);
  fs::remove(p);
}
