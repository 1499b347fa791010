#pragma once

// Plain word-level SHA-256, used as the verification oracle for the
// register-machine pipeline.  Deliberately self-contained: it carries its
// own constant tables and its own padding, and shares no code with the
// instruction-sequence generators it checks.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace pga {

using digest = std::array<std::uint8_t, 32>;

inline std::string to_hex(const digest& d) {
  static constexpr char alphabet[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto byte : d) {
    out += alphabet[byte >> 4];
    out += alphabet[byte & 0xf];
  }
  return out;
}

namespace reference {

namespace detail {

inline constexpr std::array<std::uint32_t, 64> k = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
    0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
    0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
    0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
    0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
    0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
    0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
    0xc67178f2,
};

inline void compress(std::array<std::uint32_t, 8>& h, const std::uint8_t* chunk) {
  std::array<std::uint32_t, 64> w;
  for (int j = 0; j < 16; ++j)
    w[j] = (std::uint32_t(chunk[4 * j]) << 24) | (std::uint32_t(chunk[4 * j + 1]) << 16) |
           (std::uint32_t(chunk[4 * j + 2]) << 8) | std::uint32_t(chunk[4 * j + 3]);
  for (int j = 16; j < 64; ++j) {
    const std::uint32_t s0 =
        std::rotr(w[j - 15], 7) ^ std::rotr(w[j - 15], 18) ^ (w[j - 15] >> 3);
    const std::uint32_t s1 =
        std::rotr(w[j - 2], 17) ^ std::rotr(w[j - 2], 19) ^ (w[j - 2] >> 10);
    w[j] = w[j - 16] + s0 + w[j - 7] + s1;
  }

  auto [a, b, c, d, e, f, g, hh] = h;
  for (int j = 0; j < 64; ++j) {
    const std::uint32_t big_s1 = std::rotr(e, 6) ^ std::rotr(e, 11) ^ std::rotr(e, 25);
    const std::uint32_t ch = (e & f) ^ (~e & g);
    const std::uint32_t t1 = hh + big_s1 + ch + k[j] + w[j];
    const std::uint32_t big_s0 = std::rotr(a, 2) ^ std::rotr(a, 13) ^ std::rotr(a, 22);
    const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
    const std::uint32_t t2 = big_s0 + maj;
    hh = g;
    g = f;
    f = e;
    e = d + t1;
    d = c;
    c = b;
    b = a;
    a = t1 + t2;
  }
  h[0] += a;
  h[1] += b;
  h[2] += c;
  h[3] += d;
  h[4] += e;
  h[5] += f;
  h[6] += g;
  h[7] += hh;
}

}  // namespace detail

inline digest sha256(std::span<const std::uint8_t> message) {
  if (message.size() >= (1ull << 61))
    throw std::length_error("message too long for SHA-256");
  std::array<std::uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                                    0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

  std::size_t offset = 0;
  for (; offset + 64 <= message.size(); offset += 64) detail::compress(h, &message[offset]);

  // final chunk(s): 0x80 marker, zero fill, 64-bit big-endian bit length
  std::array<std::uint8_t, 128> tail{};
  const std::size_t rest = message.size() - offset;
  for (std::size_t i = 0; i < rest; ++i) tail[i] = message[offset + i];
  tail[rest] = 0x80;
  const std::size_t tail_len = rest + 1 + 8 <= 64 ? 64 : 128;
  const std::uint64_t bit_len = std::uint64_t(message.size()) * 8;
  for (int i = 0; i < 8; ++i)
    tail[tail_len - 1 - i] = static_cast<std::uint8_t>(bit_len >> (8 * i));
  detail::compress(h, tail.data());
  if (tail_len == 128) detail::compress(h, tail.data() + 64);

  digest out;
  for (int j = 0; j < 8; ++j) {
    out[4 * j] = static_cast<std::uint8_t>(h[j] >> 24);
    out[4 * j + 1] = static_cast<std::uint8_t>(h[j] >> 16);
    out[4 * j + 2] = static_cast<std::uint8_t>(h[j] >> 8);
    out[4 * j + 3] = static_cast<std::uint8_t>(h[j]);
  }
  return out;
}

}  // namespace reference
}  // namespace pga
