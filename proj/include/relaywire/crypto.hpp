#pragma once

#include <sodium.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "relaywire/bytes.hpp"
#include "relaywire/errors.hpp"

namespace relaywire::crypto {

inline void ensure_init() {
  static const int rc = sodium_init();
  if (rc < 0) throw Error("libsodium initialization failed");
}

inline void random_fill(std::uint8_t* out, std::size_t len) {
  ensure_init();
  randombytes_buf(out, len);
}

// Uniform draw in [0, upper). Rejection-sampled by libsodium.
inline std::uint32_t random_below(std::uint32_t upper) {
  ensure_init();
  return randombytes_uniform(upper);
}

inline bool ct_equal(ByteView a, ByteView b) {
  if (a.size() != b.size()) return false;
  return sodium_memcmp(a.data(), b.data(), a.size()) == 0;
}

// ---- hashing -------------------------------------------------------------

inline std::array<std::uint8_t, 32> sha256(ByteView in) {
  ensure_init();
  std::array<std::uint8_t, 32> out{};
  crypto_hash_sha256(out.data(), in.data(), in.size());
  return out;
}

inline std::array<std::uint8_t, 64> sha512(ByteView in) {
  ensure_init();
  std::array<std::uint8_t, 64> out{};
  crypto_hash_sha512(out.data(), in.data(), in.size());
  return out;
}

class Sha256Stream {
 public:
  Sha256Stream() {
    ensure_init();
    crypto_hash_sha256_init(&state_);
  }
  void update(ByteView in) { crypto_hash_sha256_update(&state_, in.data(), in.size()); }
  std::array<std::uint8_t, 32> finish() {
    std::array<std::uint8_t, 32> out{};
    crypto_hash_sha256_final(&state_, out.data());
    return out;
  }

 private:
  crypto_hash_sha256_state state_;
};

// ---- MACs and key derivation ----------------------------------------------

// HMAC-SHA-256 with an arbitrary-length key.
inline std::array<std::uint8_t, 32> hmac_sha256(ByteView key, ByteView msg) {
  ensure_init();
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key.data(), key.size());
  crypto_auth_hmacsha256_update(&st, msg.data(), msg.size());
  std::array<std::uint8_t, 32> out{};
  crypto_auth_hmacsha256_final(&st, out.data());
  return out;
}

// HKDF-SHA-256 (extract-and-expand), built on the HMAC above.
inline Bytes hkdf_sha256(ByteView salt, ByteView ikm, ByteView info, std::size_t out_len) {
  if (out_len == 0 || out_len > 255 * 32) throw InputError("hkdf: bad output length");
  const auto prk = hmac_sha256(salt, ikm);
  Bytes out;
  out.reserve(out_len);
  std::array<std::uint8_t, 32> block{};
  std::uint8_t counter = 1;
  std::size_t block_len = 0;
  while (out.size() < out_len) {
    Bytes input;
    input.reserve(block_len + info.size() + 1);
    append(input, ByteView(block.data(), block_len));
    append(input, info);
    input.push_back(counter++);
    block = hmac_sha256(prk, input);
    block_len = block.size();
    const std::size_t take = std::min(block_len, out_len - out.size());
    append(out, ByteView(block.data(), take));
  }
  return out;
}

// ---- memory-hard password hashing ------------------------------------------

// Argon2id cost parameters. Public protocol parameters: both sides must run
// the same tier or they derive different password scalars.
struct PwCost {
  std::uint64_t opslimit;
  std::size_t memlimit;

  static PwCost interactive() {
    return {crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE};
  }
  // Cheapest tier libsodium accepts; for tests and bulk harnesses.
  static PwCost minimal() {
    return {crypto_pwhash_OPSLIMIT_MIN, crypto_pwhash_MEMLIMIT_MIN};
  }
};

// 64-byte Argon2id stretch of the passphrase. The 16-byte Argon2 salt is
// derived from the caller's salt bytes so any salt length works.
inline std::array<std::uint8_t, 64> pw_stretch(std::string_view passphrase, ByteView salt,
                                               const PwCost& cost) {
  if (passphrase.empty()) throw InputError("empty passphrase");
  ensure_init();
  Bytes salt_input = to_bytes("relaywire pw-salt");
  append(salt_input, salt);
  const auto salt_digest = sha256(salt_input);
  std::array<std::uint8_t, crypto_pwhash_SALTBYTES> argon_salt{};
  std::memcpy(argon_salt.data(), salt_digest.data(), argon_salt.size());

  std::array<std::uint8_t, 64> out{};
  if (crypto_pwhash(out.data(), out.size(), passphrase.data(), passphrase.size(),
                    argon_salt.data(), cost.opslimit, cost.memlimit,
                    crypto_pwhash_ALG_ARGON2ID13) != 0) {
    throw Error("argon2id failed (out of memory?)");
  }
  return out;
}

// ---- authenticated encryption (secretbox) ----------------------------------

inline constexpr std::size_t kSecretboxNonceBytes = crypto_secretbox_NONCEBYTES;  // 24
inline constexpr std::size_t kSecretboxTagBytes = crypto_secretbox_MACBYTES;      // 16
inline constexpr std::size_t kSecretboxKeyBytes = crypto_secretbox_KEYBYTES;      // 32

using SecretboxKey = std::array<std::uint8_t, kSecretboxKeyBytes>;
using SecretboxNonce = std::array<std::uint8_t, kSecretboxNonceBytes>;

inline Bytes secretbox_seal(const SecretboxKey& key, const SecretboxNonce& nonce,
                            ByteView plaintext) {
  ensure_init();
  Bytes out(plaintext.size() + kSecretboxTagBytes);
  crypto_secretbox_easy(out.data(), plaintext.data(), plaintext.size(), nonce.data(),
                        key.data());
  return out;
}

// Throws AuthenticationError when the tag does not verify.
inline Bytes secretbox_open(const SecretboxKey& key, const SecretboxNonce& nonce,
                            ByteView ciphertext) {
  ensure_init();
  if (ciphertext.size() < kSecretboxTagBytes)
    throw AuthenticationError("ciphertext shorter than authenticator");
  Bytes out(ciphertext.size() - kSecretboxTagBytes);
  if (crypto_secretbox_open_easy(out.data(), ciphertext.data(), ciphertext.size(),
                                 nonce.data(), key.data()) != 0) {
    throw AuthenticationError("ciphertext authentication failed");
  }
  return out;
}

}  // namespace relaywire::crypto
