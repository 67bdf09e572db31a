#pragma once

#include <sodium.h>

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>

#include "relaywire/bytes.hpp"
#include "relaywire/crypto.hpp"
#include "relaywire/errors.hpp"

namespace relaywire::group {

// Entropy source used for scalar generation. Anything with
// fill(uint8_t*, size_t) works; tests substitute deterministic sources.
struct SystemEntropy {
  void fill(std::uint8_t* out, std::size_t len) { crypto::random_fill(out, len); }
};

template <typename R>
concept EntropySource = requires(R r, std::uint8_t* p, std::size_t n) {
  { r.fill(p, n) };
};

// Static interface shared by the group realizations below. The key exchange
// is a template over this, so the production curve and the brute-forceable
// toy group run the exact same protocol code.
template <typename G>
concept PrimeOrderGroup = requires(const typename G::Element& e, const typename G::Scalar& s,
                                   ByteView bytes) {
  { G::kElementBytes } -> std::convertible_to<std::size_t>;
  { G::kScalarBytes } -> std::convertible_to<std::size_t>;
  { G::params() };
  { G::generator() } -> std::same_as<typename G::Element>;
  { G::identity() } -> std::same_as<typename G::Element>;
  { G::is_identity(e) } -> std::same_as<bool>;
  { G::add(e, e) } -> std::same_as<typename G::Element>;
  { G::neg(e) } -> std::same_as<typename G::Element>;
  { G::scalar_mul(s, e) } -> std::same_as<typename G::Element>;
  { G::encode_element(e) } -> std::same_as<Bytes>;
  { G::decode_element(bytes) } -> std::same_as<typename G::Element>;
  { G::encode_scalar(s) } -> std::same_as<Bytes>;
  { G::scalar_from_wide(bytes) } -> std::same_as<typename G::Scalar>;
  { G::scalar_is_zero(s) } -> std::same_as<bool>;
};

// subtraction realized as add-of-negation
template <typename G>
typename G::Element sub(const typename G::Element& a, const typename G::Element& b) {
  return G::add(a, G::neg(b));
}

// Uniform nonzero scalar: 64 uniform bytes reduced modulo the group order,
// resampled on zero.
template <typename G, EntropySource R>
typename G::Scalar random_scalar(R& rng) {
  std::array<std::uint8_t, 64> wide{};
  for (;;) {
    rng.fill(wide.data(), wide.size());
    auto s = G::scalar_from_wide(ByteView(wide.data(), wide.size()));
    if (!G::scalar_is_zero(s)) return s;
  }
}

// ---------------------------------------------------------------------------
// Production group: ristretto255 (prime order, cofactor 1, canonical 32-byte
// element encoding). Scalars are kept reduced; the canonical external scalar
// encoding is 32 bytes big-endian.
// ---------------------------------------------------------------------------
struct Ristretto255 {
  static constexpr std::size_t kElementBytes = 32;
  static constexpr std::size_t kScalarBytes = 32;

  struct Element {
    std::array<std::uint8_t, 32> repr{};  // canonical encoding, validated
    bool operator==(const Element&) const = default;
  };

  struct Scalar {
    std::array<std::uint8_t, 32> le{};  // reduced mod group order
    bool operator==(const Scalar&) const = default;
  };

  struct Params {
    Bytes order_p_be;
    std::uint64_t cofactor_h;
    Element generator_p;
    Element m;
    Element n;
  };

  // Group order l = 2^252 + 27742317777372353535851937790883648493.
  static constexpr std::array<std::uint8_t, 32> kOrderBe = {
      0x10, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
      0x00, 0x00, 0x00, 0x00, 0x00, 0x14, 0xde, 0xf9, 0xde, 0xa2, 0xf7,
      0x9c, 0xd6, 0x58, 0x12, 0x63, 0x1a, 0x5c, 0xf5, 0xd3, 0xed};

  static const Params& params() {
    static const Params p = [] {
      crypto::ensure_init();
      Params out;
      out.order_p_be = Bytes(kOrderBe.begin(), kOrderBe.end());
      out.cofactor_h = 1;
      out.generator_p = generator();
      out.m = element_from_domain("relaywire M");
      out.n = element_from_domain("relaywire N");
      return out;
    }();
    return p;
  }

  static Element generator() {
    crypto::ensure_init();
    Element g;
    Scalar one = scalar_from_u64(1);
    crypto_scalarmult_ristretto255_base(g.repr.data(), one.le.data());
    return g;
  }

  static Element identity() { return Element{}; }

  static bool is_identity(const Element& e) {
    return std::all_of(e.repr.begin(), e.repr.end(), [](std::uint8_t b) { return b == 0; });
  }

  static Element add(const Element& a, const Element& b) {
    crypto::ensure_init();
    Element r;
    if (crypto_core_ristretto255_add(r.repr.data(), a.repr.data(), b.repr.data()) != 0)
      throw DecodeError("ristretto255: add on invalid element");
    return r;
  }

  static Element neg(const Element& e) {
    crypto::ensure_init();
    Element zero{}, r;
    if (crypto_core_ristretto255_sub(r.repr.data(), zero.repr.data(), e.repr.data()) != 0)
      throw DecodeError("ristretto255: neg on invalid element");
    return r;
  }

  static Element scalar_mul(const Scalar& k, const Element& e) {
    crypto::ensure_init();
    if (scalar_is_zero(k) || is_identity(e)) return identity();
    Element r;
    // libsodium reports an all-zero (identity) result as failure; with a
    // reduced nonzero scalar and a non-identity point that cannot happen in
    // a prime-order group.
    if (crypto_scalarmult_ristretto255(r.repr.data(), k.le.data(), e.repr.data()) != 0)
      throw DecodeError("ristretto255: scalar_mul on invalid element");
    return r;
  }

  static Bytes encode_element(const Element& e) {
    return Bytes(e.repr.begin(), e.repr.end());
  }

  static Element decode_element(ByteView bytes) {
    crypto::ensure_init();
    if (bytes.size() != kElementBytes)
      throw DecodeError("ristretto255: element encoding must be 32 bytes");
    Element e;
    std::copy(bytes.begin(), bytes.end(), e.repr.begin());
    if (is_identity(e)) return e;  // canonical identity encoding
    if (crypto_core_ristretto255_is_valid_point(e.repr.data()) != 1)
      throw DecodeError("ristretto255: non-canonical element encoding");
    return e;
  }

  // big-endian external encoding
  static Bytes encode_scalar(const Scalar& s) {
    Bytes out(s.le.rbegin(), s.le.rend());
    return out;
  }

  static Scalar decode_scalar(ByteView bytes) {
    if (bytes.size() != kScalarBytes) throw DecodeError("ristretto255: scalar must be 32 bytes");
    Bytes be(bytes.begin(), bytes.end());
    if (!std::lexicographical_compare(be.begin(), be.end(), kOrderBe.begin(), kOrderBe.end()))
      throw DecodeError("ristretto255: scalar not reduced");
    Scalar s;
    std::copy(be.rbegin(), be.rend(), s.le.begin());
    return s;
  }

  static Scalar scalar_from_u64(std::uint64_t v) {
    Scalar s;
    for (int i = 0; i < 8; ++i) s.le[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
    return s;
  }

  static Scalar scalar_from_wide(ByteView wide) {
    crypto::ensure_init();
    if (wide.size() != 64) throw InputError("ristretto255: wide scalar input must be 64 bytes");
    Scalar s;
    crypto_core_ristretto255_scalar_reduce(s.le.data(), wide.data());
    return s;
  }

  static bool scalar_is_zero(const Scalar& s) {
    return std::all_of(s.le.begin(), s.le.end(), [](std::uint8_t b) { return b == 0; });
  }

  static Scalar scalar_mul_mod(const Scalar& a, const Scalar& b) {
    crypto::ensure_init();
    Scalar r;
    crypto_core_ristretto255_scalar_mul(r.le.data(), a.le.data(), b.le.data());
    return r;
  }

  static Scalar scalar_add_mod(const Scalar& a, const Scalar& b) {
    crypto::ensure_init();
    Scalar r;
    crypto_core_ristretto255_scalar_add(r.le.data(), a.le.data(), b.le.data());
    return r;
  }

 private:
  static Element element_from_domain(std::string_view domain) {
    const auto wide = crypto::sha512(to_bytes(domain));
    Element e;
    crypto_core_ristretto255_from_hash(e.repr.data(), wide.data());
    return e;
  }
};

// ---------------------------------------------------------------------------
// Toy group for oracle testing: the order-11 subgroup of the integers mod 23
// under multiplication, generated by 2. Elements {1,2,4,8,16,9,18,13,3,6,12}.
// Small enough for exhaustive discrete-log brute force. One-byte encodings.
// ---------------------------------------------------------------------------
namespace detail {

inline constexpr std::uint32_t kToyModulus = 23;
inline constexpr std::uint32_t kToyOrder = 11;

inline std::uint32_t toy_pow(std::uint32_t base, std::uint32_t exp) {
  std::uint32_t acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) acc = (acc * base) % kToyModulus;
  return acc;
}

inline bool toy_in_subgroup(std::uint32_t v) {
  return v >= 1 && v < kToyModulus && toy_pow(v, kToyOrder) == 1;
}

inline std::uint32_t toy_fold_mod(ByteView wide, std::uint32_t mod) {
  std::uint32_t acc = 0;
  for (std::uint8_t b : wide) acc = (acc * 256u + b) % mod;
  return acc;
}

// Shared arithmetic for the two toy variants. AcceptFullGroup widens element
// validation from the order-11 subgroup to all of (Z/23Z)*, which models an
// ambient group with cofactor 2.
template <bool AcceptFullGroup, std::uint64_t Cofactor>
struct ToyGroupBase {
  static constexpr std::size_t kElementBytes = 1;
  static constexpr std::size_t kScalarBytes = 1;

  struct Element {
    std::uint8_t value = 1;
    bool operator==(const Element&) const = default;
  };

  struct Scalar {
    std::uint8_t value = 0;  // in [0, 11)
    bool operator==(const Scalar&) const = default;
  };

  struct Params {
    Bytes order_p_be;
    std::uint64_t cofactor_h;
    Element generator_p;
    Element m;
    Element n;
  };

  static const Params& params() {
    static const Params p = [] {
      Params out;
      out.order_p_be = Bytes{static_cast<std::uint8_t>(kToyOrder)};
      out.cofactor_h = Cofactor;
      out.generator_p = generator();
      std::uint32_t m_exp = 1 + toy_fold_mod(crypto::sha512(to_bytes("relaywire M")), kToyOrder - 1);
      std::uint32_t n_exp = 1 + toy_fold_mod(crypto::sha512(to_bytes("relaywire N")), kToyOrder - 1);
      if (n_exp == m_exp) n_exp = 1 + (n_exp % (kToyOrder - 1));
      out.m = Element{static_cast<std::uint8_t>(toy_pow(2, m_exp))};
      out.n = Element{static_cast<std::uint8_t>(toy_pow(2, n_exp))};
      return out;
    }();
    return p;
  }

  static Element generator() { return Element{2}; }
  static Element identity() { return Element{1}; }
  static bool is_identity(const Element& e) { return e.value == 1; }

  static Element add(const Element& a, const Element& b) {
    return Element{static_cast<std::uint8_t>((a.value * b.value) % kToyModulus)};
  }

  static Element neg(const Element& e) {
    // v^-1 = v^(|group|-1) mod 23; exponent 21 works for both variants.
    return Element{static_cast<std::uint8_t>(toy_pow(e.value, 21))};
  }

  static Element scalar_mul(const Scalar& k, const Element& e) {
    return Element{static_cast<std::uint8_t>(toy_pow(e.value, k.value))};
  }

  static Bytes encode_element(const Element& e) { return Bytes{e.value}; }

  static Element decode_element(ByteView bytes) {
    if (bytes.size() != 1) throw DecodeError("toy group: element encoding must be 1 byte");
    const std::uint32_t v = bytes[0];
    const bool ok = AcceptFullGroup ? (v >= 1 && v < kToyModulus) : toy_in_subgroup(v);
    if (!ok) throw DecodeError("toy group: byte is not a group element");
    return Element{bytes[0]};
  }

  static Bytes encode_scalar(const Scalar& s) { return Bytes{s.value}; }

  static Scalar decode_scalar(ByteView bytes) {
    if (bytes.size() != 1 || bytes[0] >= kToyOrder)
      throw DecodeError("toy group: scalar must be one byte below 11");
    return Scalar{bytes[0]};
  }

  static Scalar scalar_from_u64(std::uint64_t v) {
    return Scalar{static_cast<std::uint8_t>(v % kToyOrder)};
  }

  static Scalar scalar_from_wide(ByteView wide) {
    if (wide.size() != 64) throw InputError("toy group: wide scalar input must be 64 bytes");
    return Scalar{static_cast<std::uint8_t>(toy_fold_mod(wide, kToyOrder))};
  }

  static bool scalar_is_zero(const Scalar& s) { return s.value == 0; }

  static Scalar scalar_mul_mod(const Scalar& a, const Scalar& b) {
    return Scalar{static_cast<std::uint8_t>((a.value * b.value) % kToyOrder)};
  }

  static Scalar scalar_add_mod(const Scalar& a, const Scalar& b) {
    return Scalar{static_cast<std::uint8_t>((a.value + b.value) % kToyOrder)};
  }
};

}  // namespace detail

// Strict variant: only subgroup elements decode; cofactor 1.
using ToyGroup = detail::ToyGroupBase<false, 1>;

// Ambient variant: all of (Z/23Z)* decodes (order 22 = 11 * 2), cofactor 2.
// Exercises the cofactor-clearing multiplication in the key derivation.
using ToyGroupCofactor2 = detail::ToyGroupBase<true, 2>;

static_assert(PrimeOrderGroup<Ristretto255>);
static_assert(PrimeOrderGroup<ToyGroup>);
static_assert(PrimeOrderGroup<ToyGroupCofactor2>);

}  // namespace relaywire::group
