#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "relaywire/bytes.hpp"
#include "relaywire/crypto.hpp"
#include "relaywire/errors.hpp"
#include "relaywire/group.hpp"
#include "relaywire/role.hpp"

// Balanced password-authenticated key exchange over an abstract prime-order
// group. One party per role; the password scalar w masks each side's
// ephemeral public key with the fixed points M (sender) and N (receiver),
// both sides derive the shared element K = h*x*y*P, and a transcript hash
// turns it into session keys with explicit key confirmation.
namespace relaywire::pake {

// Session secrets derived from the transcript. Ke encrypts the payload
// stream; Ka is only an input to the confirmation-key derivation; KcA/KcB
// key the confirmation MACs. None of Ka/KcA/KcB ever leave the process.
struct SessionKeys {
  std::array<std::uint8_t, 32> ke{};
  std::array<std::uint8_t, 32> ka{};
  std::array<std::uint8_t, 16> kca{};
  std::array<std::uint8_t, 16> kcb{};
  // Domain-separated digest of the transcript, safe to feed into channel
  // binding MACs (deliberately not the H(TT) that Ke||Ka splits from).
  std::array<std::uint8_t, 64> transcript_hash{};
  // Raw transcript TT; confirmation MACs run over it. In-process only.
  Bytes transcript;

  bool operator==(const SessionKeys&) const = default;
};

struct ConfirmationTag {
  std::array<std::uint8_t, 32> mac{};
  Role from_role = Role::sender;

  bool operator==(const ConfirmationTag&) const = default;
};

// Memory-hard password-to-scalar hash: Argon2id stretched to 64 bytes, then
// reduced into the scalar field. Deterministic for fixed (passphrase, salt,
// cost); cost is a public protocol parameter.
template <group::PrimeOrderGroup G>
typename G::Scalar hash_password(std::string_view passphrase, ByteView salt,
                                 const crypto::PwCost& cost = crypto::PwCost::interactive()) {
  const auto wide = crypto::pw_stretch(passphrase, salt, cost);
  return G::scalar_from_wide(ByteView(wide.data(), wide.size()));
}

template <group::PrimeOrderGroup G>
class PakeState {
 public:
  using Element = typename G::Element;
  using Scalar = typename G::Scalar;

  Role role() const { return role_; }
  const Element& own_share() const { return own_share_; }
  bool finished() const { return finished_; }

 private:
  PakeState(Role role, std::string identity_self, std::string identity_peer, Scalar w,
            Scalar ephemeral, Bytes aad)
      : role_(role),
        identity_self_(std::move(identity_self)),
        identity_peer_(std::move(identity_peer)),
        w_(w),
        ephemeral_(ephemeral),
        aad_(std::move(aad)) {
    const auto& params = G::params();
    const Element mask = role_ == Role::sender ? params.m : params.n;
    // T = w*M + x*P (sender) or S = w*N + y*P (receiver)
    own_share_ = G::add(G::scalar_mul(w_, mask), G::scalar_mul(ephemeral_, params.generator_p));
  }

  Role role_;
  std::string identity_self_;
  std::string identity_peer_;
  Scalar w_;
  Scalar ephemeral_;  // x or y; never serialized
  Element own_share_;
  Bytes aad_;
  bool finished_ = false;

  template <group::PrimeOrderGroup H>
  friend PakeState<H> start_with_ephemeral(Role, const typename H::Scalar&, std::string_view,
                                           std::string_view, ByteView,
                                           const typename H::Scalar&);
  template <group::PrimeOrderGroup H>
  friend SessionKeys finish(PakeState<H>&, const typename H::Element&);
};

// Deterministic-ephemeral entry point; the seam for protocol test vectors
// and the toy-group oracle. Production code goes through start().
template <group::PrimeOrderGroup G>
PakeState<G> start_with_ephemeral(Role role, const typename G::Scalar& w,
                                  std::string_view identity_self, std::string_view identity_peer,
                                  ByteView aad, const typename G::Scalar& ephemeral) {
  if (G::scalar_is_zero(ephemeral)) throw InputError("ephemeral scalar must be nonzero");
  return PakeState<G>(role, std::string(identity_self), std::string(identity_peer), w, ephemeral,
                      Bytes(aad.begin(), aad.end()));
}

// Fresh ephemeral per call: a new session never reuses x or y.
template <group::PrimeOrderGroup G, group::EntropySource R>
std::pair<PakeState<G>, typename G::Element> start(Role role, const typename G::Scalar& w,
                                                   std::string_view identity_self,
                                                   std::string_view identity_peer, ByteView aad,
                                                   R& rng) {
  const auto ephemeral = group::random_scalar<G>(rng);
  auto state = start_with_ephemeral<G>(role, w, identity_self, identity_peer, aad, ephemeral);
  auto share = state.own_share();
  return {std::move(state), share};
}

// Consumes the state: computes K from the peer's share, builds the
// transcript
//   TT = len(A)||A || len(B)||B || len(S)||S || len(T)||T || len(K)||K || len(w)||w
// (8-byte little-endian lengths, canonical encodings), and splits
// Ke||Ka = H(TT), KcA||KcB = KDF(nil, Ka, "ConfirmationKeys"||AAD).
template <group::PrimeOrderGroup G>
SessionKeys finish(PakeState<G>& state, const typename G::Element& peer_share) {
  if (state.finished_) throw StateError("pake state already finished");
  if (G::is_identity(peer_share))
    throw ProtocolError("peer share is the identity element");

  const auto& params = G::params();
  const auto peer_mask = state.role_ == Role::sender ? params.n : params.m;

  // K = h * x * (peer_share - w * peer_mask); the cofactor multiplication
  // clears any small-order component smuggled into the share.
  const auto h_scalar = G::scalar_from_u64(params.cofactor_h);
  const auto exponent = G::scalar_mul_mod(h_scalar, state.ephemeral_);
  const auto unmasked = group::sub<G>(peer_share, G::scalar_mul(state.w_, peer_mask));
  const auto shared = G::scalar_mul(exponent, unmasked);
  if (G::is_identity(shared)) throw ProtocolError("shared element degenerated to identity");

  const bool is_sender = state.role_ == Role::sender;
  const std::string& id_a = is_sender ? state.identity_self_ : state.identity_peer_;
  const std::string& id_b = is_sender ? state.identity_peer_ : state.identity_self_;
  const auto& share_t = is_sender ? state.own_share_ : peer_share;  // sender's share
  const auto& share_s = is_sender ? peer_share : state.own_share_;  // receiver's share

  SessionKeys keys;
  Bytes& tt = keys.transcript;
  append_len_prefixed(tt, to_bytes(id_a));
  append_len_prefixed(tt, to_bytes(id_b));
  append_len_prefixed(tt, G::encode_element(share_s));
  append_len_prefixed(tt, G::encode_element(share_t));
  append_len_prefixed(tt, G::encode_element(shared));
  append_len_prefixed(tt, G::encode_scalar(state.w_));

  const auto key_block = crypto::sha512(tt);
  std::copy(key_block.begin(), key_block.begin() + 32, keys.ke.begin());
  std::copy(key_block.begin() + 32, key_block.end(), keys.ka.begin());

  Bytes info = to_bytes("ConfirmationKeys");
  append(info, ByteView(state.aad_));
  const Bytes kc = crypto::hkdf_sha256(ByteView{}, ByteView(keys.ka.data(), keys.ka.size()),
                                       info, 32);
  std::copy(kc.begin(), kc.begin() + 16, keys.kca.begin());
  std::copy(kc.begin() + 16, kc.end(), keys.kcb.begin());

  Bytes bind_input = to_bytes("relaywire binding");
  append(bind_input, ByteView(tt));
  keys.transcript_hash = crypto::sha512(bind_input);

  sodium_memzero(&state.ephemeral_, sizeof(state.ephemeral_));
  state.finished_ = true;
  return keys;
}

// F_A = MAC(KcA, TT) from the sender, F_B = MAC(KcB, TT) from the receiver.
inline ConfirmationTag confirm_tag(const SessionKeys& keys, Role role) {
  const ByteView kc = role == Role::sender ? ByteView(keys.kca.data(), keys.kca.size())
                                           : ByteView(keys.kcb.data(), keys.kcb.size());
  return ConfirmationTag{crypto::hmac_sha256(kc, keys.transcript), role};
}

// Constant-time check of the peer's confirmation tag. Reject is a value;
// a tag claiming the wrong role is a protocol error.
inline bool verify_peer_tag(const SessionKeys& keys, Role own_role, const ConfirmationTag& tag) {
  if (tag.from_role != peer_of(own_role))
    throw ProtocolError("confirmation tag does not claim the peer role");
  const auto expected = confirm_tag(keys, tag.from_role);
  return crypto::ct_equal(ByteView(tag.mac.data(), tag.mac.size()),
                          ByteView(expected.mac.data(), expected.mac.size()));
}

}  // namespace relaywire::pake
