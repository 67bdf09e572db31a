#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "relaywire/bytes.hpp"
#include "relaywire/errors.hpp"
#include "relaywire/pake.hpp"
#include "relaywire/role.hpp"

// Typed, length-prefixed framing over any reliable ordered byte stream.
// Layout, bit-exact: 4-byte big-endian payload length | 1-byte kind | payload.
namespace relaywire::wire {

inline constexpr std::uint16_t kProtocolVersion = 1;
inline constexpr std::size_t kMaxPayloadBytes = 65536;
inline constexpr std::size_t kFrameHeaderBytes = 5;

using RoomId = std::array<std::uint8_t, 32>;

enum class FrameKind : std::uint8_t {
  join = 1,
  room_ready = 2,
  pake_share = 3,
  confirm = 4,
  peer_info = 5,
  manifest = 6,
  chunk = 7,
  fin = 8,
  error = 9,
};

inline std::string_view kind_name(FrameKind k) {
  switch (k) {
    case FrameKind::join: return "JOIN";
    case FrameKind::room_ready: return "ROOM_READY";
    case FrameKind::pake_share: return "PAKE_SHARE";
    case FrameKind::confirm: return "CONFIRM";
    case FrameKind::peer_info: return "PEER_INFO";
    case FrameKind::manifest: return "MANIFEST";
    case FrameKind::chunk: return "CHUNK";
    case FrameKind::fin: return "FIN";
    case FrameKind::error: return "ERROR";
  }
  return "?";
}

struct Frame {
  FrameKind kind = FrameKind::fin;
  Bytes payload;

  bool operator==(const Frame&) const = default;
};

inline Bytes encode_frame(const Frame& f) {
  if (f.payload.size() > kMaxPayloadBytes) throw InputError("frame payload exceeds 64 KiB");
  Bytes out;
  out.reserve(kFrameHeaderBytes + f.payload.size());
  put_u32_be(out, static_cast<std::uint32_t>(f.payload.size()));
  out.push_back(static_cast<std::uint8_t>(f.kind));
  append(out, ByteView(f.payload));
  return out;
}

template <typename R>
concept ByteReader = requires(R r, std::uint8_t* p, std::size_t n) {
  // Blocks for at least one byte; returns 0 only at end of stream.
  { r.read_some(p, n) } -> std::convertible_to<std::size_t>;
};

template <typename W>
concept ByteWriter = requires(W w, const std::uint8_t* p, std::size_t n) {
  { w.write_all(p, n) };
};

namespace detail {

// Returns false only when the stream ends before the first byte.
template <ByteReader R>
bool read_exact_or_eof(R& reader, std::uint8_t* out, std::size_t len) {
  std::size_t got = 0;
  while (got < len) {
    const std::size_t n = reader.read_some(out + got, len - got);
    if (n == 0) {
      if (got == 0) return false;
      throw TruncationError("stream ended mid-frame");
    }
    got += n;
  }
  return true;
}

template <ByteReader R>
void read_exact(R& reader, std::uint8_t* out, std::size_t len) {
  if (!read_exact_or_eof(reader, out, len)) throw TruncationError("stream ended mid-frame");
}

}  // namespace detail

// One full frame, or nullopt on a clean end-of-stream at a frame boundary.
// The declared length is validated before any payload is buffered.
template <ByteReader R>
std::optional<Frame> read_frame(R& reader) {
  std::array<std::uint8_t, kFrameHeaderBytes> header{};
  if (!detail::read_exact_or_eof(reader, header.data(), 1)) return std::nullopt;
  detail::read_exact(reader, header.data() + 1, header.size() - 1);

  const std::uint32_t len = get_u32_be(ByteView(header.data(), 4));
  if (len > kMaxPayloadBytes) throw ProtocolError("declared frame length exceeds 64 KiB");
  const std::uint8_t kind_code = header[4];
  if (kind_code < 1 || kind_code > 9) throw ProtocolError("unknown frame kind");

  Frame f;
  f.kind = static_cast<FrameKind>(kind_code);
  f.payload.resize(len);
  if (len > 0) detail::read_exact(reader, f.payload.data(), len);
  return f;
}

// As read_frame, but end-of-stream is an error.
template <ByteReader R>
Frame decode_frame(R& reader) {
  auto f = read_frame(reader);
  if (!f) throw TruncationError("stream ended before a frame");
  return std::move(*f);
}

template <ByteWriter W>
void write_frame(W& writer, const Frame& f) {
  const Bytes encoded = encode_frame(f);
  writer.write_all(encoded.data(), encoded.size());
}

// In-memory reader so byte buffers satisfy ByteReader.
class MemReader {
 public:
  explicit MemReader(ByteView data) : data_(data) {}
  std::size_t read_some(std::uint8_t* out, std::size_t len) {
    const std::size_t n = std::min(len, data_.size() - pos_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
              data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n), out);
    pos_ += n;
    return n;
  }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

// ---- payload codecs --------------------------------------------------------

// JOIN carries a passphrase-derived room identifier, never the passphrase.
struct JoinPayload {
  RoomId room_id{};
  Role role = Role::sender;
  std::uint16_t protocol_version = kProtocolVersion;

  bool operator==(const JoinPayload&) const = default;
};

inline Bytes encode_join(const JoinPayload& j) {
  Bytes out;
  out.reserve(35);
  append(out, ByteView(j.room_id.data(), j.room_id.size()));
  out.push_back(role_byte(j.role));
  put_u16_be(out, j.protocol_version);
  return out;
}

inline JoinPayload decode_join(ByteView payload) {
  if (payload.size() != 35) throw ProtocolError("JOIN payload must be 35 bytes");
  JoinPayload j;
  std::copy(payload.begin(), payload.begin() + 32, j.room_id.begin());
  j.role = role_from_byte(payload[32]);
  j.protocol_version = get_u16_be(payload.subspan(32 + 1));
  return j;
}

struct PakeSharePayload {
  Role role = Role::sender;
  Bytes share;  // canonical group element encoding

  bool operator==(const PakeSharePayload&) const = default;
};

inline Bytes encode_pake_share(const PakeSharePayload& p) {
  Bytes out;
  out.reserve(1 + p.share.size());
  out.push_back(role_byte(p.role));
  append(out, ByteView(p.share));
  return out;
}

inline PakeSharePayload decode_pake_share(ByteView payload) {
  if (payload.size() < 2) throw ProtocolError("PAKE_SHARE payload too short");
  PakeSharePayload p;
  p.role = role_from_byte(payload[0]);
  p.share = Bytes(payload.begin() + 1, payload.end());
  return p;
}

inline Bytes encode_confirm(const pake::ConfirmationTag& tag) {
  Bytes out;
  out.reserve(33);
  out.push_back(role_byte(tag.from_role));
  append(out, ByteView(tag.mac.data(), tag.mac.size()));
  return out;
}

inline pake::ConfirmationTag decode_confirm(ByteView payload) {
  if (payload.size() != 33) throw ProtocolError("CONFIRM payload must be 33 bytes");
  pake::ConfirmationTag tag;
  tag.from_role = role_from_byte(payload[0]);
  std::copy(payload.begin() + 1, payload.end(), tag.mac.begin());
  return tag;
}

// PEER_INFO, MANIFEST and CHUNK all carry a sealed unit: an 8-byte
// big-endian sequence index followed by authenticated ciphertext.
struct SealedPayload {
  std::uint64_t index = 0;
  Bytes ciphertext;

  bool operator==(const SealedPayload&) const = default;
};

inline Bytes encode_sealed(const SealedPayload& s) {
  Bytes out;
  out.reserve(8 + s.ciphertext.size());
  put_u64_be(out, s.index);
  append(out, ByteView(s.ciphertext));
  return out;
}

inline SealedPayload decode_sealed(ByteView payload) {
  if (payload.size() < 8) throw ProtocolError("sealed payload too short");
  SealedPayload s;
  s.index = get_u64_be(payload);
  s.ciphertext = Bytes(payload.begin() + 8, payload.end());
  return s;
}

// ERROR payloads are short reason strings ("role taken", "version", ...).
inline Frame make_error_frame(std::string_view reason) {
  return Frame{FrameKind::error, to_bytes(reason)};
}

inline std::string error_reason(const Frame& f) {
  return to_string(ByteView(f.payload));
}

}  // namespace relaywire::wire
