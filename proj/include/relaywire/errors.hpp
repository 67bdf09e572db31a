#pragma once

#include <stdexcept>
#include <string>

namespace relaywire {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input that never reached the protocol layer (bad arguments,
// empty passphrase, oversize plaintext).
class InputError : public Error {
 public:
  using Error::Error;
};

// Byte-level decode failures: non-canonical group encodings, bad frame
// layout, unknown payload shapes.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Peer (or relay) violated the protocol: wrong frame kind, oversize length,
// identity-element share, version mismatch.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Stream ended in the middle of a frame.
class TruncationError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

// An API was driven out of order (double finish, reuse after close).
class StateError : public Error {
 public:
  using Error::Error;
};

// Key confirmation or ciphertext authentication failed.
class AuthenticationError : public Error {
 public:
  using Error::Error;
};

// Authenticated data failed verification mid-transfer (bad chunk tag,
// digest mismatch, truncated chunk sequence).
class IntegrityError : public AuthenticationError {
 public:
  using AuthenticationError::AuthenticationError;
};

// Connection-level failures: refused, reset, relay errors.
class TransportError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public TransportError {
 public:
  using TransportError::TransportError;
};

// Local filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// Refusing to overwrite an existing output file.
class CollisionError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace relaywire
