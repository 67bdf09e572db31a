#pragma once

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "relaywire/errors.hpp"

// Minimal RAII layer over blocking IPv4 TCP sockets. Streams satisfy the
// wire module's ByteReader/ByteWriter concepts.
namespace relaywire::net {

inline std::string errno_text(std::string_view what) {
  return std::string(what) + ": " + std::strerror(errno);
}

struct Endpoint {
  std::string host;
  std::uint16_t port = 0;
};

inline Endpoint parse_endpoint(std::string_view addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 >= addr.size())
    throw InputError("address must be host:port");
  Endpoint ep;
  ep.host = std::string(addr.substr(0, colon));
  const std::string port_text(addr.substr(colon + 1));
  char* end = nullptr;
  const long port = std::strtol(port_text.c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || port < 0 || port > 65535)
    throw InputError("invalid port in address");
  ep.port = static_cast<std::uint16_t>(port);
  return ep;
}

namespace detail {

inline sockaddr_in resolve_v4(const Endpoint& ep) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  const std::string port_text = std::to_string(ep.port);
  if (getaddrinfo(ep.host.c_str(), port_text.c_str(), &hints, &result) != 0 || result == nullptr)
    throw TransportError("cannot resolve " + ep.host);
  sockaddr_in addr{};
  std::memcpy(&addr, result->ai_addr, sizeof(addr));
  freeaddrinfo(result);
  return addr;
}

inline std::string addr_text(const sockaddr_in& addr) {
  char ip[INET_ADDRSTRLEN] = {0};
  inet_ntop(AF_INET, &addr.sin_addr, ip, sizeof(ip));
  return std::string(ip) + ":" + std::to_string(ntohs(addr.sin_port));
}

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  Fd(Fd&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  Fd& operator=(Fd&& other) noexcept {
    if (this != &other) {
      reset();
      fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
  }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { reset(); }

  int get() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

}  // namespace detail

class TcpStream {
 public:
  TcpStream() = default;
  explicit TcpStream(int fd) : fd_(fd) {}

  // Blocking connect, with an optional overall timeout for the dial.
  static TcpStream connect(std::string_view addr,
                           std::optional<std::chrono::milliseconds> timeout = std::nullopt) {
    const auto target = detail::resolve_v4(parse_endpoint(addr));
    detail::Fd fd(::socket(AF_INET, SOCK_STREAM | (timeout ? SOCK_NONBLOCK : 0), 0));
    if (!fd.valid()) throw TransportError(errno_text("socket"));

    if (!timeout) {
      if (::connect(fd.get(), reinterpret_cast<const sockaddr*>(&target), sizeof(target)) != 0) {
        if (errno == ECONNREFUSED) throw TransportError("connection refused");
        throw TransportError(errno_text("connect"));
      }
      return TcpStream(std::move(fd));
    }

    if (::connect(fd.get(), reinterpret_cast<const sockaddr*>(&target), sizeof(target)) != 0) {
      if (errno == ECONNREFUSED) throw TransportError("connection refused");
      if (errno != EINPROGRESS) throw TransportError(errno_text("connect"));
      pollfd pfd{fd.get(), POLLOUT, 0};
      const int ready = ::poll(&pfd, 1, static_cast<int>(timeout->count()));
      if (ready == 0) throw TimeoutError("connect timed out");
      if (ready < 0) throw TransportError(errno_text("poll"));
      int soerr = 0;
      socklen_t len = sizeof(soerr);
      ::getsockopt(fd.get(), SOL_SOCKET, SO_ERROR, &soerr, &len);
      if (soerr != 0) {
        if (soerr == ECONNREFUSED) throw TransportError("connection refused");
        errno = soerr;
        throw TransportError(errno_text("connect"));
      }
    }
    // back to blocking mode
    const int flags = ::fcntl(fd.get(), F_GETFL, 0);
    ::fcntl(fd.get(), F_SETFL, flags & ~O_NONBLOCK);
    return TcpStream(std::move(fd));
  }

  bool valid() const { return fd_.valid(); }
  int native_handle() const { return fd_.get(); }

  void set_recv_timeout(std::chrono::milliseconds timeout) {
    timeval tv{};
    tv.tv_sec = static_cast<time_t>(timeout.count() / 1000);
    tv.tv_usec = static_cast<suseconds_t>((timeout.count() % 1000) * 1000);
    ::setsockopt(fd_.get(), SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
  }

  void clear_recv_timeout() { set_recv_timeout(std::chrono::milliseconds(0)); }

  std::size_t read_some(std::uint8_t* out, std::size_t len) {
    for (;;) {
      const ssize_t n = ::recv(fd_.get(), out, len, 0);
      if (n > 0) return static_cast<std::size_t>(n);
      if (n == 0) return 0;  // orderly shutdown
      if (errno == EINTR) continue;
      if (errno == EAGAIN || errno == EWOULDBLOCK) throw TimeoutError("read timed out");
      throw TransportError(errno_text("recv"));
    }
  }

  void write_all(const std::uint8_t* data, std::size_t len) {
    std::size_t sent = 0;
    while (sent < len) {
      const ssize_t n = ::send(fd_.get(), data + sent, len - sent, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        if (errno == EPIPE || errno == ECONNRESET) throw TransportError("peer closed connection");
        throw TransportError(errno_text("send"));
      }
      sent += static_cast<std::size_t>(n);
    }
  }

  std::string remote_addr() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    if (::getpeername(fd_.get(), reinterpret_cast<sockaddr*>(&addr), &len) != 0)
      throw TransportError(errno_text("getpeername"));
    return detail::addr_text(addr);
  }

  std::string local_addr() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    if (::getsockname(fd_.get(), reinterpret_cast<sockaddr*>(&addr), &len) != 0)
      throw TransportError(errno_text("getsockname"));
    return detail::addr_text(addr);
  }

  // Unblocks any reader/writer; safe to call more than once.
  void shutdown() {
    if (fd_.valid()) ::shutdown(fd_.get(), SHUT_RDWR);
  }

  void close() { fd_.reset(); }

 private:
  explicit TcpStream(detail::Fd fd) : fd_(std::move(fd)) {}
  detail::Fd fd_;
};

class TcpListener {
 public:
  TcpListener() = default;

  static TcpListener bind(std::string_view addr, int backlog = 64) {
    const auto ep = parse_endpoint(addr);
    sockaddr_in local{};
    local.sin_family = AF_INET;
    local.sin_port = htons(ep.port);
    if (ep.host == "0.0.0.0" || ep.host.empty()) {
      local.sin_addr.s_addr = INADDR_ANY;
    } else {
      local = detail::resolve_v4(ep);
    }
    detail::Fd fd(::socket(AF_INET, SOCK_STREAM, 0));
    if (!fd.valid()) throw TransportError(errno_text("socket"));
    const int one = 1;
    ::setsockopt(fd.get(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd.get(), reinterpret_cast<const sockaddr*>(&local), sizeof(local)) != 0)
      throw TransportError(errno_text("bind"));
    if (::listen(fd.get(), backlog) != 0) throw TransportError(errno_text("listen"));
    TcpListener l;
    l.fd_ = std::move(fd);
    return l;
  }

  bool valid() const { return fd_.valid(); }

  std::string local_addr() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    if (::getsockname(fd_.get(), reinterpret_cast<sockaddr*>(&addr), &len) != 0)
      throw TransportError(errno_text("getsockname"));
    return detail::addr_text(addr);
  }

  std::uint16_t port() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    ::getsockname(fd_.get(), reinterpret_cast<sockaddr*>(&addr), &len);
    return ntohs(addr.sin_port);
  }

  // Waits up to `timeout` (forever if unset); nullopt on timeout or if the
  // listener was closed from another thread.
  std::optional<TcpStream> accept(
      std::optional<std::chrono::milliseconds> timeout = std::nullopt) {
    pollfd pfd{fd_.get(), POLLIN, 0};
    const int wait_ms = timeout ? static_cast<int>(timeout->count()) : -1;
    const int ready = ::poll(&pfd, 1, wait_ms);
    if (ready <= 0) return std::nullopt;
    const int conn = ::accept(fd_.get(), nullptr, nullptr);
    if (conn < 0) return std::nullopt;
    return TcpStream(conn);
  }

  void close() { fd_.reset(); }

 private:
  detail::Fd fd_;
};

}  // namespace relaywire::net
