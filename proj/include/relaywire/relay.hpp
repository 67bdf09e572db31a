#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "relaywire/bytes.hpp"
#include "relaywire/errors.hpp"
#include "relaywire/net.hpp"
#include "relaywire/role.hpp"
#include "relaywire/store.hpp"
#include "relaywire/wire.hpp"

// Rendezvous-and-glue server: pairs two clients that present the same
// passphrase-derived room identifier, then forwards their frames verbatim in
// both directions. Payloads are never inspected or persisted.
namespace relaywire::relay {

using Clock = std::chrono::steady_clock;

// A connection as the relay sees it: the stream plus a write lock so
// ROOM_READY/ERROR frames and pumped frames never interleave mid-frame.
struct Conn {
  net::TcpStream stream;
  std::string addr;  // transport-observed remote address
  std::mutex write_mu;

  void send_frame(const wire::Frame& f) {
    std::lock_guard lock(write_mu);
    wire::write_frame(stream, f);
  }

  bool try_send_frame(const wire::Frame& f) {
    try {
      send_frame(f);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  void shutdown() {
    if (stream.valid()) stream.shutdown();
  }
};

using ConnPtr = std::shared_ptr<Conn>;

struct RelayStats {
  std::uint64_t rooms_active = 0;
  std::uint64_t bytes_relayed = 0;  // ciphertext payload bytes only
  std::uint64_t sessions_completed = 0;
};

// Pairing state machine, separated from socket I/O so expiry and pairing
// rules are testable with a fabricated clock.
class RoomRegistry {
 public:
  explicit RoomRegistry(std::chrono::seconds ttl) : ttl_(ttl) {}

  struct Waiter {
    std::mutex mu;
    std::condition_variable cv;
    ConnPtr peer;          // set when the room glues
    bool cancelled = false;
  };
  using WaiterPtr = std::shared_ptr<Waiter>;

  enum class JoinResult { waiting, glued, role_taken, room_full };

  struct JoinOutcome {
    JoinResult result;
    WaiterPtr waiter;  // waiting: this side's handle; glued: the peer's, not yet notified
    ConnPtr peer;      // glued: the previously waiting connection
    Role peer_role = Role::sender;
  };

  JoinOutcome join(const wire::RoomId& room, Role role, ConnPtr conn, Clock::time_point now) {
    std::lock_guard lock(mu_);
    auto it = rooms_.find(room);
    if (it != rooms_.end() && it->second.state == State::waiting &&
        now - it->second.created_at > ttl_) {
      cancel_waiting_locked(it->second);
      rooms_.erase(it);
      it = rooms_.end();
    }
    if (it == rooms_.end()) {
      Record rec;
      rec.state = State::waiting;
      rec.created_at = now;
      rec.waiting_role = role;
      rec.waiting_conn = std::move(conn);
      rec.waiter = std::make_shared<Waiter>();
      auto waiter = rec.waiter;
      rooms_.emplace(room, std::move(rec));
      return {JoinResult::waiting, std::move(waiter), nullptr, Role::sender};
    }
    Record& rec = it->second;
    if (rec.state != State::waiting) return {JoinResult::room_full, nullptr, nullptr, Role::sender};
    if (rec.waiting_role == role) return {JoinResult::role_taken, nullptr, nullptr, Role::sender};

    ConnPtr peer = rec.waiting_conn;
    const Role peer_role = rec.waiting_role;
    WaiterPtr waiter = rec.waiter;
    rec.state = State::glued;
    rec.waiting_conn.reset();
    rec.waiter.reset();
    // The caller wakes the waiter once the glued session is set up.
    return {JoinResult::glued, std::move(waiter), std::move(peer), peer_role};
  }

  static void wake_glued(const WaiterPtr& waiter, ConnPtr second) {
    {
      std::lock_guard wlock(waiter->mu);
      waiter->peer = std::move(second);
    }
    waiter->cv.notify_all();
  }

  // Closes waiting rooms older than the ttl; glued rooms are untouched.
  std::size_t expire(Clock::time_point now) {
    std::lock_guard lock(mu_);
    std::size_t expired = 0;
    for (auto it = rooms_.begin(); it != rooms_.end();) {
      if (it->second.state == State::waiting && now - it->second.created_at > ttl_) {
        cancel_waiting_locked(it->second);
        it = rooms_.erase(it);
        ++expired;
      } else {
        ++it;
      }
    }
    return expired;
  }

  // Called by a waiter that timed out or lost its connection.
  void remove_waiting(const wire::RoomId& room, const WaiterPtr& waiter) {
    std::lock_guard lock(mu_);
    auto it = rooms_.find(room);
    if (it != rooms_.end() && it->second.state == State::waiting && it->second.waiter == waiter)
      rooms_.erase(it);
  }

  void remove(const wire::RoomId& room) {
    std::lock_guard lock(mu_);
    rooms_.erase(room);
  }

  void cancel_all() {
    std::lock_guard lock(mu_);
    for (auto& [id, rec] : rooms_)
      if (rec.state == State::waiting) cancel_waiting_locked(rec);
    rooms_.clear();
  }

  std::size_t active_count() const {
    std::lock_guard lock(mu_);
    return rooms_.size();
  }

  std::chrono::seconds ttl() const { return ttl_; }

 private:
  enum class State { waiting, glued };

  struct Record {
    State state = State::waiting;
    Clock::time_point created_at;
    Role waiting_role = Role::sender;
    ConnPtr waiting_conn;
    WaiterPtr waiter;
  };

  void cancel_waiting_locked(Record& rec) {
    if (rec.waiting_conn) rec.waiting_conn->shutdown();
    if (rec.waiter) {
      {
        std::lock_guard wlock(rec.waiter->mu);
        rec.waiter->cancelled = true;
      }
      rec.waiter->cv.notify_all();
    }
  }

  mutable std::mutex mu_;
  std::map<wire::RoomId, Record> rooms_;
  std::chrono::seconds ttl_;
};

// Sliding-window JOIN limiter per source IP.
class JoinRateLimiter {
 public:
  JoinRateLimiter(int max_per_minute) : max_per_minute_(max_per_minute) {}

  bool allow(const std::string& addr, Clock::time_point now) {
    const auto colon = addr.rfind(':');
    const std::string ip = colon == std::string::npos ? addr : addr.substr(0, colon);
    std::lock_guard lock(mu_);
    auto& window = joins_[ip];
    while (!window.empty() && now - window.front() > std::chrono::minutes(1)) window.pop_front();
    if (static_cast<int>(window.size()) >= max_per_minute_) return false;
    window.push_back(now);
    return true;
  }

 private:
  int max_per_minute_;
  std::mutex mu_;
  std::map<std::string, std::deque<Clock::time_point>> joins_;
};

struct RelayConfig {
  std::string listen_addr = "127.0.0.1:0";
  std::string db_path;  // empty: in-memory metadata store
  std::chrono::seconds room_ttl{600};
  int max_joins_per_minute = 10;
  std::chrono::seconds shutdown_grace{30};
  // Test seam: observe or rewrite each forwarded frame (by source role);
  // returning nullopt drops it. Production relays leave this unset and
  // forward verbatim.
  std::function<std::optional<wire::Frame>(Role, const wire::Frame&)> forward_interceptor;
};

class RelayServer {
 public:
  explicit RelayServer(RelayConfig config)
      : config_(std::move(config)),
        registry_(config_.room_ttl),
        limiter_(config_.max_joins_per_minute),
        store_(config_.db_path) {}

  ~RelayServer() { stop(); }

  void start() {
    listener_ = net::TcpListener::bind(config_.listen_addr);
    running_ = true;
    accept_thread_ = std::thread([this] { accept_loop(); });
    sweep_thread_ = std::thread([this] { sweep_loop(); });
  }

  void stop() {
    if (!running_.exchange(false)) return;
    listener_.close();
    // Drain glued sessions up to the grace period, then force-close.
    const auto deadline = Clock::now() + config_.shutdown_grace;
    while (active_sessions_.load() > 0 && Clock::now() < deadline)
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    registry_.cancel_all();
    {
      std::lock_guard lock(conns_mu_);
      for (auto& weak : live_conns_)
        if (auto conn = weak.lock()) conn->shutdown();
    }
    if (accept_thread_.joinable()) accept_thread_.join();
    if (sweep_thread_.joinable()) sweep_thread_.join();
    std::lock_guard lock(threads_mu_);
    for (auto& t : handler_threads_)
      if (t.joinable()) t.join();
    handler_threads_.clear();
  }

  std::string listen_addr() const { return listener_.local_addr(); }
  std::uint16_t port() const { return listener_.port(); }

  RelayStats stats() const {
    RelayStats s;
    s.rooms_active = registry_.active_count();
    s.bytes_relayed = bytes_relayed_.load();
    s.sessions_completed = sessions_completed_.load();
    return s;
  }

  // Instrumentation for the buffering bound: a pump holds at most one frame
  // at a time, so these report the worst case observed across all sessions.
  std::uint64_t peak_buffered_frames_per_direction() const { return peak_frames_.load(); }
  std::uint64_t peak_buffered_bytes_per_direction() const { return peak_bytes_.load(); }

  MetaStore& store() { return store_; }
  RoomRegistry& registry() { return registry_; }

 private:
  struct Session {
    ConnPtr sender;
    ConnPtr receiver;
    std::string room_hex;
    wire::RoomId room_id{};
    std::atomic<std::uint64_t> bytes{0};
    std::atomic<bool> fin_forwarded{false};
    std::atomic<int> pumps_left{2};
  };
  using SessionPtr = std::shared_ptr<Session>;

  static std::int64_t wall_now() {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  }

  void accept_loop() {
    while (running_) {
      auto stream = listener_.accept(std::chrono::milliseconds(200));
      if (!stream) continue;
      auto conn = std::make_shared<Conn>();
      conn->stream = std::move(*stream);
      try {
        conn->addr = conn->stream.remote_addr();
      } catch (const Error&) {
        continue;
      }
      {
        std::lock_guard lock(conns_mu_);
        live_conns_.erase(std::remove_if(live_conns_.begin(), live_conns_.end(),
                                         [](const std::weak_ptr<Conn>& w) { return w.expired(); }),
                          live_conns_.end());
        live_conns_.push_back(conn);
      }
      std::lock_guard lock(threads_mu_);
      handler_threads_.emplace_back([this, conn] { handle_connection(conn); });
    }
  }

  void sweep_loop() {
    auto last_db_sweep = Clock::now();
    while (running_) {
      std::this_thread::sleep_for(std::chrono::milliseconds(250));
      registry_.expire(Clock::now());
      if (Clock::now() - last_db_sweep > std::chrono::seconds(60)) {
        store_.sweep(wall_now(), config_.room_ttl.count());
        last_db_sweep = Clock::now();
      }
    }
  }

  void handle_connection(ConnPtr conn) {
    wire::JoinPayload join;
    try {
      conn->stream.set_recv_timeout(std::chrono::seconds(30));
      auto first = wire::read_frame(conn->stream);
      if (!first) return;
      if (first->kind != wire::FrameKind::join) {
        conn->try_send_frame(wire::make_error_frame("protocol: JOIN must be the first frame"));
        return;
      }
      join = wire::decode_join(first->payload);
    } catch (const Error&) {
      conn->try_send_frame(wire::make_error_frame("protocol"));
      return;
    }
    if (join.protocol_version != wire::kProtocolVersion) {
      conn->try_send_frame(wire::make_error_frame("version"));
      return;
    }
    if (!limiter_.allow(conn->addr, Clock::now())) {
      conn->try_send_frame(wire::make_error_frame("rate limited"));
      return;
    }

    const std::string room_hex = to_hex(ByteView(join.room_id.data(), join.room_id.size()));
    auto outcome = registry_.join(join.room_id, join.role, conn, Clock::now());
    switch (outcome.result) {
      case RoomRegistry::JoinResult::role_taken:
        conn->try_send_frame(wire::make_error_frame("role taken"));
        return;
      case RoomRegistry::JoinResult::room_full:
        conn->try_send_frame(wire::make_error_frame("room full"));
        return;
      case RoomRegistry::JoinResult::waiting: {
        store_.record_join(room_hex, join.role == Role::sender, conn->addr, wall_now());
        ConnPtr peer = wait_for_peer(join.room_id, outcome.waiter);
        if (!peer) return;  // expired, cancelled, or server stopping
        // The gluing side set everything up; this thread pumps its own
        // inbound direction.
        auto session = take_session_for(conn);
        if (session) pump(session, join.role, conn, peer);
        return;
      }
      case RoomRegistry::JoinResult::glued: {
        store_.record_join(room_hex, join.role == Role::sender, conn->addr, wall_now());
        store_.record_glued(room_hex, wall_now());
        ConnPtr peer = outcome.peer;
        auto session = std::make_shared<Session>();
        session->sender = join.role == Role::sender ? conn : peer;
        session->receiver = join.role == Role::sender ? peer : conn;
        session->room_hex = room_hex;
        session->room_id = join.room_id;
        active_sessions_.fetch_add(1);
        publish_session_for(peer, session);
        // Both sides learn their own transport-observed address, then the
        // waiting thread starts pumping its direction.
        bool ok = peer->try_send_frame(
            wire::Frame{wire::FrameKind::room_ready, to_bytes(peer->addr)});
        ok = conn->try_send_frame(wire::Frame{wire::FrameKind::room_ready, to_bytes(conn->addr)}) && ok;
        RoomRegistry::wake_glued(outcome.waiter, conn);
        if (!ok) {
          conn->shutdown();
          peer->shutdown();
        }
        pump(session, join.role, conn, peer);
        return;
      }
    }
  }

  // Parks the waiting side until a peer arrives or the room expires.
  ConnPtr wait_for_peer(const wire::RoomId& room, const RoomRegistry::WaiterPtr& waiter) {
    std::unique_lock lock(waiter->mu);
    const auto slack = std::chrono::seconds(2);
    waiter->cv.wait_for(lock, registry_.ttl() + slack,
                        [&] { return waiter->peer != nullptr || waiter->cancelled; });
    if (waiter->peer) return waiter->peer;
    lock.unlock();
    registry_.remove_waiting(room, waiter);
    return nullptr;
  }

  // Hand-off of the Session object from the gluing thread to the waiting
  // thread, keyed by connection identity.
  void publish_session_for(const ConnPtr& conn, SessionPtr session) {
    std::lock_guard lock(sessions_mu_);
    pending_sessions_[conn.get()] = std::move(session);
  }

  SessionPtr take_session_for(const ConnPtr& conn) {
    // The gluing thread publishes before it notifies, but give the map a
    // moment in case this thread won the wake-up race.
    for (int i = 0; i < 100; ++i) {
      {
        std::lock_guard lock(sessions_mu_);
        auto it = pending_sessions_.find(conn.get());
        if (it != pending_sessions_.end()) {
          SessionPtr s = std::move(it->second);
          pending_sessions_.erase(it);
          return s;
        }
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    return nullptr;
  }

  // One direction of a glued session: read a frame, forward it verbatim.
  // Blocking writes give flow control; at most one frame is buffered here.
  void pump(const SessionPtr& session, Role from_role, const ConnPtr& from, const ConnPtr& to) {
    from->stream.clear_recv_timeout();
    bool forwarded_fin = false;
    try {
      for (;;) {
        auto frame = wire::read_frame(from->stream);
        if (!frame) break;  // peer disconnected
        std::optional<wire::Frame> out = std::move(*frame);
        if (config_.forward_interceptor) out = config_.forward_interceptor(from_role, *out);
        if (!out) continue;  // interceptor dropped it

        const std::uint64_t frame_bytes = wire::kFrameHeaderBytes + out->payload.size();
        update_peak(peak_frames_, 1);
        update_peak(peak_bytes_, frame_bytes);
        if (out->kind == wire::FrameKind::chunk || out->kind == wire::FrameKind::manifest ||
            out->kind == wire::FrameKind::peer_info) {
          session->bytes.fetch_add(out->payload.size());
          bytes_relayed_.fetch_add(out->payload.size());
        }
        to->send_frame(*out);
        if (out->kind == wire::FrameKind::fin) {
          forwarded_fin = true;
          break;
        }
      }
    } catch (const Error&) {
      // fall through to teardown
    }
    if (forwarded_fin) {
      session->fin_forwarded = true;
    } else if (!session->fin_forwarded) {
      to->try_send_frame(wire::make_error_frame("peer gone"));
    }
    from->shutdown();
    to->shutdown();
    if (session->pumps_left.fetch_sub(1) == 1) finalize_session(session);
  }

  void finalize_session(const SessionPtr& session) {
    const bool completed = session->fin_forwarded.load();
    if (completed) sessions_completed_.fetch_add(1);
    store_.record_closed(session->room_hex, session->bytes.load(), completed, wall_now());
    registry_.remove(session->room_id);
    active_sessions_.fetch_sub(1);
  }

  static void update_peak(std::atomic<std::uint64_t>& peak, std::uint64_t value) {
    std::uint64_t cur = peak.load();
    while (value > cur && !peak.compare_exchange_weak(cur, value)) {
    }
  }

  RelayConfig config_;
  RoomRegistry registry_;
  JoinRateLimiter limiter_;
  MetaStore store_;
  net::TcpListener listener_;
  std::thread accept_thread_;
  std::thread sweep_thread_;
  std::atomic<bool> running_{false};
  std::atomic<std::uint64_t> bytes_relayed_{0};
  std::atomic<std::uint64_t> sessions_completed_{0};
  std::atomic<std::uint64_t> peak_frames_{0};
  std::atomic<std::uint64_t> peak_bytes_{0};
  std::atomic<int> active_sessions_{0};
  std::mutex threads_mu_;
  std::vector<std::thread> handler_threads_;
  std::mutex conns_mu_;
  std::vector<std::weak_ptr<Conn>> live_conns_;
  std::mutex sessions_mu_;
  std::map<const Conn*, SessionPtr> pending_sessions_;
};

}  // namespace relaywire::relay
