#pragma once

#include <sqlite3.h>

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>

#include "relaywire/errors.hpp"

namespace relaywire::relay {

// Connection-metadata store behind the relay: room identifiers, endpoint
// addresses and timestamps only. Frame payloads never touch it.
class MetaStore {
 public:
  // Empty path opens a private in-memory database.
  explicit MetaStore(const std::string& path) {
    const std::string target = path.empty() ? ":memory:" : path;
    if (sqlite3_open(target.c_str(), &db_) != SQLITE_OK)
      throw IoError("cannot open metadata store: " + target);
    sqlite3_busy_timeout(db_, 5000);
    exec(
        "CREATE TABLE IF NOT EXISTS rooms ("
        "  room_id TEXT PRIMARY KEY,"
        "  sender_addr TEXT,"
        "  receiver_addr TEXT,"
        "  created_at INTEGER NOT NULL,"
        "  glued_at INTEGER,"
        "  closed_at INTEGER,"
        "  state TEXT NOT NULL,"
        "  bytes_relayed INTEGER NOT NULL DEFAULT 0,"
        "  completed INTEGER NOT NULL DEFAULT 0)");
  }

  MetaStore(const MetaStore&) = delete;
  MetaStore& operator=(const MetaStore&) = delete;

  ~MetaStore() {
    if (db_ != nullptr) sqlite3_close(db_);
  }

  void record_join(std::string_view room_hex, bool is_sender, std::string_view addr,
                   std::int64_t now) {
    std::lock_guard lock(mu_);
    Stmt stmt(db_,
              "INSERT INTO rooms (room_id, created_at, state) VALUES (?1, ?2, 'waiting') "
              "ON CONFLICT(room_id) DO NOTHING");
    stmt.bind_text(1, room_hex);
    stmt.bind_int64(2, now);
    stmt.step_done();
    Stmt update(db_, is_sender ? "UPDATE rooms SET sender_addr = ?2 WHERE room_id = ?1"
                               : "UPDATE rooms SET receiver_addr = ?2 WHERE room_id = ?1");
    update.bind_text(1, room_hex);
    update.bind_text(2, addr);
    update.step_done();
  }

  void record_glued(std::string_view room_hex, std::int64_t now) {
    std::lock_guard lock(mu_);
    Stmt stmt(db_, "UPDATE rooms SET state = 'glued', glued_at = ?2 WHERE room_id = ?1");
    stmt.bind_text(1, room_hex);
    stmt.bind_int64(2, now);
    stmt.step_done();
  }

  void record_closed(std::string_view room_hex, std::uint64_t bytes_relayed, bool completed,
                     std::int64_t now) {
    std::lock_guard lock(mu_);
    Stmt stmt(db_,
              "UPDATE rooms SET state = 'closed', closed_at = ?2, bytes_relayed = ?3, "
              "completed = ?4 WHERE room_id = ?1");
    stmt.bind_text(1, room_hex);
    stmt.bind_int64(2, now);
    stmt.bind_int64(3, static_cast<std::int64_t>(bytes_relayed));
    stmt.bind_int64(4, completed ? 1 : 0);
    stmt.step_done();
  }

  // Drops closed rooms older than the retention window. Returns rows removed.
  int sweep(std::int64_t now, std::int64_t retention_secs) {
    std::lock_guard lock(mu_);
    Stmt stmt(db_, "DELETE FROM rooms WHERE state = 'closed' AND closed_at < ?1");
    stmt.bind_int64(1, now - retention_secs);
    stmt.step_done();
    return sqlite3_changes(db_);
  }

  struct Totals {
    std::int64_t rooms_active = 0;  // waiting or glued
    std::int64_t sessions_completed = 0;
    std::int64_t bytes_relayed = 0;
  };

  Totals totals() {
    std::lock_guard lock(mu_);
    Totals t;
    {
      Stmt stmt(db_, "SELECT COUNT(*) FROM rooms WHERE state IN ('waiting','glued')");
      t.rooms_active = stmt.query_int64();
    }
    {
      Stmt stmt(db_, "SELECT COUNT(*) FROM rooms WHERE completed = 1");
      t.sessions_completed = stmt.query_int64();
    }
    {
      Stmt stmt(db_, "SELECT COALESCE(SUM(bytes_relayed), 0) FROM rooms");
      t.bytes_relayed = stmt.query_int64();
    }
    return t;
  }

 private:
  class Stmt {
   public:
    Stmt(sqlite3* db, const char* sql) {
      if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK)
        throw IoError(std::string("metadata store: ") + sqlite3_errmsg(db));
    }
    ~Stmt() { sqlite3_finalize(stmt_); }
    void bind_text(int idx, std::string_view v) {
      sqlite3_bind_text(stmt_, idx, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT);
    }
    void bind_int64(int idx, std::int64_t v) { sqlite3_bind_int64(stmt_, idx, v); }
    void step_done() {
      if (sqlite3_step(stmt_) != SQLITE_DONE) throw IoError("metadata store write failed");
    }
    std::int64_t query_int64() {
      if (sqlite3_step(stmt_) != SQLITE_ROW) throw IoError("metadata store read failed");
      return sqlite3_column_int64(stmt_, 0);
    }

   private:
    sqlite3_stmt* stmt_ = nullptr;
  };

  void exec(const char* sql) {
    char* err = nullptr;
    if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
      std::string msg = err != nullptr ? err : "unknown";
      sqlite3_free(err);
      throw IoError("metadata store: " + msg);
    }
  }

  sqlite3* db_ = nullptr;
  std::mutex mu_;
};

}  // namespace relaywire::relay
