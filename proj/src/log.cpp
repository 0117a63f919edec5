#include "planarlab/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace planarlab {

namespace {
std::atomic<LogLevel> g_level{LogLevel::Warn};
std::mutex g_mu;
}  // namespace

void set_log_level(LogLevel level) noexcept { g_level.store(level); }
LogLevel log_level() noexcept { return g_level.load(); }

void log_message(LogLevel level, const std::string& msg) {
  if (level < g_level.load()) return;
  static const char* names[] = {"debug", "info", "warn", "error"};
  std::lock_guard lock(g_mu);
  std::cerr << "[planarlab " << names[static_cast<int>(level)] << "] " << msg << '\n';
}

}  // namespace planarlab
