#pragma once

#include <sstream>
#include <string>

namespace heatgraph::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

/// Current threshold; initialized from HEATGRAPH_LOG (debug|info|warn|error|off),
/// default warn. Messages go to stderr so primary outputs stay clean.
Level level() noexcept;
void set_level(Level level) noexcept;

void write(Level level, const std::string& message);

namespace detail {
template <typename... Args>
void emit(Level lvl, Args&&... args) {
    if (lvl < level()) return;
    std::ostringstream oss;
    (oss << ... << args);
    write(lvl, oss.str());
}
} // namespace detail

template <typename... Args> void debug(Args&&... args) { detail::emit(Level::debug, std::forward<Args>(args)...); }
template <typename... Args> void info(Args&&... args)  { detail::emit(Level::info, std::forward<Args>(args)...); }
template <typename... Args> void warn(Args&&... args)  { detail::emit(Level::warn, std::forward<Args>(args)...); }
template <typename... Args> void error(Args&&... args) { detail::emit(Level::error, std::forward<Args>(args)...); }

} // namespace heatgraph::log
