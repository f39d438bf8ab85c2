#pragma once

#include <stdexcept>
#include <string>

namespace jpair {

// All hard failures in the library throw this. The message is meant for the
// CLI user: it names the violated precondition, not the call site.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw error(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

}  // namespace jpair
