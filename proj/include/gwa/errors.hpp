#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwa {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based byte offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition does not hold (e.g. a point that is not a root).
class domain_error : public error {
 public:
  using error::error;
};

/// An elementary Morita move whose coprimality hypothesis fails.
class move_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class index_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace gwa
