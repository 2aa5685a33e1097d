#pragma once

#include <stdexcept>
#include <string>

namespace linkcalc {

enum class errc {
  parse_error,
  invalid_diagram,
  bad_component,
  not_coprime,
  bad_band,
  bad_parameter,
  infinite_slope,
  self_slide,
  resource_limit,
  odd_exponent,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace linkcalc
