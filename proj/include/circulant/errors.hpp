#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected graph family parameters.
class spec_error : public error {
 public:
  enum class kind { empty_jumps, jump_out_of_range, disconnected };
  spec_error(kind k, const std::string& what) : error(what), kind_(k) {}
  kind which() const { return kind_; }

 private:
  kind kind_;
};

// Problem size exceeds the configured brute-force cap.
class too_large_error : public error {
 public:
  using error::error;
};

// Escalation reached the precision cap without certifying the result.
class precision_error : public error {
 public:
  using error::error;
};

// Chebyshev transform of a constant Laurent polynomial is not defined.
class constant_poly_error : public error {
 public:
  using error::error;
};

// A root enclosure touches the unit circle where separation is guaranteed.
class circle_margin_error : public error {
 public:
  using error::error;
};

// Square-free part requested for a zero argument.
class undefined_squarefree_error : public error {
 public:
  using error::error;
};

// The parity decomposition did not produce an exact square: bug canary.
class not_perfect_square_error : public error {
 public:
  using error::error;
};

}  // namespace circulant
