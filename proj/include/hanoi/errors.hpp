#pragma once

#include <stdexcept>
#include <string>

namespace hanoi {

/// A search would exceed its configured state budget. Never truncated silently.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs are well-formed but outside an operation's stated hypothesis.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move that breaks one of the puzzle rules.
class IllegalMove : public std::runtime_error {
 public:
  enum class Rule {
    kTopmost,  // the disk is not the topmost disk of the source peg (R2)
    kSize,     // the target peg's topmost disk is smaller (R3)
  };

  IllegalMove(Rule rule, const std::string& what) : std::runtime_error(what), rule_(rule) {}

  Rule rule() const noexcept { return rule_; }

 private:
  Rule rule_;
};

}  // namespace hanoi
