#pragma once
// Error taxonomy shared by the whole library. One exception type with a kind
// tag keeps call sites simple while letting tests assert the exact failure.

#include <stdexcept>
#include <string>

namespace census {

enum class Err {
  InvalidSpec,
  OrderCap,
  NotSubgroup,
  NotNormal,
  NotProperSubgroup,
  NotCovering,
  NotPGroup,
  IsCyclic,
  NotComposite,
  TooSmall,
  SplitFailed,
  ParseError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidSpec: return "InvalidSpec";
    case Err::OrderCap: return "OrderCap";
    case Err::NotSubgroup: return "NotSubgroup";
    case Err::NotNormal: return "NotNormal";
    case Err::NotProperSubgroup: return "NotProperSubgroup";
    case Err::NotCovering: return "NotCovering";
    case Err::NotPGroup: return "NotPGroup";
    case Err::IsCyclic: return "IsCyclic";
    case Err::NotComposite: return "NotComposite";
    case Err::TooSmall: return "TooSmall";
    case Err::SplitFailed: return "SplitFailed";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

// Always-on internal cross-check (independent of NDEBUG). A failure here means
// two supposedly-equivalent computations disagreed, i.e. an engine bug.
#define CENSUS_CHECK(cond, msg)                                                     \
  do {                                                                              \
    if (!(cond)) ::census::fail(::census::Err::Internal, std::string(msg));         \
  } while (0)

}  // namespace census
