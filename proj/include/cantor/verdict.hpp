#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "cantor/errors.hpp"

namespace cantor {

enum class Status { Proved, Refuted, Unknown };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Refuted: return "refuted";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

/// Three-valued certified result. Proved and Refuted carry machine-checkable
/// witnesses; Unknown records the horizon that was exhausted while looking.
/// The witness types vary per operation, so they are template parameters.
template <class P = std::monostate, class R = P>
class Verdict {
 public:
  static Verdict proved(P witness) {
    Verdict v;
    v.status_ = Status::Proved;
    v.proof_ = std::move(witness);
    return v;
  }

  static Verdict refuted(R witness) {
    Verdict v;
    v.status_ = Status::Refuted;
    v.refutation_ = std::move(witness);
    return v;
  }

  static Verdict unknown(std::size_t horizon) {
    Verdict v;
    v.status_ = Status::Unknown;
    v.horizon_ = horizon;
    return v;
  }

  Status status() const { return status_; }
  bool proved() const { return status_ == Status::Proved; }
  bool refuted() const { return status_ == Status::Refuted; }
  bool unknown() const { return status_ == Status::Unknown; }
  bool decided() const { return status_ != Status::Unknown; }

  const P& witness() const {
    require(proved(), ErrorKind::InvalidArgument, "verdict carries no proof witness");
    return *proof_;
  }

  const R& refutation() const {
    require(refuted(), ErrorKind::InvalidArgument, "verdict carries no refutation witness");
    return *refutation_;
  }

  std::size_t horizon() const {
    require(unknown(), ErrorKind::InvalidArgument, "verdict is decided; no horizon");
    return horizon_;
  }

 private:
  Verdict() = default;
  Status status_ = Status::Unknown;
  std::optional<P> proof_;
  std::optional<R> refutation_;
  std::size_t horizon_ = 0;
};

// Membership verdicts carry stage/row/child indices as witnesses; for
// Pi-side proofs the witness is the count of stages that were checked.
using MembershipVerdict = Verdict<std::size_t, std::size_t>;

}  // namespace cantor
