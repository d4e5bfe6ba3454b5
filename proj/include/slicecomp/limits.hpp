#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace slicecomp
{
  /// A construction built more states than its budget allows.
  class BudgetExceeded : public std::runtime_error
  {
  public:
    explicit BudgetExceeded(std::size_t states_built)
      : std::runtime_error("state budget exceeded after "
                           + std::to_string(states_built) + " states"),
        states_built_(states_built)
    {
    }
    std::size_t states_built() const { return states_built_; }

  private:
    std::size_t states_built_;
  };

  /// A construction ran past its wall-clock deadline.
  class DeadlineExpired : public std::runtime_error
  {
  public:
    DeadlineExpired() : std::runtime_error("deadline expired") {}
  };

  /// Resource limits for explicit-state constructions.
  struct Limits
  {
    using Clock = std::chrono::steady_clock;

    std::size_t max_states = 1'000'000;
    std::optional<Clock::time_point> deadline;

    /// Throws BudgetExceeded when \p built exceeds the cap.
    void charge(std::size_t built) const
    {
      if (built > max_states)
        throw BudgetExceeded(built);
    }

    void check_deadline() const
    {
      if (deadline && Clock::now() >= *deadline)
        throw DeadlineExpired();
    }
  };
}
