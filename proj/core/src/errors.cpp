#include "semiconj/errors.hpp"

namespace semiconj {

  AssociativityViolation::AssociativityViolation(std::size_t a_,
                                                 std::size_t b_,
                                                 std::size_t c_)
      : Error("associativity fails: (" + std::to_string(a_) + "*"
              + std::to_string(b_) + ")*" + std::to_string(c_) + " != "
              + std::to_string(a_) + "*(" + std::to_string(b_) + "*"
              + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}

  MultiplicativityViolation::MultiplicativityViolation(std::size_t s_,
                                                       std::size_t t_,
                                                       double      dev)
      : Error("representation is not multiplicative at (" + std::to_string(s_)
              + ", " + std::to_string(t_)
              + "), deviation = " + std::to_string(dev)),
        s(s_),
        t(t_),
        deviation(dev) {}

}  // namespace semiconj
