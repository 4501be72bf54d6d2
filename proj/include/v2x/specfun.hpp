#pragma once

namespace v2x {

// Exponential integral E1(x) for x > 0. Relative accuracy is close to machine
// precision; underflows to exactly 0 for x beyond ~745 where e^-x is not
// representable. Throws std::domain_error for x <= 0 or non-finite x.
double exp_integral_e1(double x);

// e^x * E1(x), stable for arbitrarily large x where exp_integral_e1 would
// underflow. Lies in (1/(x+1), 1/x) for every x > 0.
double scaled_e1(double x);

}  // namespace v2x
