// Copyright 2026 The symfun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMFUN_SPACE_CONFIG_HPP_
#define SYMFUN_SPACE_CONFIG_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "symfun/space.hpp"

namespace symfun {

/// Malformed descriptor text. `field()` names the offending key and
/// `position()` is the byte offset in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string field, std::size_t position, const std::string& message);
  const std::string& field() const { return field_; }
  std::size_t position() const { return position_; }

 private:
  std::string field_;
  std::size_t position_;
};

/// Space descriptor grammar:
///
///   space  := kind ':' param (',' param)*
///   param  := key '=' value
///   family := name '(' param (',' param)* ')' | name ':' param (',' param)*
///
///   lp:p=2                                  p may be inf
///   orlicz:n=power(p=3)
///   orlicz:n=powerlog(p=2,a=1)
///   orlicz:n=piecewise(p_low=2,p_high=3,knot=1)
///   lorentz:q=1,psi=power:r=0.5
///   lorentz:q=2,psi=powersum(r1=0.3,r2=0.7)
///   lorentz:q=1,psi=plog(start=-60,blocks=0.2x15/1x15/0.2x15/1x15)
///   x1:inner=(lp:p=2)
///
/// Every kind except x1 accepts domain=unit|halfline (default unit).
SpaceDescriptor parse_space(std::string_view text);

/// Canonical text; parse_space(format_space(s)) == s bit for bit.
std::string format_space(const SpaceDescriptor& s);

/// Shortest round-trip decimal form; "inf" for infinity.
std::string format_number(double v);
double parse_number(std::string_view text, const std::string& field);

}  // namespace symfun

#endif  // SYMFUN_SPACE_CONFIG_HPP_
