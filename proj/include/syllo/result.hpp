// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYLLO_RESULT_HPP
#define SYLLO_RESULT_HPP

#include <stdexcept>
#include <utility>
#include <variant>

namespace syllo {

/// Value-or-error carrier for operations whose failure is an expected
/// outcome (parse rejects, structure guards) rather than a bug.
template <typename T, typename E>
class Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : v_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    require(ok(), "Result::value() on error");
    return std::get<0>(v_);
  }
  T&& value() && {
    require(ok(), "Result::value() on error");
    return std::get<0>(std::move(v_));
  }
  const E& error() const& {
    require(!ok(), "Result::error() on value");
    return std::get<1>(v_);
  }

 private:
  static void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
  }
  std::variant<T, E> v_;
};

}  // namespace syllo

#endif  // SYLLO_RESULT_HPP
