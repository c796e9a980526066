//  Copyright 2026 The lrbkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef LRB_ERROR_HPP_
#define LRB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lrb {

  // Malformed input: bad indices, ragged tables, unparseable files.
  class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Well-formed input that does not satisfy an operation's precondition,
  // e.g. asking for the graph of an LRB that is not thin MC.
  class precondition_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // A derived structure turned out inconsistent. Only reachable from tables
  // that were never validated as left regular bands.
  class structure_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Simple-cycle enumeration exceeded its configured cap.
  class cycle_overflow : public std::runtime_error {
   public:
    explicit cycle_overflow(std::size_t cap)
        : std::runtime_error("simple cycle enumeration exceeded cap of "
                             + std::to_string(cap)),
          cap_(cap) {}

    std::size_t cap() const noexcept {
      return cap_;
    }

   private:
    std::size_t cap_;
  };

}  // namespace lrb

#endif  // LRB_ERROR_HPP_
