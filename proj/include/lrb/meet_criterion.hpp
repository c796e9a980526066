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

// Deciding whether the face poset is a meet-semilattice from products and
// supports alone, pair by pair.

#ifndef LRB_MEET_CRITERION_HPP_
#define LRB_MEET_CRITERION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "poset.hpp"
#include "support.hpp"
#include "table.hpp"

namespace lrb {

  //! Which condition a pair (x, y) satisfies.
  enum class MeetCase : std::uint8_t {
    none            = 0,  // no condition holds
    commuting       = 1,  // xy = yx
    no_common_upper = 2,  // xy != yx and nothing lies above both
    support_meet    = 3,  // xy != yx and a unique common upper bound has the
                          // least support among all common upper bounds
  };

  constexpr std::string_view to_string(MeetCase c) noexcept {
    switch (c) {
      case MeetCase::commuting:
        return "commuting";
      case MeetCase::no_common_upper:
        return "no-common-upper-bound";
      case MeetCase::support_meet:
        return "unique-support-meet";
      case MeetCase::none:
        break;
    }
    return "none";
  }

  struct MeetCriterionReport {
    //! Every pair is classified and the face poset has a least element.
    bool holds = false;
    //! A finite meet-semilattice always has a least element; the pairwise
    //! conditions alone do not force one (e.g. two incomparable chambers with
    //! no identity), so it is checked separately.
    bool                                       has_least_element = false;
    std::optional<std::pair<Element, Element>> failing_pair;

    MeetCase at(Element x, Element y) const noexcept {
      return cases[x * size + y];
    }

    std::size_t           size = 0;
    std::vector<MeetCase> cases;
  };

  inline MeetCase classify_meet_pair(LrbTable const&         s,
                                     FacePoset const&        p,
                                     SupportStructure const& sup,
                                     Element                 x,
                                     Element                 y) {
    if (s(x, y) == s(y, x)) {
      return MeetCase::commuting;
    }
    std::vector<Element> common;
    for (Element z = 0; z < s.size(); ++z) {
      if (p.leq(x, z) && p.leq(y, z)) {
        common.push_back(z);
      }
    }
    if (common.empty()) {
      return MeetCase::no_common_upper;
    }
    std::vector<ClassId> supports;
    supports.reserve(common.size());
    for (Element z : common) {
      supports.push_back(sup.class_of[z]);
    }
    auto const least = sup.meet_of(supports);
    if (!least) {
      return MeetCase::none;
    }
    std::size_t attained = 0;
    for (ClassId c : supports) {
      attained += c == *least;
    }
    return attained == 1 ? MeetCase::support_meet : MeetCase::none;
  }

  inline MeetCriterionReport meet_criterion(LrbTable const&         s,
                                            FacePoset const&        p,
                                            SupportStructure const& sup) {
    MeetCriterionReport r;
    std::size_t const   n = s.size();
    r.size                = n;
    r.cases.assign(n * n, MeetCase::none);
    r.has_least_element = p.minimals.size() == 1;
    bool all            = true;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        MeetCase const c = y < x ? r.at(y, x)
                                 : classify_meet_pair(s, p, sup, x, y);
        r.cases[x * n + y] = c;
        if (c == MeetCase::none && all) {
          all            = false;
          r.failing_pair = std::make_pair(x, y);
        }
      }
    }
    r.holds = all && r.has_least_element;
    return r;
  }

  inline MeetCriterionReport meet_criterion(LrbTable const& s) {
    return meet_criterion(s, face_poset(s), support_structure(s));
  }

}  // namespace lrb

#endif  // LRB_MEET_CRITERION_HPP_
