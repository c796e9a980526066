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

// Umbrella header.

#ifndef LRB_LRB_HPP_
#define LRB_LRB_HPP_

#include "adjacency.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "lrbgraph.hpp"
#include "meet_criterion.hpp"
#include "poset.hpp"
#include "properties.hpp"
#include "support.hpp"
#include "table.hpp"

#endif  // LRB_LRB_HPP_
