/*
 * Copyright 2026 The OSP Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OSP_OSP_HPP_
#define OSP_OSP_HPP_

#include "osp/classify.hpp"
#include "osp/error.hpp"
#include "osp/ladder.hpp"
#include "osp/op_counter.hpp"
#include "osp/polynomial.hpp"
#include "osp/stream.hpp"
#include "osp/types.hpp"

#endif  // OSP_OSP_HPP_
