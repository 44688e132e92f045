// Copyright 2026 The Authors.
//
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

#ifndef TIMTIN_TIMTIN_HPP_
#define TIMTIN_TIMTIN_HPP_

#include "timtin/decomp.hpp"
#include "timtin/error.hpp"
#include "timtin/fixtures.hpp"
#include "timtin/evaluator.hpp"
#include "timtin/io.hpp"
#include "timtin/linalg.hpp"
#include "timtin/lp.hpp"
#include "timtin/model.hpp"
#include "timtin/oracle.hpp"
#include "timtin/rational.hpp"
#include "timtin/tim.hpp"
#include "timtin/tin.hpp"

#endif  // TIMTIN_TIMTIN_HPP_
