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

#ifndef KMB_KMB_HPP_
#define KMB_KMB_HPP_

#include "kmb/bench.hpp"
#include "kmb/capped_cost.hpp"
#include "kmb/certificate.hpp"
#include "kmb/errors.hpp"
#include "kmb/generators.hpp"
#include "kmb/instance.hpp"
#include "kmb/io.hpp"
#include "kmb/oracle.hpp"
#include "kmb/parallel.hpp"
#include "kmb/phase_one.hpp"
#include "kmb/phase_two.hpp"
#include "kmb/sampling.hpp"
#include "kmb/solver.hpp"

#endif  // KMB_KMB_HPP_
