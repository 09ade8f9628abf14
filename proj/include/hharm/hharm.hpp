// Copyright 2026 The hharm Authors.
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

#ifndef HHARM_HHARM_HPP_
#define HHARM_HHARM_HPP_

#include "hharm/exact_arith.hpp"
#include "hharm/fourier.hpp"
#include "hharm/harmonics.hpp"
#include "hharm/lattice.hpp"
#include "hharm/operator.hpp"
#include "hharm/parallel.hpp"
#include "hharm/report.hpp"
#include "hharm/special_polys.hpp"
#include "hharm/suites.hpp"

#endif  // HHARM_HHARM_HPP_
