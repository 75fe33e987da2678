// Copyright 2026 The edgequbit Authors
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

#pragma once

#include "edgequbit/analysis.hpp"
#include "edgequbit/bessel.hpp"
#include "edgequbit/dense.hpp"
#include "edgequbit/duality.hpp"
#include "edgequbit/errors.hpp"
#include "edgequbit/exact_dynamics.hpp"
#include "edgequbit/json_io.hpp"
#include "edgequbit/models.hpp"
#include "edgequbit/operator_sum.hpp"
#include "edgequbit/pauli.hpp"
#include "edgequbit/rational.hpp"
#include "edgequbit/sweep.hpp"
#include "edgequbit/szm.hpp"
