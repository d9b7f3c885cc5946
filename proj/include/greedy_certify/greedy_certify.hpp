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

#pragma once

#include "greedy_certify/bounds.hpp"
#include "greedy_certify/counterexample.hpp"
#include "greedy_certify/errors.hpp"
#include "greedy_certify/greedy.hpp"
#include "greedy_certify/oracle.hpp"
#include "greedy_certify/parallel.hpp"
#include "greedy_certify/problem.hpp"
#include "greedy_certify/random_instances.hpp"
#include "greedy_certify/report_io.hpp"
#include "greedy_certify/seed.hpp"
#include "greedy_certify/sensor.hpp"
#include "greedy_certify/string_seq.hpp"
#include "greedy_certify/suite.hpp"
#include "greedy_certify/tabulated.hpp"
#include "greedy_certify/value.hpp"
#include "greedy_certify/welfare.hpp"
