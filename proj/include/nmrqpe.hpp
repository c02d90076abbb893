// Copyright 2026 The nmrqpe Authors
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

#include "nmrqpe/asp.hpp"
#include "nmrqpe/error.hpp"
#include "nmrqpe/ipea.hpp"
#include "nmrqpe/molham.hpp"
#include "nmrqpe/nmrpulse.hpp"
#include "nmrqpe/probe.hpp"
#include "nmrqpe/qcore.hpp"
#include "nmrqpe/spectrum.hpp"
#include "nmrqpe/turns.hpp"
