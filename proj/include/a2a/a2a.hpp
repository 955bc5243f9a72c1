// SPDX-License-Identifier: Apache-2.0
//
// a2a-channel: air-to-air mmWave path loss modelling toolkit
// Copyright (C) 2026 The a2a-channel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include "a2a/units.hpp"
#include "a2a/propagation.hpp"
#include "a2a/fitting.hpp"
#include "a2a/reference_models.hpp"
#include "a2a/beam_analysis.hpp"
#include "a2a/dataset.hpp"
#include "a2a/published.hpp"
