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

#include <iosfwd>
#include <string>
#include <vector>

namespace a2a::cli {

/// Runs the `a2a` command line. args excludes the program name. Results go to
/// out, diagnostics to err. Returns the process exit code: 0 on success, 1 on
/// runtime errors (bad data, degenerate fits), 2 on usage errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace a2a::cli
