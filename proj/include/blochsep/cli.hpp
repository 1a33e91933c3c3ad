// Copyright 2026 The blochsep authors
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

#include <iosfwd>

namespace blochsep {

/// Entry point behind the `blochsep` binary: subcommands analyze, scan,
/// validate and gen.  Returns the process exit code; exit status reflects
/// tool health only (physics verdicts live in the reports), except that
/// `validate` exits nonzero when a soundness violation is detected.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace blochsep
