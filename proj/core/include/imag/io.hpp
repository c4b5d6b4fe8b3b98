// Copyright 2026 The imaginarity Authors
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

#ifndef IMAG_IO_HPP
#define IMAG_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "imag/channels.hpp"
#include "imag/states.hpp"

namespace imag {

/// A parsed state file: `"kind"` selects pure or density.
struct StateFile {
  std::string kind;
  std::optional<PureState> pure;
  std::optional<DensityMatrix> density;

  /// The state as a density matrix regardless of kind.
  DensityMatrix as_density() const;
  std::size_t dim() const;
};

/// Strict parsers: any malformed structure or violated invariant throws
/// ValidationError naming the first failure ("json", "dim", "kind",
/// "data_shape", then the state/channel invariants). File variants throw
/// ValidationError("file") when the path cannot be read.
StateFile parse_state_json(const std::string& text);
StateFile load_state(const std::string& path);
RealKrausChannel parse_channel_json(const std::string& text);
RealKrausChannel load_channel(const std::string& path);

std::string state_to_json(const PureState& psi);
std::string state_to_json(const DensityMatrix& rho);
std::string channel_to_json(const RealKrausChannel& channel);

struct InvariantCheck {
  std::string name;
  bool ok = false;
  double residual = 0.0;
};

/// Lenient whole-file report for the validate command: detects whether the
/// file is a state or a channel and evaluates every invariant instead of
/// stopping at the first violation.
struct FileReport {
  bool parsed = false;
  std::string kind;  // "pure", "density", "channel" or empty when undetected
  std::string parse_error;
  std::vector<InvariantCheck> checks;

  bool all_ok() const;
};

FileReport validate_file_text(const std::string& text);
FileReport validate_file(const std::string& path);

}  // namespace imag

#endif
