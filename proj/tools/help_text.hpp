// Copyright 2026 The rieszlab Authors
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
#ifndef RIESZLAB_TOOLS_HELP_TEXT_HPP_
#define RIESZLAB_TOOLS_HELP_TEXT_HPP_

#include <string>

namespace rieszlab::cli {

/// Grammar reference and the list of check ids, shown after --help.
std::string help_footer();

}  // namespace rieszlab::cli

#endif  // RIESZLAB_TOOLS_HELP_TEXT_HPP_
