// tools/cli.h

// Copyright 2026 The sdst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SDST_TOOLS_CLI_H_
#define SDST_TOOLS_CLI_H_

#include <iostream>

namespace sdst {

// Runs the sdst command line. Returns 0 on success, 1 on a data or
// validation error and 2 on a usage error.
int RunCli(int argc, const char *const *argv, std::ostream &out = std::cout,
           std::ostream &err = std::cerr);

}  // namespace sdst

#endif  // SDST_TOOLS_CLI_H_
