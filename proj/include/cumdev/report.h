//
// Copyright 2026 The cumdev Authors
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
//

#ifndef CUMDEV_REPORT_H_
#define CUMDEV_REPORT_H_

#include <string>

#include "cumdev/core.h"
#include "cumdev/screen.h"

namespace cumdev {

// A short human-readable table (six decimals) followed by key=value lines
// carrying full precision. Undefined normalized statistics print as
// "undefined".
std::string format_stats(const SummaryStats& stats);

// One tab-separated line per row in report order, then the failures.
std::string format_screen(const ScreenReport& report);

}  // namespace cumdev

#endif  // CUMDEV_REPORT_H_
