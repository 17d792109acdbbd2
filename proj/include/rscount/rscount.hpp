/*
   Copyright 2026 The rscount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RSCOUNT_RSCOUNT_HPP
#define RSCOUNT_RSCOUNT_HPP

#include "rscount/characteristic_classes.hpp"
#include "rscount/multipoly.hpp"
#include "rscount/power_series.hpp"
#include "rscount/rational.hpp"
#include "rscount/rs_bounds.hpp"

#endif  // RSCOUNT_RSCOUNT_HPP
