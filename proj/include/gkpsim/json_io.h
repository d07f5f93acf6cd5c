// Copyright 2026 The gkpsim Authors
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

#ifndef GKPSIM_JSON_IO_H
#define GKPSIM_JSON_IO_H

#include <nlohmann/json.hpp>

#include "gkpsim/classify.h"
#include "gkpsim/sampler.h"

namespace gkpsim {

// Doubles are written in shortest round-trip form, so parsing recovers every bit.

nlohmann::json to_json(const ModeVerdict &mv);
nlohmann::json to_json(const MembershipVerdict &verdict);
nlohmann::json to_json(const DspOutcome &outcome);
nlohmann::json to_json(const CombPDF1D &pdf);
nlohmann::json to_json(const CombPDFnD &pdf);
nlohmann::json to_json(const ThetaClass &cls);
nlohmann::json integer_to_json(const Integer &value);

}  // namespace gkpsim

#endif
