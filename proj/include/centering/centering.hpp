// Copyright 2026 The Centering Authors.
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

#include "centering/core/errors.hpp"
#include "centering/core/partial_order.hpp"
#include "centering/core/types.hpp"
#include "centering/knowledge/rules.hpp"
#include "centering/knowledge/model.hpp"
#include "centering/knowledge/derive.hpp"
#include "centering/attention/attention.hpp"
#include "centering/resolver/result.hpp"
#include "centering/resolver/resolver.hpp"
#include "centering/focus/focus.hpp"
#include "centering/harness/document.hpp"
#include "centering/harness/report.hpp"
#include "centering/harness/oracle.hpp"
