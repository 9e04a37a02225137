// Copyright 2026 The qident Authors
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

#pragma once

#include "qident/errors.hpp"
#include "qident/qcore.hpp"
#include "qident/usd.hpp"
#include "qident/game.hpp"
#include "qident/classical.hpp"
#include "qident/families.hpp"
#include "qident/optimize.hpp"
#include "qident/sim.hpp"
#include "qident/io.hpp"
#include "qident/reproduce.hpp"
