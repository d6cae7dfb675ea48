#pragma once
// Copyright 2026 The conceptspace Authors
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
//
// Umbrella header: the whole library.

#include "conceptspace/artifact.hpp"
#include "conceptspace/corpus.hpp"
#include "conceptspace/document.hpp"
#include "conceptspace/dot.hpp"
#include "conceptspace/error.hpp"
#include "conceptspace/oracle.hpp"
#include "conceptspace/space.hpp"
#include "conceptspace/transform.hpp"
