// Copyright 2026 The Burnlab Authors
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

#include "burnlab/bounds.hpp"
#include "burnlab/burning.hpp"
#include "burnlab/distance.hpp"
#include "burnlab/gadget.hpp"
#include "burnlab/generators.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/induced_path.hpp"
#include "burnlab/interval.hpp"
#include "burnlab/io.hpp"
#include "burnlab/path_cycle.hpp"
#include "burnlab/pkfree.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/transforms.hpp"
#include "burnlab/variants.hpp"
#include "burnlab/vertex_set.hpp"
