// Copyright 2026 The lapdual Authors
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

#include "lapdual/error.hpp"
#include "lapdual/matrix.hpp"
#include "lapdual/normal_form.hpp"
#include "lapdual/graph.hpp"
#include "lapdual/two_isomorphism.hpp"
#include "lapdual/laplacian.hpp"
#include "lapdual/congruence.hpp"
#include "lapdual/superbase.hpp"
#include "lapdual/planarity.hpp"
#include "lapdual/property_x.hpp"
#include "lapdual/properties.hpp"
#include "lapdual/serialize.hpp"
