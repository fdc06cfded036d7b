// Copyright 2026 The mixext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MIXEXT_MIXEXT_HPP
#define MIXEXT_MIXEXT_HPP

#include "mixext/canon.hpp"
#include "mixext/census.hpp"
#include "mixext/charpoly.hpp"
#include "mixext/error.hpp"
#include "mixext/families.hpp"
#include "mixext/graph.hpp"
#include "mixext/graph6.hpp"
#include "mixext/io.hpp"
#include "mixext/oracle.hpp"
#include "mixext/parallel.hpp"
#include "mixext/polynomial.hpp"
#include "mixext/spectral.hpp"

#endif  // MIXEXT_MIXEXT_HPP
