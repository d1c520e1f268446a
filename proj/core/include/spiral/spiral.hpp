// Copyright 2026 The Spiral Spline Authors
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

#include "spiral/angle_spline.hpp"
#include "spiral/branch.hpp"
#include "spiral/curve.hpp"
#include "spiral/error.hpp"
#include "spiral/estimator.hpp"
#include "spiral/newton.hpp"
#include "spiral/optimizer.hpp"
#include "spiral/problem.hpp"
#include "spiral/quadrature.hpp"
#include "spiral/refiner.hpp"
#include "spiral/sign_vector.hpp"
#include "spiral/tridiagonal.hpp"
#include "spiral/vec2.hpp"
