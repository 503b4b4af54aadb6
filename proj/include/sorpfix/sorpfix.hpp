/*
 * Copyright 2026 The sorpfix authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SORPFIX_SORPFIX_HPP
#define SORPFIX_SORPFIX_HPP

#include "boolean.hpp"
#include "derivation.hpp"
#include "eqsys.hpp"
#include "io.hpp"
#include "lukasiewicz.hpp"
#include "minmax.hpp"
#include "rational.hpp"
#include "semiring.hpp"
#include "sorp.hpp"
#include "symbolic.hpp"
#include "tropical.hpp"
#include "viterbi.hpp"

#endif  // SORPFIX_SORPFIX_HPP
