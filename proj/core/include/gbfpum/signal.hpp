/*
 * Copyright 2026 The gbfpum Authors
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

#ifndef GBFPUM_SIGNAL_HPP
#define GBFPUM_SIGNAL_HPP

#include <cstdint>

#include "gbfpum/graph.hpp"

namespace gbfpum {

/// Standard normal draws from a seeded 64-bit Mersenne twister through
/// Box-Muller, so sequences agree across standard libraries.
SignalVector seeded_normal(Vertex n, std::uint64_t seed);

/// x = (I + L)^{-order} f for seeded unit-variance noise f, scaled to
/// max |x| = 1. Throws ValidationError on a disconnected graph.
SignalVector synth_low_pass_signal(const Graph& g, std::uint64_t seed, int order = 1);

/// Applies (I + L)^{-order} to f.
SignalVector low_pass(const Graph& g, const SignalVector& f, int order = 1);

/// `count` distinct vertices drawn uniformly without replacement.
NodeSet uniform_samples(Vertex n, Vertex count, std::uint64_t seed);

/// Grid graph with rows x cols vertices, id = row * cols + col.
Graph grid_graph(Vertex rows, Vertex cols);

}  // namespace gbfpum

#endif  // GBFPUM_SIGNAL_HPP
