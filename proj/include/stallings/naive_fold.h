// Copyright 2026 The Stallings Authors
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

#ifndef STALLINGS_NAIVE_FOLD_H_
#define STALLINGS_NAIVE_FOLD_H_

#include <cstdint>
#include <vector>

#include "stallings/folded_graph.h"
#include "stallings/graph.h"

namespace stallings {

// Reference folding used as a test oracle. Works on a flat edge list: find
// any foldable pair by exhaustive search, identify the far endpoints by
// rewriting every vertex and edge, drop one edge, repeat. Quadratic or
// worse; no disjoint-set forest and no lazy updates.
//
// `g` is only read. When `vertex_of` is given it receives the folded vertex
// of every input vertex.
FoldedGraph NaiveFold(const LabeledGraph& g, std::vector<std::uint32_t>* vertex_of = nullptr);

}  // namespace stallings

#endif  // STALLINGS_NAIVE_FOLD_H_
