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

#ifndef STALLINGS_CANONICAL_H_
#define STALLINGS_CANONICAL_H_

#include <string>
#include <vector>

#include "stallings/folded_graph.h"

namespace stallings {

// Breadth-first discovery order from the base: at each vertex, outgoing
// edges by ascending label, then incoming edges by ascending label. Only
// vertices reachable from the base appear.
std::vector<std::uint32_t> DiscoveryOrder(const FoldedGraph& f);

// Renumbers vertices by discovery order (base becomes 0) and re-sorts edges.
// Throws std::invalid_argument if `f` is not folded or not connected.
FoldedGraph Canonicalize(const FoldedGraph& f);

// Text code of the canonical numbering: sorted "from label to" triples joined
// by ';'. Two folded graphs have equal codes iff they are isomorphic by a
// base-preserving, label-preserving map.
std::string CanonicalForm(const FoldedGraph& f);

}  // namespace stallings

#endif  // STALLINGS_CANONICAL_H_
