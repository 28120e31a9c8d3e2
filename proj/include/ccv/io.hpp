// Copyright 2026 The ccv Authors.
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

#ifndef CCV_IO_HPP_
#define CCV_IO_HPP_

#include <string>
#include <string_view>

#include "ccv/dartgraph.hpp"
#include "ccv/voltage.hpp"

namespace ccv {

// Line-oriented dart graph text:
//   dgf 1
//   v <vertex count>
//   d <dart> <beg vertex> <inverse dart>
// '#' starts a comment. The writer emits darts in id order, so reading and
// writing a written file reproduces it byte for byte.
std::string write_dgf(const DartGraph& g);
DartGraph read_dgf(std::string_view text);

// Header 'cvg 1', then the dgf body plus 'l <dart> <lambda>', 'i <vertex> <iota>' and
// 'z <dart> <zeta>' records. Missing l records default to 1 and missing z
// records to 0; when only one dart of an edge has a z record the other is
// derived. The writer emits z for carrier darts with nonzero voltage.
std::string write_cvg(const CyclicVoltageGraph& cvg);
CyclicVoltageGraph read_cvg(std::string_view text);

// graph6 for simple graphs, without a trailing newline.
std::string write_graph6(const DartGraph& g);
DartGraph read_graph6(std::string_view text);

std::string write_dot(const DartGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ccv

#endif  // CCV_IO_HPP_
