// Copyright 2026 The biored-kit Authors.
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

#ifndef BIORED_PARALLEL_H_
#define BIORED_PARALLEL_H_

namespace biored {

// Thread count for the per-document kernels. jobs <= 0 means the OpenMP
// default; without OpenMP this is always 1.
int ResolveJobs(int jobs);

}  // namespace biored

#endif  // BIORED_PARALLEL_H_
