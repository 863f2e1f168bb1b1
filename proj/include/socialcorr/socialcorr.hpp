// Copyright 2026 The socialcorr Authors.
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

#ifndef SOCIALCORR_SOCIALCORR_HPP
#define SOCIALCORR_SOCIALCORR_HPP

#include "socialcorr/annotations.hpp"
#include "socialcorr/artifact.hpp"
#include "socialcorr/attributes.hpp"
#include "socialcorr/classifiers.hpp"
#include "socialcorr/config.hpp"
#include "socialcorr/corpus.hpp"
#include "socialcorr/cv.hpp"
#include "socialcorr/datasets.hpp"
#include "socialcorr/error.hpp"
#include "socialcorr/features.hpp"
#include "socialcorr/hashing.hpp"
#include "socialcorr/lexicon.hpp"
#include "socialcorr/matrix.hpp"
#include "socialcorr/models.hpp"
#include "socialcorr/parallel.hpp"
#include "socialcorr/pipeline.hpp"
#include "socialcorr/politeness.hpp"
#include "socialcorr/rng.hpp"
#include "socialcorr/signals.hpp"
#include "socialcorr/stats.hpp"
#include "socialcorr/strata.hpp"
#include "socialcorr/synth.hpp"
#include "socialcorr/text.hpp"
#include "socialcorr/textfeat.hpp"
#include "socialcorr/timeutil.hpp"
#include "socialcorr/vader.hpp"

#endif
