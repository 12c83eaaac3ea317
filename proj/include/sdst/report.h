// include/sdst/report.h

// Copyright 2026 The sdst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SDST_REPORT_H_
#define SDST_REPORT_H_

// Markdown summary bundling evaluation, taxonomy and similarity outputs.

#include <string>

#include "sdst/corpus.h"
#include "sdst/error_taxonomy.h"

namespace sdst {

struct ReportInputs {
  const Corpus *corpus = nullptr;
  const PredictionSet *predictions = nullptr;
  // Predictions of a tracker run on gold text; adds delta columns when set.
  const PredictionSet *oracle = nullptr;
  TaxonomyOptions taxonomy;
  double bin_width = 5.0;
  std::string title = "Spoken DST report";
};

std::string RenderMarkdownReport(const ReportInputs &inputs);

}  // namespace sdst

#endif  // SDST_REPORT_H_
