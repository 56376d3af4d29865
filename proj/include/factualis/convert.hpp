// Copyright 2026 The Factualis Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace factualis {

// Converts a spreadsheet CSV export of the annotation sheet into the
// canonical TSV lexicon format.
//
// Expected CSV headers (case-insensitive): lemma, reading, source,
// translation, sip, frames, pfv_anim, pfv_inanim, imp, and optionally
// cog_pfv_anim, cog_pfv_inanim, cog_imp, events. Sheet-style cell values
// are normalized: decimal commas ("0,9|n"), ".9" shorthand, case-insensitive
// NA/UNGR, empty signature cells (-> NA), frame lists separated by "+", ","
// or ";" or spaces, sip as yes/no/true/false/1/0/empty, event lists with
// any of the same separators.
//
// Returns per-line conversion problems; structural failures (missing
// headers, unreadable stream) throw Error. Cells that fail normalization
// are passed through verbatim so `validate` can report them.
struct ConvertIssue {
  std::size_t line;
  std::string message;
};

std::vector<ConvertIssue> convert_sheet_csv(std::istream &in, std::ostream &out);
std::vector<ConvertIssue> convert_sheet_csv_file(const std::string &src,
                                                 const std::string &dst);

}  // namespace factualis
