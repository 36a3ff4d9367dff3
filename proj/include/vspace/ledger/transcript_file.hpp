// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include "vspace/ledger/ledger.hpp"

namespace vspace::ledger {

// The portable election transcript: everything an auditor consumes
// (FORMAT.md §6).
struct TranscriptFile {
    std::string group_label;
    std::vector<LedgerEntry> entries;
    std::vector<Checkpoint> checkpoints;
};

Bytes serialize_transcript(const TranscriptFile& t);
TranscriptFile parse_transcript(std::span<const uint8_t> data);

void save_transcript(const TranscriptFile& t, const std::string& path);
TranscriptFile load_transcript(const std::string& path);

} // namespace vspace::ledger
