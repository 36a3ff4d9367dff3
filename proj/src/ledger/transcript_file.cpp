// Copyright 2026 the vspace authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or
// at http://www.apache.org/licenses/LICENSE-2.0
#include "vspace/ledger/transcript_file.hpp"

#include <fstream>

namespace vspace::ledger {

namespace {
constexpr char kMagic[5] = {'V', 'S', 'P', 'C', '1'};
}

Bytes serialize_transcript(const TranscriptFile& t) {
    Bytes out(kMagic, kMagic + 5);
    {
        enc::Writer w;
        w.str(t.group_label);
        out.insert(out.end(), w.out().begin(), w.out().end());
    }
    for (auto& e : t.entries) {
        enc::Writer w;
        write_entry(w, e);
        enc::put_be32(out, uint32_t(w.out().size()));
        out.insert(out.end(), w.out().begin(), w.out().end());
    }
    enc::put_be32(out, 0); // entry stream terminator
    enc::put_be32(out, uint32_t(t.checkpoints.size()));
    for (auto& cp : t.checkpoints) {
        enc::Writer w;
        write_checkpoint(w, cp);
        enc::put_be32(out, uint32_t(w.out().size()));
        out.insert(out.end(), w.out().begin(), w.out().end());
    }
    return out;
}

TranscriptFile parse_transcript(std::span<const uint8_t> data) {
    size_t off = 0;
    if (data.size() < 5 || !std::equal(kMagic, kMagic + 5, data.begin()))
        raise(Errc::ParseError, "bad magic, not a VSPC1 transcript");
    off = 5;

    TranscriptFile t;
    {
        // group label atom
        enc::Reader r(data.subspan(off));
        t.group_label = r.str();
        off += r.offset();
    }
    const crypto::Group& grp = crypto::Group::by_label(t.group_label);

    for (;;) {
        uint32_t len = enc::get_be32(data, off);
        if (len == 0) break;
        if (off + len > data.size()) raise(Errc::ParseError, "entry overruns file at offset " + std::to_string(off));
        enc::Reader r(data.subspan(off, len));
        LedgerEntry e = read_entry(r, grp);
        r.expect_done();
        if (e.index != t.entries.size()) raise(Errc::ParseError, "entry index out of order");
        t.entries.push_back(std::move(e));
        off += len;
    }

    uint32_t n_checkpoints = enc::get_be32(data, off);
    for (uint32_t i = 0; i < n_checkpoints; i++) {
        uint32_t len = enc::get_be32(data, off);
        if (off + len > data.size())
            raise(Errc::ParseError, "checkpoint overruns file at offset " + std::to_string(off));
        enc::Reader r(data.subspan(off, len));
        t.checkpoints.push_back(read_checkpoint(r, grp));
        r.expect_done();
        off += len;
    }
    if (off != data.size()) raise(Errc::ParseError, "trailing bytes at offset " + std::to_string(off));
    return t;
}

void save_transcript(const TranscriptFile& t, const std::string& path) {
    Bytes data = serialize_transcript(t);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) raise(Errc::ParseError, "cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    if (!f) raise(Errc::ParseError, "short write to " + path);
}

TranscriptFile load_transcript(const std::string& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) raise(Errc::ParseError, "cannot open " + path);
    std::streamsize size = f.tellg();
    f.seekg(0);
    Bytes data(static_cast<size_t>(size), 0);
    f.read(reinterpret_cast<char*>(data.data()), size);
    if (!f) raise(Errc::ParseError, "short read from " + path);
    return parse_transcript(data);
}

} // namespace vspace::ledger
