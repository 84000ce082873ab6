#include "mtv/values.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mtv {

namespace {

std::string make_key(const std::string& family, const std::string& index,
                     const std::string& signs) {
    return family + "|" + index + "|" + signs;
}

uint32_t crc_of(const std::string& s) {
    uLong c = crc32(0L, Z_NULL, 0);
    c = crc32(c, reinterpret_cast<const Bytef*>(s.data()),
              static_cast<uInt>(s.size()));
    return static_cast<uint32_t>(c);
}

std::string crc_hex(uint32_t c) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", c);
    return buf;
}

// Digits needed so that parsing the decimal back at precision P is
// bit-exact: ceil(P / 3.32) + 2.
long cache_digits(long P) {
    return static_cast<long>((P + 3.32 - 1e-9) / 3.32) + 2;
}

} // namespace

ValueCache::ValueCache(std::string path) : path_(std::move(path)) { load(); }

void ValueCache::load() {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return; // not created yet
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        // family|index|signs|P|N|decimal|crc32
        std::vector<std::string> f;
        size_t start = 0;
        for (size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == '|') {
                f.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        bool ok = f.size() == 7;
        long P = 0, N = 0;
        if (ok) {
            try {
                size_t used = 0;
                P = std::stol(f[3], &used);
                ok = ok && used == f[3].size();
                N = std::stol(f[4], &used);
                ok = ok && used == f[4].size();
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (ok) {
            std::string payload =
                f[0] + "|" + f[1] + "|" + f[2] + "|" + f[3] + "|" + f[4] + "|" + f[5];
            ok = crc_hex(crc_of(payload)) == f[6];
        }
        if (!ok) {
            std::cerr << "warning: cache record " << lineno << " in " << path_
                      << " is corrupted; skipping\n";
            continue;
        }
        recs_.emplace(make_key(f[0], f[1], f[2]), Rec{P, N, f[5]});
    }
}

std::optional<BigReal> ValueCache::get(const std::string& family,
                                       const std::string& index,
                                       const std::string& signs, long P,
                                       long N) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto [lo, hi] = recs_.equal_range(make_key(family, index, signs));
    const Rec* best = nullptr;
    for (auto it = lo; it != hi; ++it) {
        const Rec& r = it->second;
        if (r.P >= P && r.N >= N && (!best || r.P > best->P)) best = &r;
    }
    if (!best) return std::nullopt;
    BigReal full(best->decimal, best->P);
    return full.with_precision(P);
}

void ValueCache::put(const std::string& family, const std::string& index,
                     const std::string& signs, long P, long N,
                     const BigReal& value) {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = make_key(family, index, signs);
    auto [lo, hi] = recs_.equal_range(key);
    for (auto it = lo; it != hi; ++it)
        if (it->second.P == P && it->second.N == N) return; // already present
    std::string dec = value.to_decimal(cache_digits(P));
    recs_.emplace(key, Rec{P, N, dec});
    if (path_.empty()) return;
    std::ostringstream payload;
    payload << family << "|" << index << "|" << signs << "|" << P << "|" << N
            << "|" << dec;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::cerr << "warning: cannot append to cache file " << path_ << "\n";
        return;
    }
    out << payload.str() << "|" << crc_hex(crc_of(payload.str())) << "\n";
}

size_t ValueCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return recs_.size();
}

} // namespace mtv
