#include "wpvol/intersection/memo_store.hpp"

#include "wpvol/errors.hpp"
#include "wpvol/exact/pi_poly.hpp"
#include "wpvol/intersection/tau_index.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unistd.h>
#include <vector>

namespace wpvol {

MemoStore::Shard& MemoStore::shard_for(const std::string& key) const {
    return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<Rational> MemoStore::find(const std::string& key) const {
    auto& s = shard_for(key);
    std::shared_lock lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
}

const Rational* MemoStore::find_ptr(const std::string& key) const {
    auto& s = shard_for(key);
    std::shared_lock lock(s.mu);
    auto it = s.map.find(key);
    return it == s.map.end() ? nullptr : &it->second;
}

bool MemoStore::insert(const std::string& key, const Rational& value) {
    auto& s = shard_for(key);
    std::unique_lock lock(s.mu);
    auto [it, fresh] = s.map.try_emplace(key, value);
    if (!fresh && it->second != value)
        throw StorageError("conflicting value for " + to_string(decode_key(key)));
    return fresh;
}

std::size_t MemoStore::size() const {
    std::size_t n = 0;
    for (auto& s : shards_) {
        std::shared_lock lock(s.mu);
        n += s.map.size();
    }
    return n;
}

void MemoStore::clear() {
    for (auto& s : shards_) {
        std::unique_lock lock(s.mu);
        s.map.clear();
    }
}

void MemoStore::for_each(const std::function<void(const std::string&, const Rational&)>& fn) const {
    std::vector<std::pair<std::string, Rational>> all;
    for (auto& s : shards_) {
        std::shared_lock lock(s.mu);
        for (const auto& kv : s.map) all.emplace_back(kv);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, v] : all) fn(k, v);
}

namespace {

std::string crc_hex(const std::string& body) {
    boost::crc_32_type crc;
    crc.process_bytes(body.data(), body.size());
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
    return buf;
}

std::string key_text(const TauIndex& t) {
    std::string s = std::to_string(t.g) + ";";
    for (std::size_t i = 0; i < t.d.size(); ++i) s += (i ? "," : "") + std::to_string(t.d[i]);
    return s;
}

}  // namespace

std::string format_record(const std::string& key, const Rational& value) {
    TauIndex t = decode_key(key);
    PiPoly v = t.pi_degree() >= 0 ? PiPoly::monomial(value, static_cast<unsigned>(t.pi_degree())) : PiPoly();
    std::string body = key_text(t) + ";" + to_json(v);
    return body + ";" + crc_hex(body);
}

void MemoStore::save(const std::filesystem::path& path) const {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    std::size_t count = 0;
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw StorageError("cannot write " + tmp.string());
        out << kVersion << '\n';
        for_each([&](const std::string& k, const Rational& v) {
            if (abort_after_ && count == *abort_after_) {
                out.flush();
                throw Interrupted();
            }
            out << format_record(k, v) << '\n';
            ++count;
        });
        out << "end " << count << '\n';
        out.flush();
        if (!out) throw StorageError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw StorageError("rename to " + path.string() + " failed: " + ec.message());
}

std::size_t MemoStore::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StorageError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != kVersion)
        throw StorageError(path.string() + ": missing or unknown version header");
    std::size_t count = 0;
    std::size_t lineno = 1;
    bool ended = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&] { return path.string() + ":" + std::to_string(lineno) + ": "; };
        if (line.rfind("end ", 0) == 0) {
            if (std::stoull(line.substr(4)) != count) throw StorageError(where() + "record count mismatch");
            ended = true;
            break;
        }
        auto last = line.rfind(';');
        if (last == std::string::npos) throw StorageError(where() + "malformed record");
        std::string body = line.substr(0, last);
        if (crc_hex(body) != line.substr(last + 1)) throw StorageError(where() + "checksum mismatch");
        auto s1 = body.find(';');
        auto s2 = body.find(';', s1 + 1);
        if (s1 == std::string::npos || s2 == std::string::npos) throw StorageError(where() + "malformed record");
        TauIndex t;
        PiPoly v;
        try {
            t.g = static_cast<unsigned>(std::stoul(body.substr(0, s1)));
            std::stringstream ds(body.substr(s1 + 1, s2 - s1 - 1));
            std::string tok;
            while (std::getline(ds, tok, ',')) t.d.push_back(static_cast<unsigned>(std::stoul(tok)));
            v = pi_poly_from_json(body.substr(s2 + 1));
        } catch (const std::exception& e) {
            throw StorageError(where() + e.what());
        }
        if (!std::is_sorted(t.d.begin(), t.d.end(), std::greater<>()) || !is_stable(t.g, t.n()))
            throw StorageError(where() + "non-canonical key");
        const int m = t.pi_degree();
        if (!v.is_zero() && (m < 0 || v.degree() != m || v.coeffs().size() != 1u + static_cast<unsigned>(m) ||
                             std::any_of(v.coeffs().begin(), v.coeffs().end() - 1, [](const Rational& q) { return q != 0; })))
            throw StorageError(where() + "value is not homogeneous of the expected degree");
        insert(encode_key(t.g, t.d), v.is_zero() ? Rational(0) : v.coeffs().back());
        ++count;
    }
    if (!ended) throw StorageError(path.string() + ": truncated (no end marker)");
    return count;
}

}  // namespace wpvol
