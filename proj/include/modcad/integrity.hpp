#pragma once

// Drawing signatures. The digest is SHA-256 over the drawing's canonical
// bytes with every signature module left out; the authenticator is
// HMAC-SHA-256 keyed by the signer's password over
//   digest(32 raw bytes) 0x1F person 0x1F position 0x1F date 0x1F time.
// The password itself is never stored.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include "modcad/drawing.hpp"
#include "modcad/errors.hpp"

namespace modcad {

using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256_digest(std::string_view data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size())
        throw Error("SHA-256 computation failed");
    return out;
}

inline Digest hmac_sha256(std::string_view key, std::string_view message) {
    Digest out{};
    unsigned int len = 0;
    if (!HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
              reinterpret_cast<const unsigned char*>(message.data()), message.size(), out.data(), &len) ||
        len != out.size())
        throw Error("HMAC-SHA-256 computation failed");
    return out;
}

template <std::size_t N>
std::string to_hex(const std::array<std::uint8_t, N>& bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * N);
    for (auto b : bytes) {
        out += kDigits[b >> 4];
        out += kDigits[b & 0xF];
    }
    return out;
}

inline bool is_hex64(std::string_view s) {
    if (s.size() != 64) return false;
    for (char c : s) {
        if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
    }
    return true;
}

struct SignatureRecord {
    std::string person;
    std::string position;
    std::string date;  // YYYY-MM-DD
    std::string time;  // HH:MM:SS
    std::string digest_hex;
    std::string auth_hex;
};

inline constexpr char kUnitSeparator = '\x1F';

inline std::string mac_message(const Digest& digest, const SignatureRecord& r) {
    std::string msg(reinterpret_cast<const char*>(digest.data()), digest.size());
    for (const std::string* f : {&r.person, &r.position, &r.date, &r.time}) {
        msg += kUnitSeparator;
        msg += *f;
    }
    return msg;
}

inline Digest content_digest(const Drawing& d) { return sha256_digest(canonical_bytes(d, true)); }

namespace detail {

inline bool matches_pattern(std::string_view s, std::string_view pattern) {
    if (s.size() != pattern.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (pattern[i] == '9' ? !(s[i] >= '0' && s[i] <= '9') : s[i] != pattern[i]) return false;
    }
    return true;
}

} // namespace detail

inline constexpr double kStampInset = 5.0;

inline Drawing sign_drawing(const Drawing& d, const std::string& person, const std::string& position,
                            const std::string& password, const std::string& date, const std::string& time) {
    if (person.empty()) throw Error("signer name must be nonempty");
    if (password.empty()) throw Error("password must be nonempty");
    if (position.empty()) throw Error("signer position must be nonempty");
    if (!detail::matches_pattern(date, "9999-99-99")) throw Error("date must be YYYY-MM-DD");
    if (!detail::matches_pattern(time, "99:99:99")) throw Error("time must be HH:MM:SS");

    SignatureRecord rec{person, position, date, time, {}, {}};
    const Digest digest = content_digest(d);
    rec.digest_hex = to_hex(digest);
    rec.auth_hex = to_hex(hmac_sha256(password, mac_message(digest, rec)));

    Properties p{{"person", rec.person},       {"position", rec.position},
                 {"date", rec.date},           {"time", rec.time},
                 {"digest_hex", rec.digest_hex}, {"auth_hex", rec.auth_hex},
                 {"origin", d.extent.min + Point{kStampInset, kStampInset}}};
    Drawing out = d;
    out.add_module(ModuleType::signature, p);
    return out;
}

inline SignatureRecord signature_record(const Module& m) {
    if (m.type != ModuleType::signature) throw Error("module is not a signature");
    auto get = [&](const char* k) { return props::get<std::string>(m.props, k); };
    return {get("person"), get("position"), get("date"), get("time"), get("digest_hex"), get("auth_hex")};
}

enum class Status { valid, broken, unchecked };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::valid: return "valid";
        case Status::broken: return "broken";
        case Status::unchecked: return "unchecked";
    }
    return "unchecked";
}

struct SignatureCheck {
    int module_id = 0;
    std::string person;
    Status integrity = Status::broken;
    Status authenticity = Status::unchecked;
};

inline std::vector<SignatureCheck> verify_signatures(const Drawing& d,
                                                     const std::map<std::string, std::string>& passwords = {}) {
    const Digest digest = content_digest(d);
    const std::string digest_hex = to_hex(digest);
    std::vector<SignatureCheck> out;
    for (const Module* m : d.modules()) {
        if (m->type != ModuleType::signature) continue;
        const SignatureRecord rec = signature_record(*m);
        SignatureCheck c{m->id, rec.person, Status::broken, Status::unchecked};
        c.integrity = (is_hex64(rec.digest_hex) && rec.digest_hex == digest_hex) ? Status::valid : Status::broken;
        if (auto it = passwords.find(rec.person); it != passwords.end()) {
            const std::string expected = to_hex(hmac_sha256(it->second, mac_message(digest, rec)));
            c.authenticity = expected == rec.auth_hex ? Status::valid : Status::broken;
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace modcad
