#include <array>
#include <charconv>
#include <cmath>
#include <memory>

#include <openssl/evp.h>

#include "hctc/cli.hpp"
#include "hctc/errors.hpp"

namespace hctc::cli {

namespace {

void write_value(const Json& v, std::string& out) {
    switch (v.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                write_value(item, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0) out += ',';
                write_value(v[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double x = v.get<double>();
            out += std::isfinite(x) ? format_double(x) : "null";
            break;
        }
        default:
            out += v.dump(-1, ' ', false, Json::error_handler_t::replace);
    }
}

}  // namespace

std::string format_double(double x) {
    if (x == 0.0) return "0";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string canonical_json(const Json& value) {
    std::string out;
    write_value(value, out);
    return out;
}

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
        throw Error("sha256: digest computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < length; ++i) {
        hex += kHex[digest[i] >> 4];
        hex += kHex[digest[i] & 0xf];
    }
    return hex;
}

int exit_code_for(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return kExitPass;
        case Verdict::Fail: return kExitFail;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitError;
}

}  // namespace hctc::cli
