#include "report.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include <openssl/evp.h>

namespace cli {

using thincoalg::Error;
using thincoalg::ErrorKind;
using thincoalg::Json;

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, "cannot open '" + path.string() + "'");
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md;
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        char h[3];
        std::snprintf(h, sizeof h, "%02x", md[i]);
        hex += h;
    }
    return hex;
}

Json to_json(const RunReport& r) {
    Json inputs = Json::array();
    for (const InputDigest& d : r.inputs) inputs.push_back({{"path", d.path}, {"sha256", d.sha256}});
    return {{"command", r.command},
            {"inputs", inputs},
            {"result", r.result},
            {"timing_ms", r.timing_ms},
            {"exit_code", r.exit_code}};
}

RunReport report_from_json(const Json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    for (const Json& d : j.at("inputs"))
        r.inputs.push_back({d.at("path").get<std::string>(), d.at("sha256").get<std::string>()});
    r.result = j.at("result");
    r.timing_ms = j.at("timing_ms").get<double>();
    r.exit_code = j.at("exit_code").get<int>();
    return r;
}

} // namespace cli
