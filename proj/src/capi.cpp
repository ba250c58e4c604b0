#include "screwpinv.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "engine.hpp"
#include "screw/error.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sp_status status_from_exit(int exit_code) {
    switch (exit_code) {
        case 0: return SP_OK;
        case 2: return SP_NO_PSEUDOINVERSE;
        default: return SP_INVALID_INPUT;
    }
}

sp_status deliver(const screw::engine::CommandResult& res, char** report) {
    g_last_error.clear();
    if (report) *report = dup_string(res.report);
    return status_from_exit(res.exit_code);
}

sp_status trap(const std::exception& e) {
    g_last_error = e.what();
    return SP_INVALID_INPUT;
}

} // namespace

struct sp_document {
    screw::engine::Document doc;
};

extern "C" {

sp_status sp_document_parse(const char* json, sp_document** out) {
    if (!json || !out) {
        g_last_error = "null argument";
        return SP_INVALID_INPUT;
    }
    try {
        auto* handle = new sp_document{screw::engine::parse_document(json)};
        *out = handle;
        g_last_error.clear();
        return SP_OK;
    } catch (const std::exception& e) {
        return trap(e);
    }
}

void sp_document_free(sp_document* doc) { delete doc; }

sp_status sp_pinv(const sp_document* doc, const char* h, char** report) {
    if (!doc || !h) {
        g_last_error = "null argument";
        return SP_INVALID_INPUT;
    }
    try {
        return deliver(screw::engine::cmd_pinv(doc->doc, h), report);
    } catch (const std::exception& e) {
        return trap(e);
    }
}

sp_status sp_classify(const sp_document* doc, const char* reciprocal_h, char** report) {
    if (!doc) {
        g_last_error = "null argument";
        return SP_INVALID_INPUT;
    }
    try {
        std::optional<std::string> rec;
        if (reciprocal_h) rec = std::string(reciprocal_h);
        return deliver(screw::engine::cmd_classify(doc->doc, rec), report);
    } catch (const std::exception& e) {
        return trap(e);
    }
}

sp_status sp_involution(const sp_document* doc, char** report) {
    if (!doc) {
        g_last_error = "null argument";
        return SP_INVALID_INPUT;
    }
    try {
        return deliver(screw::engine::cmd_involution(doc->doc), report);
    } catch (const std::exception& e) {
        return trap(e);
    }
}

sp_status sp_reciprocal(const sp_document* doc, const char* h, char** report) {
    if (!doc || !h) {
        g_last_error = "null argument";
        return SP_INVALID_INPUT;
    }
    try {
        return deliver(screw::engine::cmd_reciprocal(doc->doc, h), report);
    } catch (const std::exception& e) {
        return trap(e);
    }
}

sp_status sp_project(const sp_document* doc, const char* options, char** report) {
    if (!doc || !options) {
        g_last_error = "null argument";
        return SP_INVALID_INPUT;
    }
    try {
        nlohmann::json opts = nlohmann::json::parse(options);
        screw::engine::ProjectOptions po;
        auto read_list = [&](const char* key) -> std::optional<std::vector<std::string>> {
            if (!opts.contains(key)) return std::nullopt;
            std::vector<std::string> vals;
            for (const auto& v : opts[key])
                vals.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            return vals;
        };
        po.twist = read_list("twist");
        po.point = read_list("point");
        po.direction = read_list("direction");
        if (opts.contains("h"))
            po.h = opts["h"].is_string() ? opts["h"].get<std::string>() : opts["h"].dump();
        if (opts.contains("damp"))
            po.damp =
                opts["damp"].is_string() ? opts["damp"].get<std::string>() : opts["damp"].dump();
        return deliver(screw::engine::cmd_project(doc->doc, po), report);
    } catch (const screw::Error& e) {
        return trap(e);
    } catch (const std::exception& e) {
        g_last_error = std::string("invalid options: ") + e.what();
        return SP_INVALID_INPUT;
    }
}

void sp_string_free(char* s) { delete[] s; }

const char* sp_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
