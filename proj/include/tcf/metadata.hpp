#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tcf/errors.hpp"
#include "tcf/gadget.hpp"

namespace tcf {

// Gadget provenance carried inside HGF comment lines, so a composed file
// stays readable by any HGF consumer while allowing confined verification:
//   # tcf:gadget id=gadget3 k=3
//   # tcf:embed 3 7 9 12 15 22     (one line per copy)
struct GadgetMetadata {
    std::string id;
    int k = 0;
    std::vector<std::vector<VertexLabel>> embeddings;

    Gadget instantiate() const {
        if (id == "gadget3") return gadget3();
        if (id.rfind("gadget-k", 0) == 0) return gadget_k(k);
        throw ParamError("unknown gadget id: " + id);
    }

    std::vector<EmbeddedGadget> embedded() const {
        const Gadget g = instantiate();
        std::vector<EmbeddedGadget> out;
        out.reserve(embeddings.size());
        for (const auto& emb : embeddings) out.push_back(EmbeddedGadget{g, emb});
        return out;
    }
};

inline std::vector<std::string> metadata_comments(const GadgetMetadata& meta) {
    std::vector<std::string> lines;
    lines.push_back("tcf:gadget id=" + meta.id + " k=" + std::to_string(meta.k));
    for (const auto& emb : meta.embeddings) {
        std::ostringstream ss;
        ss << "tcf:embed";
        for (VertexLabel v : emb) ss << ' ' << v;
        lines.push_back(ss.str());
    }
    return lines;
}

// Scans an HGF file's comment lines for gadget metadata.
inline std::optional<GadgetMetadata> read_metadata(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    GadgetMetadata meta;
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '#') continue;
        std::istringstream ss(line);
        std::string hash, tag;
        ss >> hash >> tag;
        if (tag == "tcf:gadget") {
            std::string field;
            while (ss >> field) {
                if (field.rfind("id=", 0) == 0) meta.id = field.substr(3);
                if (field.rfind("k=", 0) == 0) meta.k = std::stoi(field.substr(2));
            }
            have_header = true;
        } else if (tag == "tcf:embed") {
            std::vector<VertexLabel> emb;
            long long v;
            while (ss >> v) emb.push_back(static_cast<VertexLabel>(v));
            meta.embeddings.push_back(std::move(emb));
        }
    }
    if (!have_header || meta.id.empty() || meta.embeddings.empty()) return std::nullopt;
    return meta;
}

}  // namespace tcf
