#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nac/morphism.hpp"

namespace nac {

struct parse_error : error {
    int line;
    parse_error(int line_number, const std::string& message)
        : error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
};

// Named spaces and maps parsed from one .nas file. Names are unique
// across both kinds; maps reference previously declared spaces.
struct Document {
    struct SpaceDecl {
        std::string name;
        NASpace space;
    };
    struct MapDecl {
        std::string name;
        std::string domain_name;
        std::string codomain_name;
        UCMap map;
    };

    std::vector<SpaceDecl> spaces;
    std::vector<MapDecl> maps;

    const NASpace* find_space(const std::string& name) const;
    const MapDecl* find_map(const std::string& name) const;
};

Document parse(const std::string& text);

// Canonical text: declaration order, sorted generators, sorted blocks,
// one blank line between sections. emit(parse(emit(d))) == emit(d).
std::string emit(const Document& doc);

std::string format_space(const std::string& name, const NASpace& space);
std::string format_map(const Document::MapDecl& decl);

}  // namespace nac
