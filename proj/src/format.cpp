#include "nac/format.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace nac {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string stripped = line.substr(0, line.find('#'));
    std::vector<std::string> tokens;
    std::istringstream in(stripped);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

struct PendingSpace {
    std::string name;
    int line = 0;
    std::vector<std::string> labels;
    bool have_points = false;
    Carrier carrier;
    std::vector<Partition> gens;
};

struct PendingMap {
    std::string name;
    std::string domain_name;
    std::string codomain_name;
    int line = 0;
    std::vector<int> table;      // -1 where unassigned
    std::vector<int> row_lines;  // for duplicate-row diagnostics
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Document run() {
        std::istringstream in(text_);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            handle_line(line_no, tokenize(line));
        }
        finish_section(line_no + 1);
        return std::move(doc_);
    }

private:
    void handle_line(int line_no, const std::vector<std::string>& tokens) {
        if (tokens.empty()) return;
        const std::string& head = tokens.front();
        if (head == "space") {
            finish_section(line_no);
            if (tokens.size() != 2) throw parse_error(line_no, "expected: space NAME");
            space_.emplace();
            space_->name = tokens[1];
            space_->line = line_no;
        } else if (head == "points") {
            if (!space_) throw parse_error(line_no, "'points' outside a space section");
            if (space_->have_points) throw parse_error(line_no, "duplicate points line");
            if (tokens.size() < 2) throw parse_error(line_no, "points line needs at least one label");
            space_->labels.assign(tokens.begin() + 1, tokens.end());
            try {
                space_->carrier = Carrier(space_->labels);
            } catch (const error& e) {
                throw parse_error(line_no, e.what());
            }
            space_->have_points = true;
        } else if (head == "gen") {
            if (!space_ || !space_->have_points) {
                throw parse_error(line_no, "'gen' requires a space with a points line");
            }
            try {
                space_->gens.push_back(
                    Partition::from_blocks(space_->carrier.size(), parse_blocks(line_no, tokens)));
            } catch (const error& e) {
                throw parse_error(line_no, e.what());
            }
        } else if (head == "map") {
            finish_section(line_no);
            if (tokens.size() != 5 || tokens[3] != "->") {
                throw parse_error(line_no, "expected: map NAME DOMAIN -> CODOMAIN");
            }
            map_.emplace();
            map_->name = tokens[1];
            map_->domain_name = tokens[2];
            map_->codomain_name = tokens[4];
            map_->line = line_no;
            const NASpace* dom = doc_.find_space(map_->domain_name);
            if (!dom) throw parse_error(line_no, "unknown space '" + map_->domain_name + "'");
            if (!doc_.find_space(map_->codomain_name)) {
                throw parse_error(line_no, "unknown space '" + map_->codomain_name + "'");
            }
            map_->table.assign(dom->size(), -1);
        } else if (map_ && tokens.size() == 3 && tokens[1] == "->") {
            const NASpace& dom = *doc_.find_space(map_->domain_name);
            const NASpace& cod = *doc_.find_space(map_->codomain_name);
            int from = dom.carrier.index_of(tokens[0]);
            if (from < 0) throw parse_error(line_no, "unknown point '" + tokens[0] + "'");
            int to = cod.carrier.index_of(tokens[2]);
            if (to < 0) throw parse_error(line_no, "unknown point '" + tokens[2] + "'");
            if (map_->table[from] != -1) {
                throw parse_error(line_no, "point '" + tokens[0] + "' mapped twice");
            }
            map_->table[from] = to;
        } else {
            throw parse_error(line_no, "unrecognized line");
        }
    }

    std::vector<std::vector<int>> parse_blocks(int line_no, const std::vector<std::string>& tokens) {
        std::vector<std::vector<int>> blocks(1);
        for (size_t i = 1; i < tokens.size(); ++i) {
            if (tokens[i] == "|") {
                blocks.emplace_back();
                continue;
            }
            int idx = space_->carrier.index_of(tokens[i]);
            if (idx < 0) throw parse_error(line_no, "unknown point '" + tokens[i] + "'");
            blocks.back().push_back(idx);
        }
        return blocks;
    }

    void check_fresh_name(const std::string& name, int line_no) {
        if (doc_.find_space(name) || doc_.find_map(name)) {
            throw parse_error(line_no, "duplicate name '" + name + "'");
        }
    }

    void finish_section(int line_no) {
        if (space_) {
            if (!space_->have_points) throw parse_error(space_->line, "space has no points line");
            check_fresh_name(space_->name, space_->line);
            doc_.spaces.push_back(Document::SpaceDecl{
                space_->name, make_space(space_->carrier, std::move(space_->gens))});
            space_.reset();
        }
        if (map_) {
            check_fresh_name(map_->name, map_->line);
            const NASpace& dom = *doc_.find_space(map_->domain_name);
            const NASpace& cod = *doc_.find_space(map_->codomain_name);
            for (int pt = 0; pt < dom.size(); ++pt) {
                if (map_->table[pt] == -1) {
                    throw parse_error(map_->line,
                                      "map '" + map_->name + "' misses point '" +
                                          dom.carrier.names[pt] + "'");
                }
            }
            try {
                doc_.maps.push_back(Document::MapDecl{map_->name, map_->domain_name,
                                                      map_->codomain_name,
                                                      UCMap::make(dom, cod, map_->table)});
            } catch (const error& e) {
                throw parse_error(map_->line, e.what());
            }
            map_.reset();
        }
        (void)line_no;
    }

    const std::string& text_;
    Document doc_;
    std::optional<PendingSpace> space_;
    std::optional<PendingMap> map_;
};

}  // namespace

const NASpace* Document::find_space(const std::string& name) const {
    for (const auto& decl : spaces) {
        if (decl.name == name) return &decl.space;
    }
    return nullptr;
}

const Document::MapDecl* Document::find_map(const std::string& name) const {
    for (const auto& decl : maps) {
        if (decl.name == name) return &decl;
    }
    return nullptr;
}

Document parse(const std::string& text) { return Parser(text).run(); }

std::string format_space(const std::string& name, const NASpace& space) {
    std::string out = "space " + name + "\npoints";
    for (const auto& label : space.carrier.names) out += " " + label;
    out += '\n';
    for (const Partition& g : space.generators) {
        out += "gen " + format_partition(space.carrier, g) + "\n";
    }
    return out;
}

std::string format_map(const Document::MapDecl& decl) {
    std::string out = "map " + decl.name + " " + decl.domain_name + " -> " + decl.codomain_name + "\n";
    for (int pt = 0; pt < decl.map.domain.size(); ++pt) {
        out += decl.map.domain.carrier.names[pt] + " -> " +
               decl.map.codomain.carrier.names[decl.map.table[pt]] + "\n";
    }
    return out;
}

std::string emit(const Document& doc) {
    std::vector<std::string> sections;
    for (const auto& decl : doc.spaces) sections.push_back(format_space(decl.name, decl.space));
    for (const auto& decl : doc.maps) sections.push_back(format_map(decl));
    std::string out;
    for (size_t i = 0; i < sections.size(); ++i) {
        if (i > 0) out += '\n';
        out += sections[i];
    }
    return out;
}

}  // namespace nac
