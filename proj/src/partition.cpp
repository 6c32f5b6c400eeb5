#include "nac/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

namespace nac {

namespace {

bool valid_label(const std::string& s) {
    // labels appear in the text format, so its metacharacters and
    // keywords cannot name points
    if (s.empty() || s == "->") return false;
    if (s == "space" || s == "points" || s == "gen" || s == "map") return false;
    for (char ch : s) {
        if (ch == '|' || ch == '#' || std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Carrier::Carrier(std::vector<std::string> labels) : names(std::move(labels)) {
    if (names.empty()) throw error("carrier must have at least one point");
    for (const auto& s : names) {
        if (!valid_label(s)) throw error("invalid point label '" + s + "'");
    }
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw error("point labels must be distinct");
    }
}

Carrier Carrier::indexed(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Carrier(std::move(labels));
}

int Carrier::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i) {
        if (names[i] == label) return i;
    }
    return -1;
}

Partition Partition::from_block_ids(const std::vector<int>& ids) {
    if (ids.empty()) throw error("partition needs a nonempty carrier");
    Partition p;
    p.n_ = static_cast<int>(ids.size());
    p.id_.resize(ids.size());
    std::unordered_map<int, int> relabel;
    for (int x = 0; x < p.n_; ++x) {
        auto [it, fresh] = relabel.try_emplace(ids[x], static_cast<int>(relabel.size()));
        p.id_[x] = it->second;
        (void)fresh;
    }
    p.count_ = static_cast<int>(relabel.size());
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) throw error("partition needs a nonempty carrier");
    std::vector<int> ids(n, -1);
    int next = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw error("empty block in partition");
        for (int x : block) {
            if (x < 0 || x >= n) throw error("block contains point outside carrier");
            if (ids[x] != -1) throw error("blocks are not disjoint");
            ids[x] = next;
        }
        ++next;
    }
    for (int x = 0; x < n; ++x) {
        if (ids[x] == -1) throw error("blocks do not cover the carrier");
    }
    return from_block_ids(ids);
}

Partition Partition::discrete(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return from_block_ids(ids);
}

Partition Partition::one_block(int n) {
    return from_block_ids(std::vector<int>(n, 0));
}

int Partition::block_id_of(int x) const {
    if (x < 0 || x >= n_) throw error("unknown point index " + std::to_string(x));
    return id_[x];
}

std::vector<int> Partition::block_members(int id) const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        if (id_[x] == id) out.push_back(x);
    }
    if (out.empty()) throw error("unknown block id " + std::to_string(id));
    return out;
}

int Partition::block_min(int id) const {
    for (int x = 0; x < n_; ++x) {
        if (id_[x] == id) return x;
    }
    throw error("unknown block id " + std::to_string(id));
}

std::vector<int> Partition::block_of(int x) const {
    return block_members(block_id_of(x));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(count_);
    for (int x = 0; x < n_; ++x) out[id_[x]].push_back(x);
    return out;
}

bool Partition::operator<(const Partition& other) const {
    return blocks() < other.blocks();
}

bool refines(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw error("refines: carrier mismatch");
    std::vector<int> target(p.block_count(), -1);
    for (int x = 0; x < p.size(); ++x) {
        int b = p.block_id_of(x);
        if (target[b] == -1) {
            target[b] = q.block_id_of(x);
        } else if (target[b] != q.block_id_of(x)) {
            return false;
        }
    }
    return true;
}

Partition meet(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw error("meet: carrier mismatch");
    std::vector<int> ids(p.size());
    for (int x = 0; x < p.size(); ++x) {
        ids[x] = p.block_id_of(x) * q.block_count() + q.block_id_of(x);
    }
    return Partition::from_block_ids(ids);
}

Partition join(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw error("join: carrier mismatch");
    int n = p.size();
    DisjointSet ds(n);
    for (const Partition* part : {&p, &q}) {
        std::vector<int> first(part->block_count(), -1);
        for (int x = 0; x < n; ++x) {
            int b = part->block_id_of(x);
            if (first[b] == -1) {
                first[b] = x;
            } else {
                ds.unite(x, first[b]);
            }
        }
    }
    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) ids[x] = ds.find(x);
    return Partition::from_block_ids(ids);
}

int partition_enumeration_bound() {
    static const int bound = [] {
        if (const char* s = std::getenv("NAC_MAX_BELL")) {
            char* end = nullptr;
            long v = std::strtol(s, &end, 10);
            if (end != s && *end == '\0' && v >= 1 && v <= 16) return static_cast<int>(v);
        }
        return 8;
    }();
    return bound;
}

uint64_t bell_number(int n) {
    if (n < 0) throw error("bell_number: negative argument");
    // Bell triangle; safe in 64 bits well past the enumeration bound.
    std::vector<uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<uint64_t> next{row.back()};
        for (uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

std::vector<Partition> all_partitions(int n) {
    if (n < 1) throw error("all_partitions: carrier must be nonempty");
    if (n > partition_enumeration_bound()) {
        throw error("all_partitions: carrier size " + std::to_string(n) +
                    " exceeds enumeration bound " + std::to_string(partition_enumeration_bound()));
    }
    std::vector<Partition> out;
    out.reserve(bell_number(n));
    // Odometer over restricted growth strings.
    std::vector<int> a(n, 0);
    while (true) {
        out.push_back(Partition::from_block_ids(a));
        int i = n - 1;
        while (i > 0) {
            int max_prev = *std::max_element(a.begin(), a.begin() + i);
            if (a[i] <= max_prev) {
                ++a[i];
                std::fill(a.begin() + i + 1, a.end(), 0);
                break;
            }
            a[i] = 0;
            --i;
        }
        if (i == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> coarsenings(const Partition& p) {
    int k = p.block_count();
    if (k > partition_enumeration_bound()) {
        throw error("coarsenings: block count " + std::to_string(k) +
                    " exceeds enumeration bound " + std::to_string(partition_enumeration_bound()));
    }
    std::vector<Partition> out;
    out.reserve(bell_number(k));
    for (const Partition& grouping : all_partitions(k)) {
        std::vector<int> ids(p.size());
        for (int x = 0; x < p.size(); ++x) ids[x] = grouping.block_id_of(p.block_id_of(x));
        out.push_back(Partition::from_block_ids(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_partition(const Carrier& c, const Partition& p) {
    if (c.size() != p.size()) throw error("format_partition: carrier mismatch");
    std::string out;
    auto blocks = p.blocks();
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0) out += " | ";
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i > 0) out += ' ';
            out += c.names[blocks[b][i]];
        }
    }
    return out;
}

std::string format_set(const Carrier& c, const std::vector<int>& points) {
    std::string out = "{";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i > 0) out += ',';
        if (points[i] < 0 || points[i] >= c.size()) throw error("format_set: unknown point");
        out += c.names[points[i]];
    }
    out += '}';
    return out;
}

}  // namespace nac
